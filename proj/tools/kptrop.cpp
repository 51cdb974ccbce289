#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "kptrop/evolution.hpp"
#include "kptrop/grid.hpp"
#include "kptrop/json_io.hpp"
#include "kptrop/poset.hpp"
#include "kptrop/render.hpp"
#include "kptrop/visibility.hpp"

#include <json.hpp>

using namespace kptrop;
using nlohmann::json;

namespace {

Rational parse_or_throw(const std::string& text, const std::string& what) {
  auto q = parse_rational(text);
  if (!q) throw std::invalid_argument("bad rational for " + what + ": '" + text + "'");
  return *q;
}

BBox parse_bbox(const std::string& text) {
  auto parts = parse_rational_list(text);
  if (parts.size() != 4) throw std::invalid_argument("--bbox wants x0,x1,y0,y1");
  return BBox{parts[0], parts[1], parts[2], parts[3]};
}

std::pair<int, int> parse_res(const std::string& text) {
  auto x = text.find('x');
  if (x == std::string::npos) throw std::invalid_argument("--res wants NxN");
  return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

std::vector<Rational> parse_times_arg(std::string text) {
  if (text.rfind("t=", 0) == 0) text = text.substr(2);
  return parse_rational_list(text);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

json poset_to_json(const Poset& poset, bool with_chains, bool with_classes) {
  json j;
  j["nodes"] = poset.node_labels;
  json edges = json::array();
  for (const auto& e : poset.edges)
    edges.push_back({{"from", poset.node_labels[static_cast<std::size_t>(e.from)]},
                     {"to", poset.node_labels[static_cast<std::size_t>(e.to)]},
                     {"label", e.label}});
  j["edges"] = edges;
  if (with_chains) {
    json chains = json::array();
    for (const auto& c : maximal_chains(poset)) chains.push_back(chain_word(c));
    j["maximal_chains"] = chains;
  }
  if (with_classes) {
    json classes = json::array();
    for (const auto& cls : chain_classes(poset)) classes.push_back(cls);
    j["chain_classes"] = classes;
  }
  return j;
}

void print_chain_text(const EvolutionChain& chain) {
  std::cout << "initial tree: Y=" << seq_str(chain.initial.code)
            << " S=" << seq_str(chain.initial.level_code) << "\n";
  for (std::size_t n = 0; n < chain.initial.triples.size(); ++n) {
    const auto& t = chain.initial.triples[n];
    std::cout << "  y" << IndexSet{t[0], t[1], t[2]}.str() << " = "
              << to_string(chain.initial.y_values[n]) << "\n";
  }
  for (const auto& ev : chain.events) {
    std::cout << "t = " << to_string(ev.time) << ":";
    for (const auto& r : ev.rotations) std::cout << " t" << r.str();
    std::cout << " -> Y=" << seq_str(ev.after.code) << "\n";
  }
  if (chain.table_type) std::cout << "type " << *chain.table_type << " of the nine chains\n";
  for (const auto& note : chain.notes) std::cout << "note: " << note << "\n";
}

SolitonConfig random_config(std::mt19937& gen, int M) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  auto rat = [&]() { return Rational(num(gen), den(gen)); };
  std::vector<Rational> p;
  while (static_cast<int>(p.size()) < M + 1) {
    Rational q = rat();
    bool dup = false;
    for (const auto& u : p) dup = dup || u == q;
    if (!dup) p.push_back(q);
  }
  std::sort(p.begin(), p.end());
  std::vector<Rational> c;
  for (int i = 0; i <= M; ++i) c.push_back(rat() * 2);
  std::map<int, Rational> times;
  for (int r = 4; r <= M; ++r) times[r] = rat();
  return validate_config(M, std::move(p), std::move(c), std::move(times)).config;
}

int run_check_visibility(unsigned seed, int cases) {
  std::mt19937 gen(seed);
  long checks = 0, a9_only = 0;
  for (int trial = 0; trial < cases; ++trial) {
    int M = 4 + trial % 3;
    auto cfg = random_config(gen, M);
    for (int size = 3; size <= M; ++size) {
      for (const auto& parent : subsets_of_size(M + 1, size + 1)) {
        Rational cv = critical_value(cfg, parent).value;
        for (int side = 0; side < 2; ++side) {
          TimeOverrides ov;
          ov[size] = side == 0 ? Rational(cv - 1) : Rational(cv + 1);
          auto report = prune_level(cfg, size, ov);  // throws on disagreement
          checks += static_cast<long>(subsets_of_size(M + 1, size).size());
          a9_only += static_cast<long>(report.a9_only_kills.size());
        }
      }
    }
  }
  std::cout << "visibility: " << checks
            << " analytic/oracle comparisons, 0 disagreements; parent-line-only kills "
               "(conjecture candidates): "
            << a9_only << "\n";
  return 0;
}

int run_check_braid(unsigned seed, int cases) {
  std::mt19937 gen(seed);
  long checked = 0;
  for (int trial = 0; trial < cases * 50; ++trial) {
    std::uniform_int_distribution<int> rd(3, 7);
    int r = rd(gen);
    LevelSeq s;
    for (int i = 1; i <= r; ++i) {
      std::uniform_int_distribution<int> nd(1, i);
      s.push_back(nd(gen));
    }
    std::uniform_int_distribution<int> sd(1, r - 2);
    int site = sd(gen);
    std::string S = std::to_string(site), T = std::to_string(site + 1);
    for (const auto& [w1, w2] : std::vector<std::pair<std::string, std::string>>{
             {"a" + S + "a" + T + "a" + S, "a" + T + "b" + S + "a" + T},
             {"b" + S + "b" + T + "a" + S, "a" + T + "b" + S + "b" + T},
             {"a" + S + "b" + T + "b" + S, "b" + T + "b" + S + "a" + T},
             {"b" + S + "b" + T + "b" + S, "b" + T + "b" + S + "b" + T}}) {
      try {
        LevelSeq r1 = apply_word(s, parse_op_word(w1));
        LevelSeq r2 = apply_word(s, parse_op_word(w2));
        if (r1 != r2) throw ConsistencyError("braid identity violated at " + seq_str(s));
        ++checked;
      } catch (const std::invalid_argument&) {
        // outside the identity's domain
      }
    }
  }
  std::cout << "braid: " << checked << " identity instances verified\n";
  return 0;
}

int run_check_tables(unsigned seed, int cases) {
  std::mt19937 gen(seed);
  int done = 0;
  for (int trial = 0; trial < cases * 4 && done < cases; ++trial) {
    auto cfg = random_config(gen, 5);
    TableRegion region;
    EvolutionChain chain;
    try {
      region = table_conditions(cfg);
      if (region.type == 0) continue;
      chain = classify_evolution(cfg);
    } catch (const DegenerateEvent&) {
      continue;
    }
    if (!chain.table_type || *chain.table_type != region.type)
      throw ConsistencyError("table region and realized chain disagree: " + region.report);
    ++done;
  }
  std::cout << "tables: " << done << " region/chain agreements\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tropical KP line-soliton classifier"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "evolution as a Tamari chain");
  std::string classify_config, classify_format = "text";
  bool refine_levels = false;
  classify->add_option("--config", classify_config)->required();
  classify->add_flag("--refine-levels", refine_levels);
  classify->add_option("--format", classify_format)->check(CLI::IsMember({"json", "text"}));

  auto* evolve = app.add_subcommand("evolve", "render frames at the given times");
  std::string evolve_config, evolve_times, evolve_out, evolve_format = "svg";
  evolve->add_option("--config", evolve_config)->required();
  evolve->add_option("--times", evolve_times)->required();
  evolve->add_option("--out", evolve_out)->required();
  evolve->add_option("--format", evolve_format)->check(CLI::IsMember({"svg"}));

  auto* plot = app.add_subcommand("plot", "tropical field plot at one event");
  std::string plot_config, plot_bbox = "-20,20,-20,20", plot_res = "64x64", plot_out;
  std::string plot_t = "0", plot_t4, plot_t5;
  bool plot_exact = false;
  plot->add_option("--config", plot_config)->required();
  plot->add_option("--t", plot_t);
  plot->add_option("--t4", plot_t4);
  plot->add_option("--t5", plot_t5);
  plot->add_option("--bbox", plot_bbox);
  plot->add_option("--res", plot_res);
  plot->add_option("--out", plot_out)->required();
  plot->add_flag("--exact", plot_exact);

  auto* tam = app.add_subcommand("tamari", "Tamari lattice");
  int tam_r = 3;
  std::string tam_format = "dot";
  bool tam_chains = false, tam_classes = false;
  tam->add_option("--r", tam_r)->required();
  tam->add_option("--format", tam_format)->check(CLI::IsMember({"dot", "json"}));
  tam->add_flag("--chains", tam_chains);
  tam->add_flag("--classes", tam_classes);

  auto* perm = app.add_subcommand("permutohedron", "permutohedron poset");
  int perm_r = 3;
  std::string perm_format = "dot";
  bool perm_chains = false;
  perm->add_option("--r", perm_r)->required();
  perm->add_option("--format", perm_format)->check(CLI::IsMember({"dot", "json"}));
  perm->add_flag("--chains", perm_chains);

  auto* posets = app.add_subcommand("posets", "simplex / hypercube families");
  std::string posets_kind = "simplex", posets_format = "dot";
  int posets_m = 3;
  posets->add_option("--kind", posets_kind)->check(CLI::IsMember({"simplex", "hypercube"}));
  posets->add_option("--M", posets_m)->required();
  posets->add_option("--format", posets_format)->check(CLI::IsMember({"dot", "json"}));

  auto* general = app.add_subcommand("general", "wedge-product solutions");
  std::string gen_spec, gen_out, gen_bbox = "-20,20,-20,20", gen_res = "64x64", gen_t = "0";
  bool gen_plot = false, gen_events = false;
  int gen_limit = 0;
  general->add_option("--spec", gen_spec)->required();
  general->add_flag("--plot", gen_plot);
  general->add_flag("--events", gen_events);
  general->add_option("--limit", gen_limit);
  general->add_option("--out", gen_out);
  general->add_option("--bbox", gen_bbox);
  general->add_option("--res", gen_res);
  general->add_option("--t", gen_t);

  auto* check = app.add_subcommand("check", "randomized cross-check suites");
  std::string check_suite = "all";
  unsigned check_seed = 12345;
  int check_cases = 20;
  check->add_option("--suite", check_suite)
      ->check(CLI::IsMember({"all", "visibility", "braid", "tables"}));
  check->add_option("--seed", check_seed);
  check->add_option("--cases", check_cases);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      auto cfg = config_from_file(classify_config);
      auto chain = classify_evolution(cfg);
      if (classify_format == "json") {
        json j = json::parse(chain_to_json(chain));
        if (refine_levels)
          j["refined"] = json::parse(refined_to_json(refine_with_levels(cfg, chain)));
        std::cout << j.dump(2) << "\n";
      } else {
        print_chain_text(chain);
        if (refine_levels) {
          auto refined = refine_with_levels(cfg, chain);
          std::cout << "level chain: S=" << seq_str(refined.initial_level_code);
          for (const auto& step : refined.steps) {
            if (step.kind == RefinedStep::Kind::LevelExchange)
              std::cout << " -[swap y"
                        << IndexSet{step.swap_upper[0], step.swap_upper[1],
                                    step.swap_upper[2]}
                               .str()
                        << "/y"
                        << IndexSet{step.swap_lower[0], step.swap_lower[1],
                                    step.swap_lower[2]}
                               .str()
                        << "]-> " << seq_str(step.level_code_after);
            else
              std::cout << " -[rot]-> " << seq_str(step.level_code_after);
          }
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*evolve) {
      auto cfg = config_from_file(evolve_config);
      auto times = parse_times_arg(evolve_times);
      std::filesystem::create_directories(evolve_out);
      // Frame extent: cover the visible triple points across all frames.
      Rational x_lo(-1), x_hi(1), y_lo(-1), y_hi(1);
      bool first = true;
      for (const auto& t : times) {
        TimeOverrides ov{{3, t}};
        for (const auto& cv : prune_level(cfg, 3, ov).visible) {
          auto pt = critical_point(cfg, cv.indices, ov);
          Rational x = pt.coordinates.level(1), y = pt.coordinates.level(2);
          if (first || x < x_lo) x_lo = x;
          if (first || x > x_hi) x_hi = x;
          if (first || y < y_lo) y_lo = y;
          if (first || y > y_hi) y_hi = y;
          first = false;
        }
      }
      Rational pad = (x_hi - x_lo + y_hi - y_lo) / 4 + 10;
      BBox box{x_lo - pad, x_hi + pad, y_lo - pad, y_hi + pad};
      for (std::size_t i = 0; i < times.size(); ++i) {
        TimeOverrides ov{{3, times[i]}};
        auto grid = tropical_field(cfg, box, 96, 96, ov);
        auto extraction = extract_boundaries(grid, cfg);
        write_file(evolve_out + "/frame_" + std::to_string(i) + ".svg",
                   svg_boundaries(extraction, box));
      }
      std::cout << "wrote " << times.size() << " frames to " << evolve_out << "\n";
      return 0;
    }

    if (*plot) {
      auto cfg = config_from_file(plot_config);
      TimeOverrides ov{{3, parse_or_throw(plot_t, "--t")}};
      if (!plot_t4.empty()) ov[4] = parse_or_throw(plot_t4, "--t4");
      if (!plot_t5.empty()) ov[5] = parse_or_throw(plot_t5, "--t5");
      BBox box = parse_bbox(plot_bbox);
      auto [nx, ny] = parse_res(plot_res);
      auto grid = tropical_field(cfg, box, nx, ny, ov);
      if (plot_exact) {
        // Grayscale heatmap of the exact amplitude.
        std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                          std::to_string(nx * 8) + "\" height=\"" + std::to_string(ny * 8) +
                          "\">\n";
        double peak = 1e-9;
        std::vector<double> vals;
        for (int iy = 0; iy < ny; ++iy)
          for (int ix = 0; ix < nx; ++ix) {
            SpacetimePoint pt = cfg.point_from({grid.cell_cx(ix), grid.cell_cy(iy)}, ov);
            vals.push_back(exact_u(cfg, pt));
            peak = std::max(peak, vals.back());
          }
        for (int iy = 0; iy < ny; ++iy)
          for (int ix = 0; ix < nx; ++ix) {
            int lum = 255 - static_cast<int>(
                                255 * vals[static_cast<std::size_t>(iy * nx + ix)] / peak);
            char color[8];
            std::snprintf(color, sizeof(color), "#%02x%02x%02x", lum, lum, lum);
            svg += "<rect x=\"" + std::to_string(ix * 8) + "\" y=\"" +
                   std::to_string((ny - 1 - iy) * 8) + "\" width=\"8\" height=\"8\" fill=\"" +
                   std::string(color) + "\"/>\n";
          }
        svg += "</svg>\n";
        write_file(plot_out, svg);
      } else {
        write_file(plot_out, svg_field(grid));
      }
      std::cout << "wrote " << plot_out << "\n";
      return 0;
    }

    if (*tam) {
      auto poset = tamari(tam_r);
      if (tam_format == "dot" && !tam_chains && !tam_classes)
        std::cout << dot_poset(poset);
      else
        std::cout << poset_to_json(poset, tam_chains, tam_classes).dump(2) << "\n";
      return 0;
    }
    if (*perm) {
      auto poset = permutohedron(perm_r);
      if (perm_format == "dot" && !perm_chains)
        std::cout << dot_poset(poset);
      else
        std::cout << poset_to_json(poset, perm_chains, false).dump(2) << "\n";
      return 0;
    }
    if (*posets) {
      auto poset = family_poset(
          posets_kind == "simplex" ? PosetKind::Simplex : PosetKind::Hypercube, posets_m);
      if (posets_format == "dot")
        std::cout << dot_poset(poset);
      else
        std::cout << poset_to_json(poset, false, false).dump(2) << "\n";
      return 0;
    }

    if (*general) {
      auto input = wedge_from_file(gen_spec);
      auto tau = build_tau(input.config, input.spec, true);
      if (gen_limit > 0) {
        auto reduced = p_limit(tau, gen_limit);
        json j;
        j["M"] = reduced.config.M;
        json p = json::array(), c = json::array();
        for (const auto& q : reduced.config.p) p.push_back(to_string(q));
        for (const auto& q : reduced.config.c) c.push_back(to_string(q));
        j["p"] = p;
        j["c"] = c;
        json terms = json::array();
        for (const auto& [S, A] : reduced.coeffs)
          terms.push_back({{"indices", S.str()}, {"A", to_string(A)}});
        j["terms"] = terms;
        j["regular"] = reduced.regular;
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      if (gen_events) {
        const auto& p = input.config.p;
        if (p.size() != 4 || p[0] + p[3] != p[1] + p[2])
          throw std::invalid_argument(
              "--events needs the parallel parametrization p1+p4 = p2+p3");
        Rational q = p[1] + p[2];
        Rational a = p[2] - p[1];
        Rational b = p[1] - p[0];
        auto ev = parallel_events(q, a, b, input.config.c);
        json j;
        j["t0"] = to_string(ev.t0);
        j["delta_t"] = ev.delta_t.str();
        j["delta_t_approx"] = ev.delta_t.approx();
        j["t_minus_approx"] = ev.t_minus.approx();
        j["t_plus_approx"] = ev.t_plus.approx();
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      if (gen_out.empty()) {
        json j;
        json terms = json::array();
        for (const auto& [S, A] : tau.coeffs)
          terms.push_back({{"indices", S.str()}, {"A", to_string(A)}});
        j["terms"] = terms;
        j["regular"] = tau.regular;
        if (!tau.negative_terms.empty()) {
          json negs = json::array();
          for (const auto& S : tau.negative_terms) negs.push_back(S.str());
          j["negative_terms"] = negs;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      TimeOverrides ov{{3, parse_or_throw(gen_t, "--t")}};
      BBox box = parse_bbox(gen_bbox);
      auto [nx, ny] = parse_res(gen_res);
      auto grid = tropical_field(tau, box, nx, ny, ov);
      auto bounded = grid.interior_only_keys();
      write_file(gen_out, svg_field(grid));
      std::cout << "wrote " << gen_out << "\n";
      for (const auto& k : bounded)
        std::cout << "bounded dominating region candidate: " << k.str() << "\n";
      return 0;
    }

    if (*check) {
      int rc = 0;
      if (check_suite == "all" || check_suite == "visibility")
        rc = std::max(rc, run_check_visibility(check_seed, check_cases));
      if (check_suite == "all" || check_suite == "braid")
        rc = std::max(rc, run_check_braid(check_seed, check_cases));
      if (check_suite == "all" || check_suite == "tables")
        rc = std::max(rc, run_check_tables(check_seed, check_cases));
      return rc;
    }
  } catch (const ResourceGuard& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
