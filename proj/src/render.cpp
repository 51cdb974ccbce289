#include "kptrop/render.hpp"

#include <cstdio>
#include <map>
#include <stdexcept>

namespace kptrop {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// Fixed palette cycled by key order of first appearance.
const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
                          "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1170aa", "#a3cce9"};

}  // namespace

std::string svg_field(const RegionGrid& grid, int cell_px) {
  const int w = grid.nx * cell_px, h = grid.ny * cell_px;
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\">\n";
  std::map<IndexSet, int> color_of;
  for (int iy = 0; iy < grid.ny; ++iy)
    for (int ix = 0; ix < grid.nx; ++ix) {
      const IndexSet& k = grid.key_at(ix, iy);
      auto [it, fresh] = color_of.try_emplace(k, static_cast<int>(color_of.size()));
      (void)fresh;
      std::size_t cell = static_cast<std::size_t>(iy) * static_cast<std::size_t>(grid.nx) +
                         static_cast<std::size_t>(ix);
      const char* fill = grid.tie[cell] ? "#000000" : kPalette[it->second % 12];
      // y axis points up: flip rows.
      int py = (grid.ny - 1 - iy) * cell_px;
      svg += "<rect x=\"" + std::to_string(ix * cell_px) + "\" y=\"" + std::to_string(py) +
             "\" width=\"" + std::to_string(cell_px) + "\" height=\"" +
             std::to_string(cell_px) + "\" fill=\"" + fill + "\"><title>" + k.str() +
             "</title></rect>\n";
    }
  svg += "</svg>\n";
  return svg;
}

std::string render_svg(const RegionGrid& grid, const FieldSource& source,
                       const std::string& style) {
  if (style == "field") return svg_field(grid);
  if (style == "boundaries") return svg_boundaries(extract_boundaries(grid, source), grid.bbox);
  throw std::invalid_argument("render_svg: unsupported style key '" + style + "'");
}

std::string svg_boundaries(const BoundaryExtraction& extraction, const BBox& bbox, int width_px) {
  double x0 = to_double(bbox.x0), x1 = to_double(bbox.x1);
  double y0 = to_double(bbox.y0), y1 = to_double(bbox.y1);
  double scale = width_px / (x1 - x0);
  int height_px = static_cast<int>((y1 - y0) * scale + 0.5);
  auto px = [&](double x) { return (x - x0) * scale; };
  auto py = [&](double y) { return (y1 - y) * scale; };
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width_px) +
         "\" height=\"" + std::to_string(height_px) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& seg : extraction.segments) {
    svg += "<line x1=\"" + fmt(px(seg.x1)) + "\" y1=\"" + fmt(py(seg.y1)) + "\" x2=\"" +
           fmt(px(seg.x2)) + "\" y2=\"" + fmt(py(seg.y2)) +
           "\" stroke=\"#1a1a1a\" stroke-width=\"1.5\"><title>" + seg.left_key.str() + "|" +
           seg.right_key.str() + " u=" + to_string(seg.amplitude) + "</title></line>\n";
  }
  for (const auto& tp : extraction.triple_points) {
    svg += "<circle cx=\"" + fmt(px(tp.x)) + "\" cy=\"" + fmt(py(tp.y)) +
           "\" r=\"3\" fill=\"#d62728\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string dot_poset(const Poset& poset) {
  std::string dot = "digraph poset {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (int i = 0; i < poset.node_count(); ++i)
    dot += "  n" + std::to_string(i) + " [label=\"" + poset.node_labels[static_cast<std::size_t>(i)] +
           "\"];\n";
  for (const auto& e : poset.edges)
    dot += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
           e.label + "\"];\n";
  dot += "}\n";
  return dot;
}

namespace {

void dot_tree_nodes(const SolitonTree& tree, const std::string& prefix, std::string& dot) {
  for (int n = 1; n <= tree.nodes(); ++n) {
    const auto& t = tree.triples[static_cast<std::size_t>(n - 1)];
    dot += "  " + prefix + "n" + std::to_string(n) + " [label=\"y" +
           IndexSet{t[0], t[1], t[2]}.str() + "\"];\n";
  }
  for (int n = 1; n <= tree.nodes(); ++n) {
    const auto& nd = tree.shape.nodes[static_cast<std::size_t>(n)];
    for (int child : {nd.left, nd.right}) {
      if (child > 0)
        dot += "  " + prefix + "n" + std::to_string(n) + " -> " + prefix + "n" +
               std::to_string(child) + ";\n";
      else
        dot += "  " + prefix + "n" + std::to_string(n) + " -> " + prefix + "leaf" +
               std::to_string(-child) + ";\n";
    }
  }
  std::vector<bool> is_leaf_used(static_cast<std::size_t>(tree.nodes()) + 2, false);
  for (int n = 1; n <= tree.nodes(); ++n) {
    const auto& nd = tree.shape.nodes[static_cast<std::size_t>(n)];
    if (nd.left < 0) is_leaf_used[static_cast<std::size_t>(-nd.left)] = true;
    if (nd.right < 0) is_leaf_used[static_cast<std::size_t>(-nd.right)] = true;
  }
  for (std::size_t l = 1; l < is_leaf_used.size(); ++l)
    if (is_leaf_used[l])
      dot += "  " + prefix + "leaf" + std::to_string(l) + " [shape=plaintext, label=\"" +
             std::to_string(l) + "|" + std::to_string(l + 1) + "\"];\n";
}

}  // namespace

std::string dot_tree(const SolitonTree& tree) {
  std::string dot = "digraph tree {\n  node [shape=ellipse];\n";
  dot_tree_nodes(tree, "", dot);
  dot += "}\n";
  return dot;
}

std::string dot_chain(const EvolutionChain& chain) {
  std::string dot = "digraph chain {\n  compound=true;\n  node [shape=ellipse];\n";
  auto cluster = [&](const SolitonTree& tree, int stage) {
    dot += " subgraph cluster" + std::to_string(stage) + " {\n  label=\"stage " +
           std::to_string(stage) + " (Y=" + seq_str(tree.code) + ")\";\n";
    dot_tree_nodes(tree, "s" + std::to_string(stage) + "_", dot);
    dot += " }\n";
  };
  cluster(chain.initial, 0);
  for (std::size_t e = 0; e < chain.events.size(); ++e) {
    cluster(chain.events[e].after, static_cast<int>(e) + 1);
    std::string label;
    for (const auto& rot : chain.events[e].rotations) {
      if (!label.empty()) label += ",";
      label += "t" + rot.str();
    }
    label += " = " + to_string(chain.events[e].time);
    dot += "  s" + std::to_string(e) + "_n1 -> s" + std::to_string(e + 1) + "_n1 [label=\"" +
           label + "\", ltail=cluster" + std::to_string(e) + ", lhead=cluster" +
           std::to_string(e + 1) + "];\n";
  }
  dot += "}\n";
  return dot;
}

}  // namespace kptrop
