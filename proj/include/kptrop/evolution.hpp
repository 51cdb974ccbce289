#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kptrop/tree.hpp"

namespace kptrop {

struct EvolutionEvent {
  Rational time;
  std::vector<IndexSet> rotations;  // >1 entries = simultaneous (degenerate)
  SolitonTree after;
};

/// A soliton evolution as a chain of trees: one right rotation per generic
/// event, from the left comb to the right comb.
struct EvolutionChain {
  SolitonTree initial;
  std::vector<EvolutionEvent> events;
  bool degenerate = false;
  std::optional<int> table_type;  // Tamari T4 chain type, M = 5 only
  std::vector<std::string> notes;
};

EvolutionChain classify_evolution(const SolitonConfig& config,
                                  const TimeOverrides& overrides = {});

/// Level-exchange refinement: inserts the y-crossing events between
/// rotations, yielding an S_r-code chain.
struct RefinedStep {
  enum class Kind { Rotation, LevelExchange } kind;
  Rational time;
  std::vector<IndexSet> rotations;            // Rotation steps
  std::array<int, 3> swap_upper{}, swap_lower{};  // LevelExchange steps
  LevelSeq level_code_after;
};

struct RefinedChain {
  LevelSeq initial_level_code;
  std::vector<RefinedStep> steps;
};

RefinedChain refine_with_levels(const SolitonConfig& config, const EvolutionChain& chain,
                                const TimeOverrides& overrides = {});

/// Table-of-nine region for M = 5, decided by mu = t4 - t4_{12345} and
/// lambda = t5 - t5_{123456}.
struct TableRegion {
  int type = 0;  // 1..9, 0 = boundary/degenerate
  Rational mu, lambda;
  std::string report;
};

TableRegion table_conditions(const SolitonConfig& config, const TimeOverrides& overrides = {});

/// Critical-time labels of the chain in order, e.g. {"1234","1245",...}.
std::vector<std::string> chain_time_labels(const EvolutionChain& chain);

}  // namespace kptrop
