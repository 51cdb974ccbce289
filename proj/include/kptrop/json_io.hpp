#pragma once

#include <string>

#include "kptrop/config.hpp"
#include "kptrop/evolution.hpp"
#include "kptrop/visibility.hpp"
#include "kptrop/wedge.hpp"

namespace kptrop {

/// {"M": 5, "p": ["-2","-3/2",...], "c": [...], "times": {"t4":"-2","t5":"-1"}}
/// Rationals must be "num/den" or integer strings; floats are rejected.
SolitonConfig config_from_json(const std::string& text);
SolitonConfig config_from_file(const std::string& path);

/// {"M": 3, "p": [...], "c": [...],
///  "factors": [[{"index":1,"sign":1},{"index":2,"sign":1}], ...]}
struct WedgeInput {
  SolitonConfig config;
  WedgeSpec spec;
};
WedgeInput wedge_from_json(const std::string& text);
WedgeInput wedge_from_file(const std::string& path);

std::string chain_to_json(const EvolutionChain& chain);
std::string refined_to_json(const RefinedChain& refined);
std::string level_report_to_json(const LevelReport& report);

}  // namespace kptrop
