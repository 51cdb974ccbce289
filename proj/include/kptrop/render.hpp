#pragma once

#include <string>

#include "kptrop/evolution.hpp"
#include "kptrop/grid.hpp"
#include "kptrop/poset.hpp"

namespace kptrop {

/// Deterministic SVG of a region grid (colored cells, tie cells hatched).
std::string svg_field(const RegionGrid& grid, int cell_px = 8);

/// Style-keyed dispatcher: "field" paints region cells, "boundaries" draws
/// the extracted segments. Unsupported keys are rejected.
std::string render_svg(const RegionGrid& grid, const FieldSource& source,
                       const std::string& style);

/// Deterministic SVG of extracted boundary segments on a white canvas.
std::string svg_boundaries(const BoundaryExtraction& extraction, const BBox& bbox,
                           int width_px = 512);

/// Graphviz DOT of a poset (rankdir bottom-to-top for order diagrams).
std::string dot_poset(const Poset& poset);

/// DOT of one soliton tree (leaves are the dominating regions).
std::string dot_tree(const SolitonTree& tree);

/// DOT of an evolution chain: one tree cluster per stage, edges labelled by
/// the critical times.
std::string dot_chain(const EvolutionChain& chain);

}  // namespace kptrop
