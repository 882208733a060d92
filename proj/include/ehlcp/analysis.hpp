#pragma once

#include "ehlcp/solver.hpp"

namespace ehlcp {

// Intersection graph of the solution pieces: edge (i,j) iff the combined
// constraint sets of pieces i and j are feasible.
struct PieceGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
};

PieceGraph piece_graph(const SolutionSet& s);

/// Every piece has a trivial recession cone. Empty set -> true (convention).
bool is_bounded(const SolutionSet& s);

/// All pieces are zero-dimensional and coincide in one point.
/// Empty set -> false (uniqueness requires existence).
bool is_unique(const SolutionSet& s);

/// The piece-intersection graph is connected. Empty set -> true (convention,
/// flagged in reports).
bool is_connected(const SolutionSet& s);

/// Component ids (by piece index) of the piece graph, and whether each
/// component is bounded.
std::vector<int> graph_components(const SolutionSet& s, const PieceGraph& g);
bool component_bounded(const SolutionSet& s, const std::vector<int>& comp_of, int comp);

struct AnalysisReport {
  bool bounded = true;
  bool unique = false;
  bool connected = true;
  int pieces = 0;
  PieceGraph graph;
  bool empty = false;  // conventions above apply vacuously
};

AnalysisReport analyze(const SolutionSet& s);

}  // namespace ehlcp
