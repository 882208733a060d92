#include "ehlcp/analysis.hpp"

#include <numeric>

#include "ehlcp/linprog.hpp"
#include "ehlcp/parallel.hpp"

namespace ehlcp {

namespace {

// Nontrivial recession direction test: the homogenized constraints admit a
// direction with some coordinate pinned to +1 or -1. Scanning coordinates
// with both signs normalizes away the cone's scale invariance exactly.
bool has_recession_ray(const ConstraintSet& cons) {
  for (int v = 0; v < cons.dim; ++v) {
    for (int sgn : {1, -1}) {
      LinearProgram lp;
      lp.num_vars = cons.dim;
      for (const auto& c : cons.eq) lp.add_eq(c.coeffs, 0);
      for (const auto& c : cons.le) lp.add_le(c.coeffs, 0);
      Vec pin(size_t(cons.dim));
      pin[size_t(v)] = 1;
      lp.add_eq(std::move(pin), sgn);
      if (lp_feasible(lp).status == LpStatus::Optimal) return true;
    }
  }
  return false;
}

// Zero-dimensionality: every coordinate has equal max and min over the piece.
std::optional<Vec> single_point_of(const ConstraintSet& cons) {
  Vec point(size_t(cons.dim));
  for (int v = 0; v < cons.dim; ++v) {
    Rational extent[2];
    for (int s : {0, 1}) {
      LinearProgram lp;
      lp.num_vars = cons.dim;
      for (const auto& c : cons.eq) lp.add_eq(c.coeffs, c.rhs);
      for (const auto& c : cons.le) lp.add_le(c.coeffs, c.rhs);
      Vec obj(size_t(cons.dim));
      obj[size_t(v)] = s ? -1 : 1;
      lp.objective = std::move(obj);
      const LpResult r = lp_max(lp);
      if (r.status != LpStatus::Optimal) return std::nullopt;  // unbounded coordinate
      extent[s] = s ? Rational(-r.value) : r.value;
    }
    if (extent[0] != extent[1]) return std::nullopt;
    point[size_t(v)] = extent[0];
  }
  return point;
}

bool pieces_intersect(const Piece& a, const Piece& b) {
  if (satisfies(b.cons, stack(a.sample)) || satisfies(a.cons, stack(b.sample))) return true;
  LinearProgram lp;
  lp.num_vars = a.cons.dim;
  for (const auto& c : a.cons.eq) lp.add_eq(c.coeffs, c.rhs);
  for (const auto& c : a.cons.le) lp.add_le(c.coeffs, c.rhs);
  for (const auto& c : b.cons.eq) lp.add_eq(c.coeffs, c.rhs);
  for (const auto& c : b.cons.le) lp.add_le(c.coeffs, c.rhs);
  return lp_feasible(lp).status == LpStatus::Optimal;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(size_t(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]); }
  void unite(int a, int b) { parent[size_t(find(a))] = find(b); }
};

}  // namespace

PieceGraph piece_graph(const SolutionSet& s) {
  PieceGraph g;
  g.nodes = int(s.pieces.size());
  const int m = g.nodes;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  std::vector<char> hit(pairs.size(), 0);
  parallel_for(std::int64_t(pairs.size()), [&](std::int64_t idx) {
    const auto [i, j] = pairs[size_t(idx)];
    hit[size_t(idx)] = pieces_intersect(s.pieces[size_t(i)], s.pieces[size_t(j)]) ? 1 : 0;
  });
  for (size_t idx = 0; idx < pairs.size(); ++idx)
    if (hit[idx]) g.edges.push_back(pairs[idx]);
  return g;
}

bool is_bounded(const SolutionSet& s) {
  for (const auto& p : s.pieces)
    if (has_recession_ray(p.cons)) return false;
  return true;
}

bool is_unique(const SolutionSet& s) {
  if (s.pieces.empty()) return false;
  std::optional<Vec> common;
  for (const auto& p : s.pieces) {
    auto pt = single_point_of(p.cons);
    if (!pt) return false;
    if (!common) {
      common = std::move(pt);
    } else if (*common != *pt) {
      return false;
    }
  }
  return true;
}

std::vector<int> graph_components(const SolutionSet& s, const PieceGraph& g) {
  Dsu dsu(int(s.pieces.size()));
  for (const auto& [i, j] : g.edges) dsu.unite(i, j);
  std::vector<int> comp(s.pieces.size());
  std::vector<int> remap(s.pieces.size(), -1);
  int next = 0;
  for (size_t i = 0; i < s.pieces.size(); ++i) {
    const int root = dsu.find(int(i));
    if (remap[size_t(root)] < 0) remap[size_t(root)] = next++;
    comp[i] = remap[size_t(root)];
  }
  return comp;
}

bool component_bounded(const SolutionSet& s, const std::vector<int>& comp_of, int comp) {
  for (size_t i = 0; i < s.pieces.size(); ++i)
    if (comp_of[i] == comp && has_recession_ray(s.pieces[i].cons)) return false;
  return true;
}

bool is_connected(const SolutionSet& s) {
  if (s.pieces.size() <= 1) return true;
  const auto comp = graph_components(s, piece_graph(s));
  for (int c : comp)
    if (c != 0) return false;
  return true;
}

AnalysisReport analyze(const SolutionSet& s) {
  AnalysisReport r;
  r.pieces = int(s.pieces.size());
  r.empty = s.pieces.empty();
  r.graph = piece_graph(s);
  r.bounded = is_bounded(s);
  r.unique = is_unique(s);
  if (s.pieces.size() <= 1) {
    r.connected = true;
  } else {
    const auto comp = graph_components(s, r.graph);
    r.connected = true;
    for (int c : comp)
      if (c != 0) r.connected = false;
  }
  return r;
}

}  // namespace ehlcp
