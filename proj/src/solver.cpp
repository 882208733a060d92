#include "ehlcp/solver.hpp"

#include <cmath>

#include "ehlcp/linprog.hpp"
#include "ehlcp/parallel.hpp"
#include "ehlcp/rng.hpp"
#include "ehlcp/wprops.hpp"

namespace ehlcp {

Vec ehlcp_residual(const MatrixTuple& c, const std::vector<Vec>& d, const SolutionTuple& x) {
  const int n = c.n, k = c.k;
  if (int(d.size()) != k - 1) throw std::invalid_argument("ehlcp_residual: expected k-1 bound vectors");
  if (int(x.xs.size()) != k + 1) throw std::invalid_argument("ehlcp_residual: tuple arity mismatch");
  for (const auto& v : x.xs)
    if (int(v.size()) != n) throw std::invalid_argument("ehlcp_residual: vector length mismatch");

  Vec out;
  out.reserve(size_t(k + 1) * n);
  Vec head = c.c(0) * x.xs[0];
  for (int i = 1; i <= k; ++i) head = sub(head, c.c(i) * x.xs[size_t(i)]);
  out.insert(out.end(), head.begin(), head.end());

  Vec block = min(x.xs[0], x.xs[1]);
  out.insert(out.end(), block.begin(), block.end());
  for (int j = 1; j <= k - 1; ++j) {
    block = min(sub(d[size_t(j - 1)], x.xs[size_t(j)]), x.xs[size_t(j + 1)]);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

namespace {

LinearProgram feasibility_program(const ConstraintSet& cons) {
  LinearProgram lp;
  lp.num_vars = cons.dim;
  for (const auto& c : cons.eq) lp.add_eq(c.coeffs, c.rhs);
  for (const auto& c : cons.le) lp.add_le(c.coeffs, c.rhs);
  return lp;
}

// a subset of b, decided by maximizing the violation of each b-constraint
// over a. Both pieces are nonempty.
bool piece_subset(const Piece& a, const Piece& b) {
  if (!satisfies(b.cons, stack(a.sample))) return false;
  const int dim = a.cons.dim;
  for (const auto& c : b.cons.le) {
    // bounded above by rhs on b; may be unbounded on a
    LinearProgram lp = feasibility_program(a.cons);
    lp.objective = c.coeffs;
    const LpResult r = lp_max(lp);
    if (r.status == LpStatus::Unbounded || r.value > c.rhs) return false;
  }
  for (const auto& c : b.cons.eq) {
    for (int s : {1, -1}) {
      Vec obj(static_cast<size_t>(dim));
      for (size_t i = 0; i < obj.size(); ++i) obj[i] = s * c.coeffs[i];
      LinearProgram lp = feasibility_program(a.cons);
      lp.objective = std::move(obj);
      const LpResult r = lp_max(lp);
      if (r.status == LpStatus::Unbounded || r.value > s * c.rhs) return false;
    }
  }
  return true;
}

}  // namespace

SolutionSet solve_all(const Instance& inst) {
  const auto branches = all_branches(inst.n(), inst.k());
  std::vector<std::optional<Piece>> found(branches.size());
  parallel_for(std::int64_t(branches.size()), [&](std::int64_t i) {
    ConstraintSet cons = branch_constraints(inst, branches[size_t(i)]);
    const LpResult r = lp_feasible(feasibility_program(cons));
    if (r.status != LpStatus::Optimal) return;
    Piece p{branches[size_t(i)], std::move(cons), unstack(r.witness, inst.n(), inst.k())};
    if (!verify_solution(inst, p.sample)) throw std::logic_error("solve_all: branch sample fails verification");
    found[size_t(i)] = std::move(p);
  });

  std::vector<Piece> pieces;
  for (auto& f : found)
    if (f) pieces.push_back(std::move(*f));

  // Containment dedup over the surviving pieces, keeping the earliest branch
  // when two pieces coincide.
  std::vector<bool> dead(pieces.size(), false);
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      if (dead[j]) continue;
      const bool ij = piece_subset(pieces[i], pieces[j]);
      const bool ji = piece_subset(pieces[j], pieces[i]);
      if (ji) {
        dead[j] = true;
      } else if (ij) {
        dead[i] = true;
        break;
      }
    }
  }
  SolutionSet out;
  for (size_t i = 0; i < pieces.size(); ++i)
    if (!dead[i]) out.pieces.push_back(std::move(pieces[i]));
  return out;
}

bool piece_membership(const SolutionSet& s, const Vec& stacked) {
  for (const auto& p : s.pieces)
    if (satisfies(p.cons, stacked)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Degree of the piecewise-affine residual map.

namespace {

enum class SolveKind { Unique, Inconsistent, Underdetermined };

struct AffineSolve {
  SolveKind kind;
  Vec x;
  int det_sign = 0;
};

// Rank-revealing elimination on [a | b] classifying the affine system.
AffineSolve classify_solve(Matrix a, Vec b) {
  const int n = a.rows();
  int det_sign = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int p = rank;
    while (p < n && a.at(p, col) == 0) ++p;
    if (p == n) {
      det_sign = 0;
      continue;
    }
    if (p != rank) {
      for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(rank, j));
      std::swap(b[size_t(p)], b[size_t(rank)]);
      det_sign = -det_sign;
    }
    const Rational piv = a.at(rank, col);
    if (piv < 0) det_sign = -det_sign;
    for (int i = rank + 1; i < n; ++i) {
      if (a.at(i, col) == 0) continue;
      const Rational f = a.at(i, col) / piv;
      for (int j = col; j < n; ++j) a.at(i, j) -= f * a.at(rank, j);
      b[size_t(i)] -= f * b[size_t(rank)];
    }
    ++rank;
  }
  if (rank < n) {
    for (int i = rank; i < n; ++i)
      if (b[size_t(i)] != 0) return {SolveKind::Inconsistent, {}, 0};
    return {SolveKind::Underdetermined, {}, 0};
  }
  // Back substitution (a is upper triangular on the pivot columns = all).
  Vec x(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    Rational s = b[size_t(i)];
    for (int j = i + 1; j < n; ++j) s -= a.at(i, j) * x[size_t(j)];
    x[size_t(i)] = s / a.at(i, i);
  }
  return {SolveKind::Unique, std::move(x), det_sign};
}

}  // namespace

DegreeResult degree(const MatrixTuple& c, const std::vector<Vec>& d, std::uint64_t rng_seed,
                    int max_retries) {
  const int n = c.n, k = c.k;
  if (int(d.size()) != k - 1) throw std::invalid_argument("degree: expected k-1 bound vectors");
  for (const auto& dj : d)
    if (int(dj.size()) != n || !all_positive(dj))
      throw std::invalid_argument("degree: bound vectors must be positive length-n");

  if (k * n > 30)
    throw std::invalid_argument("degree: 2^(k*n) linearity cells exceed the supported desk scale");

  DegreeResult res;
  if (!r0_w(c).yes()) {
    res.kind = DegreeResult::Kind::UndefinedNotR0W;
    return res;
  }

  const int dim = (k + 1) * n;
  const std::int64_t cells = std::int64_t(1) << (k * n);
  SplitRng rng(rng_seed);

  for (int attempt = 0; attempt < max_retries; ++attempt) {
    Vec p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      long long num = 0;
      while (num == 0) num = rng.uniform_int(-768, 768);
      p[size_t(i)] = Rational(num, 64);
    }

    bool redraw = false;
    long long total = 0;
    std::vector<std::pair<std::vector<int>, int>> counted;

    for (std::int64_t cell = 0; cell < cells && !redraw; ++cell) {
      std::vector<int> select(size_t(k) * n);
      for (size_t b = 0; b < select.size(); ++b) select[b] = int((cell >> b) & 1);

      Matrix a(dim, dim);
      Vec rhs(static_cast<size_t>(dim));
      for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j) a.at(r, j) = c.c(0).at(r, j);
        for (int i = 1; i <= k; ++i)
          for (int j = 0; j < n; ++j) a.at(r, i * n + j) = -c.c(i).at(r, j);
        rhs[size_t(r)] = p[size_t(r)];
      }
      for (int j = 1; j <= k; ++j) {
        for (int i = 0; i < n; ++i) {
          const int row = j * n + i;
          const bool second_active = select[size_t((j - 1) * n + i)] != 0;
          if (second_active) {
            a.at(row, j * n + i) = 1;  // x_j,i = 0
          } else if (j == 1) {
            a.at(row, i) = 1;  // x0_i = 0
          } else {
            a.at(row, (j - 1) * n + i) = -1;  // x_{j-1},i = d_{j-1},i
            rhs[size_t(row)] = -d[size_t(j - 2)][size_t(i)];
          }
        }
      }

      AffineSolve sol = classify_solve(a, rhs);
      if (sol.kind == SolveKind::Inconsistent) continue;
      if (sol.kind == SolveKind::Underdetermined) {
        redraw = true;  // non-generic target hit a singular cell
        break;
      }

      // Strict interior test: the inactive argument of every min pair must
      // stay positive (the active one is pinned to zero).
      bool interior = true;
      for (int j = 1; j <= k && interior; ++j) {
        for (int i = 0; i < n; ++i) {
          const bool second_active = select[size_t((j - 1) * n + i)] != 0;
          Rational other;
          if (second_active) {
            other = (j == 1) ? sol.x[size_t(i)]
                             : d[size_t(j - 2)][size_t(i)] - sol.x[size_t((j - 1) * n + i)];
          } else {
            other = sol.x[size_t(j * n + i)];
          }
          if (other == 0) {
            redraw = true;
            interior = false;
            break;
          }
          if (other < 0) {
            interior = false;
            break;
          }
        }
      }
      if (redraw) break;
      if (!interior) continue;

      total += sol.det_sign;
      counted.emplace_back(std::move(select), sol.det_sign);
    }

    if (!redraw) {
      res.kind = DegreeResult::Kind::Value;
      res.value = total;
      res.generic_point = std::move(p);
      res.counted = std::move(counted);
      return res;
    }
  }
  res.kind = DegreeResult::Kind::GenericityExhausted;
  return res;
}

// ---------------------------------------------------------------------------
// Floating-point semismooth Newton.

namespace {

std::vector<double> residual_f(const Instance& inst, const std::vector<double>& x) {
  const int n = inst.n(), k = inst.k();
  std::vector<double> r(size_t(k + 1) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0;
    for (int j = 0; j < n; ++j) s += to_double(inst.tuple.c(0).at(i, j)) * x[size_t(j)];
    for (int m = 1; m <= k; ++m)
      for (int j = 0; j < n; ++j) s -= to_double(inst.tuple.c(m).at(i, j)) * x[size_t(m * n + j)];
    r[size_t(i)] = s - to_double(inst.q[size_t(i)]);
  }
  for (int j = 1; j <= k; ++j) {
    for (int i = 0; i < n; ++i) {
      const double first =
          (j == 1) ? x[size_t(i)] : to_double(inst.d[size_t(j - 2)][size_t(i)]) - x[size_t((j - 1) * n + i)];
      const double second = x[size_t(j * n + i)];
      r[size_t(j * n + i)] = std::min(first, second);
    }
  }
  return r;
}

double max_norm(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

double sq_norm(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

// One element of the generalized Jacobian of the min map; ties activate the
// second argument (the x_{j+1} side of each pair).
bool newton_step(const Instance& inst, const std::vector<double>& x, const std::vector<double>& g,
                 std::vector<double>& delta) {
  const int n = inst.n(), k = inst.k();
  const int dim = (k + 1) * n;
  std::vector<double> a(size_t(dim) * dim, 0.0);
  auto at = [&](int i, int j) -> double& { return a[size_t(i) * dim + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = to_double(inst.tuple.c(0).at(i, j));
    for (int m = 1; m <= k; ++m)
      for (int j = 0; j < n; ++j) at(i, m * n + j) = -to_double(inst.tuple.c(m).at(i, j));
  }
  for (int j = 1; j <= k; ++j) {
    for (int i = 0; i < n; ++i) {
      const int row = j * n + i;
      const double first =
          (j == 1) ? x[size_t(i)] : to_double(inst.d[size_t(j - 2)][size_t(i)]) - x[size_t((j - 1) * n + i)];
      const double second = x[size_t(j * n + i)];
      if (first < second) {
        if (j == 1) {
          at(row, i) = 1.0;
        } else {
          at(row, (j - 1) * n + i) = -1.0;
        }
      } else {
        at(row, j * n + i) = 1.0;
      }
    }
  }

  // Solve a * delta = -g with partial pivoting.
  std::vector<double> rhs(g.size());
  for (size_t i = 0; i < g.size(); ++i) rhs[i] = -g[i];
  std::vector<int> perm(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) perm[size_t(i)] = i;
  for (int col = 0; col < dim; ++col) {
    int p = col;
    for (int i = col + 1; i < dim; ++i)
      if (std::fabs(at(i, col)) > std::fabs(at(p, col))) p = i;
    if (std::fabs(at(p, col)) < 1e-12) return false;
    if (p != col) {
      for (int j = 0; j < dim; ++j) std::swap(at(p, j), at(col, j));
      std::swap(rhs[size_t(p)], rhs[size_t(col)]);
    }
    for (int i = col + 1; i < dim; ++i) {
      const double f = at(i, col) / at(col, col);
      if (f == 0) continue;
      for (int j = col; j < dim; ++j) at(i, j) -= f * at(col, j);
      rhs[size_t(i)] -= f * rhs[size_t(col)];
    }
  }
  delta.assign(size_t(dim), 0.0);
  for (int i = dim - 1; i >= 0; --i) {
    double s = rhs[size_t(i)];
    for (int j = i + 1; j < dim; ++j) s -= at(i, j) * delta[size_t(j)];
    delta[size_t(i)] = s / at(i, i);
  }
  return true;
}

// Best rational approximation with bounded denominator (continued fractions).
std::optional<Rational> snap_rational(double v, long long max_den, double tol) {
  if (!std::isfinite(v)) return std::nullopt;
  double x = v;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(x);
    if (fl > 9e17 || fl < -9e17) return std::nullopt;
    const long long a = (long long)fl;
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double approx = double(p1) / double(q1);
    if (std::fabs(approx - v) <= tol) return Rational(p1, q1);
    const double frac = x - fl;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (q1 > 0 && std::fabs(double(p1) / double(q1) - v) <= tol) return Rational(p1, q1);
  return std::nullopt;
}

Rational exact_from_double(double v) {
  // Exact binary expansion of the ieee value.
  int exp = 0;
  const double m = std::frexp(v, &exp);
  const long long mant = (long long)std::ldexp(m, 53);
  Rational r(mant);
  const int shift = exp - 53;
  if (shift >= 0) {
    r *= Rational(BigInt(1) << shift);
  } else {
    r /= Rational(BigInt(1) << (-shift));
  }
  return r;
}

}  // namespace

NewtonResult solve_newton(const Instance& inst, const SolutionTuple& start, double tol, int max_iter) {
  if (tol <= 0) throw std::invalid_argument("solve_newton: tol must be positive");
  const int n = inst.n(), k = inst.k();
  if (int(start.xs.size()) != k + 1) throw std::invalid_argument("solve_newton: start arity mismatch");

  std::vector<double> x;
  for (const auto& v : start.xs) {
    if (int(v.size()) != n) throw std::invalid_argument("solve_newton: start vector length mismatch");
    for (const auto& r : v) x.push_back(to_double(r));
  }

  NewtonResult out;
  std::vector<double> g = residual_f(inst, x);
  for (int it = 0; it < max_iter; ++it) {
    out.iterations = it;
    out.residual = max_norm(g);
    if (out.residual <= tol) {
      out.success = true;
      break;
    }
    std::vector<double> delta;
    if (!newton_step(inst, x, g, delta)) return out;  // singular Jacobian element

    const double base = sq_norm(g);
    double step = 1.0;
    bool accepted = false;
    while (step > 1e-14) {
      std::vector<double> trial(x.size());
      for (size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * delta[i];
      std::vector<double> gt = residual_f(inst, trial);
      if (sq_norm(gt) <= (1.0 - 1e-4 * step) * base) {
        x = std::move(trial);
        g = std::move(gt);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) return out;  // line search stagnated
  }
  out.residual = max_norm(g);
  if (out.residual > tol) {
    out.success = false;
    return out;
  }
  out.success = true;

  // Snap to nearby rationals and re-verify exactly if the snap succeeds.
  SolutionTuple snapped = SolutionTuple::zero(n, k);
  bool snap_ok = true;
  for (int j = 0; j <= k && snap_ok; ++j) {
    for (int i = 0; i < n; ++i) {
      const double v = x[size_t(j * n + i)];
      auto r = snap_rational(v, 1000000, 1e-9 * std::max(1.0, std::fabs(v)));
      if (!r) {
        snap_ok = false;
        break;
      }
      snapped.xs[size_t(j)][size_t(i)] = *r;
    }
  }
  if (snap_ok && verify_solution(inst, snapped)) {
    out.x = std::move(snapped);
    out.exact_verified = true;
  } else {
    out.x = SolutionTuple::zero(n, k);
    for (int j = 0; j <= k; ++j)
      for (int i = 0; i < n; ++i) out.x.xs[size_t(j)][size_t(i)] = exact_from_double(x[size_t(j * n + i)]);
    out.exact_verified = false;
  }
  return out;
}

}  // namespace ehlcp
