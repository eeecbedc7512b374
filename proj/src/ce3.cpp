#include "sat3ce/ce3.hpp"

#include "sat3ce/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

#include <fmt/format.h>

namespace sat3ce {

double level_energy(const CE3Params &p, int k) {
  const double s = 3.0 - 2.0 * k;
  return p.a * s + p.b * (s * s - 3.0) / 2.0 - std::hypot(p.d, p.e + p.f * s);
}

std::array<double, 4> level_energies(const CE3Params &p) {
  return {level_energy(p, 0), level_energy(p, 1), level_energy(p, 2),
          level_energy(p, 3)};
}

double triple_energy(const CE3Params &p, bool l1, bool l2, bool l3) {
  const double s1 = l1 ? -1.0 : 1.0;
  const double s2 = l2 ? -1.0 : 1.0;
  const double s3 = l3 ? -1.0 : 1.0;
  const double sum = s1 + s2 + s3;
  return p.a * sum + p.b * (s1 * s2 + s1 * s3 + s2 * s3) -
         std::hypot(p.d, p.e + p.f * sum);
}

double degeneracy_residual(const CE3Params &p) {
  const auto u = level_energies(p);
  return std::max(std::abs(u[1] - u[2]), std::abs(u[2] - u[3]));
}

CE3Solution make_solution(const CE3Params &p) {
  const auto u = level_energies(p);
  return {p, u[1], u[0], u[0] - u[1]};
}

namespace {

// Tailoring function in units of D, as a function of x = E - F:
//   psi(x) = h(x + 2f) - 2 h(x) + h(x - 2f) - 4b,  h(u) = sqrt(1 + u^2).
// Differences of h are rewritten as (u - v)(u + v) / (h(u) + h(v)).
double psi(double x, double b, double f) {
  const double hp = std::hypot(1.0, x + 2.0 * f);
  const double h0 = std::hypot(1.0, x);
  const double hm = std::hypot(1.0, x - 2.0 * f);
  return 4.0 * f * ((x + f) / (hp + h0) - (x - f) / (h0 + hm)) - 4.0 * b;
}

double default_window(double b, double f) {
  const double w = 10.0 * (std::abs(f) + std::abs(b) + 1.0) /
                   std::min(std::max(std::abs(f), 1e-3), 1.0);
  return std::min(w, 1e3);
}

double bisect(double lo, double hi, double plo, double b, double f,
              const SolveOptions &opts) {
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < opts.max_iterations; ++it) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    const double pm = psi(mid, b, f);
    if (std::abs(pm) <= opts.tolerance)
      break;
    if ((pm < 0) == (plo < 0)) {
      lo = mid;
      plo = pm;
    } else {
      hi = mid;
    }
  }
  return mid;
}

void check_finite(double v, const char *what) {
  if (!std::isfinite(v))
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be finite");
}

} // namespace

double tailoring_function(double b, double d, double f, double e) {
  return d * psi((e - f) / d, b / d, f / d);
}

std::vector<CE3Solution> solve_or_empty(double b, double d, double f,
                                        double gap_min,
                                        const SolveOptions &opts) {
  check_finite(b, "B");
  check_finite(d, "D");
  check_finite(f, "F");
  check_finite(gap_min, "gap_min");
  if (d <= 0)
    throw Error(ErrorCode::InvalidArgument, "D must be positive");
  if (gap_min < 0)
    throw Error(ErrorCode::InvalidArgument, "gap_min must be non-negative");
  if (opts.brackets < 2 || opts.max_iterations < 1)
    throw Error(ErrorCode::InvalidArgument, "invalid root search options");

  const double bn = b / d, fn = f / d;
  // With F = 0 the tailoring function is the constant -4B: no isolated roots.
  if (fn == 0.0)
    return {};

  const double window = opts.window > 0 ? opts.window : default_window(bn, fn);
  const int steps = opts.brackets / 2;

  // psi is even in x, so search x = t >= 0 and mirror.
  std::vector<double> roots;
  double t_prev = 0.0;
  double p_prev = psi(0.0, bn, fn);
  if (p_prev == 0.0)
    roots.push_back(0.0);
  for (int i = 1; i <= steps; ++i) {
    const double t = window * i / steps;
    const double p = psi(t, bn, fn);
    if (p == 0.0)
      roots.push_back(t);
    else if (p_prev != 0.0 && (p < 0) != (p_prev < 0))
      roots.push_back(bisect(t_prev, t, p_prev, bn, fn, opts));
    t_prev = t;
    p_prev = p;
  }

  std::vector<CE3Solution> out;
  auto consider = [&](double e_norm) {
    const double e = e_norm * d;
    // U1 = U2 fixes the bias.
    const double a = 0.5 * (std::hypot(d, e + f) - std::hypot(d, e - f));
    const CE3Solution s = make_solution({a, b, d, e, f});
    if (s.gap >= gap_min && degeneracy_residual(s.params) <= 1e-9 * d)
      out.push_back(s);
  };
  for (double t : roots) {
    consider(fn + t);
    if (t > 0.0)
      consider(fn - t);
  }
  std::sort(out.begin(), out.end(),
            [](const CE3Solution &x, const CE3Solution &y) {
              return x.params.e < y.params.e;
            });
  return out;
}

std::vector<CE3Solution> solve(double b, double d, double f, double gap_min,
                               const SolveOptions &opts) {
  auto sols = solve_or_empty(b, d, f, gap_min, opts);
  if (sols.empty())
    throw Error(ErrorCode::NoSolution,
                fmt::format("no 3CE tailoring for B/D={:.17g}, F/D={:.17g} "
                            "with gap >= {:.17g} D",
                            b / d, f / d, gap_min / d));
  return sols;
}

const CE3Solution &best_solution(const std::vector<CE3Solution> &sols) {
  if (sols.empty())
    throw Error(ErrorCode::NoSolution, "empty solution list");
  const CE3Solution *best = &sols.front();
  for (const auto &s : sols)
    if (s.gap > best->gap ||
        (s.gap == best->gap && s.params.e < best->params.e))
      best = &s;
  return *best;
}

std::size_t RegionGrid::feasible_count() const {
  return std::size_t(std::count_if(cells.begin(), cells.end(),
                                   [](const RegionCell &c) { return c.feasible; }));
}

namespace {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * double(i) / double(n - 1);
  v.back() = hi;
  return v;
}

} // namespace

RegionGrid scan_region(const ScanRequest &req, unsigned threads) {
  for (double v : {req.b_min, req.b_max, req.f_min, req.f_max, req.gap_min})
    if (!std::isfinite(v))
      throw Error(ErrorCode::InvalidRange, "scan bounds must be finite");
  if (req.nb < 2 || req.nf < 2)
    throw Error(ErrorCode::InvalidRange, "grid sizes must be at least 2");
  if (!(req.b_min < req.b_max) || !(req.f_min < req.f_max))
    throw Error(ErrorCode::InvalidRange, "scan ranges must satisfy min < max");
  if (req.gap_min < 0)
    throw Error(ErrorCode::InvalidRange, "gap_min must be non-negative");

  RegionGrid grid;
  grid.b_axis = linspace(req.b_min, req.b_max, req.nb);
  grid.f_axis = linspace(req.f_min, req.f_max, req.nf);
  grid.cells.resize(req.nb * req.nf);

  auto solve_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < req.nf; ++j) {
      auto sols = solve_or_empty(grid.b_axis[i], 1.0, grid.f_axis[j],
                                 req.gap_min);
      auto &cell = grid.cells[i * req.nf + j];
      cell.feasible = !sols.empty();
      if (cell.feasible)
        cell.best = best_solution(sols);
    }
  };

  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = unsigned(std::min<std::size_t>(threads, req.nb));
  if (threads <= 1) {
    for (std::size_t i = 0; i < req.nb; ++i)
      solve_row(i);
    return grid;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < req.nb; i = next++)
        solve_row(i);
    });
  pool.clear();
  return grid;
}

void write_region_csv(std::ostream &out, const RegionGrid &grid) {
  out << "b_over_d,f_over_d,feasible,a_over_d,e_over_d,gap_over_d\n";
  for (std::size_t i = 0; i < grid.b_axis.size(); ++i)
    for (std::size_t j = 0; j < grid.f_axis.size(); ++j) {
      const auto &c = grid.at(i, j);
      out << fmt::format("{:.17g},{:.17g},{}", grid.b_axis[i], grid.f_axis[j],
                         c.feasible ? 1 : 0);
      if (c.feasible && c.best) {
        const auto &s = *c.best;
        const double d = s.params.d;
        out << fmt::format(",{:.17g},{:.17g},{:.17g}\n", s.params.a / d,
                           s.params.e / d, s.gap / d);
      } else {
        out << ",,,\n";
      }
    }
}

void write_region_pgm(std::ostream &out, const RegionGrid &grid) {
  const std::size_t nb = grid.b_axis.size(), nf = grid.f_axis.size();
  out << "P2\n" << nf << ' ' << nb << "\n255\n";
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nf; ++j) {
      if (j)
        out << ' ';
      out << (grid.at(i, j).feasible ? 0 : 255);
    }
    out << '\n';
  }
}

} // namespace sat3ce
