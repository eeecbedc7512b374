#pragma once

#include "sat3ce/ce3.hpp"
#include "sat3ce/compiler.hpp"
#include "sat3ce/formula.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace sat3ce::testing {

inline Clause make_clause(int a, int b, int c) {
  return Clause{{Literal::from_dimacs(a), Literal::from_dimacs(b),
                 Literal::from_dimacs(c)}};
}

/// (!x1 | x2 | x4) & (x1 | !x3 | x4)
inline Formula two_clause_formula() {
  return Formula(4, {make_clause(-1, 2, 4), make_clause(1, -3, 4)});
}

/// All eight sign patterns over x1, x2, x3: unsatisfiable, every
/// assignment falsifies exactly one clause.
inline Formula all_patterns_formula() {
  std::vector<Clause> cs;
  for (int s = 0; s < 8; ++s)
    cs.push_back(make_clause(s & 1 ? -1 : 1, s & 2 ? -2 : 2, s & 4 ? -3 : 3));
  return Formula(3, std::move(cs));
}

inline Formula single_clause_formula() {
  return Formula(3, {make_clause(1, 2, 3)});
}

/// Best tailoring at B/D = 0.3, F/D = 1.
inline CE3Solution reference_solution() {
  return best_solution(solve(0.3, 1.0, 1.0, 0.2));
}

// Reference values at B = 0.3, D = 1, F = 1, computed with 40-digit
// arithmetic (dense scan of the tailoring function on [-20, 20] at step
// 1e-3, then root polishing).
inline constexpr double kRefE = 2.4589963944928944;
inline constexpr double kRefA = 0.91592089997590717;
inline constexpr double kRefUSat = -2.9847257165521357;
inline constexpr double kRefUUnsat = -1.9020698772845335;
inline constexpr double kRefGap = 1.0826558392676022;
inline constexpr double kMirrorE = -0.45899639449289438;
inline constexpr double kMirrorGap = -1.0255745414081334;

/// Direct truth-table check, independent of clause_class.
inline bool brute_satisfies(const Formula &f, std::uint64_t mask) {
  for (const auto &c : f.clauses()) {
    bool any = false;
    for (const auto &l : c.lits) {
      const bool v = (mask >> (l.var - 1)) & 1u;
      any = any || (l.negated ? !v : v);
    }
    if (!any)
      return false;
  }
  return true;
}

inline std::size_t brute_unsat(const Formula &f, std::uint64_t mask) {
  std::size_t k = 0;
  for (const auto &c : f.clauses()) {
    bool any = false;
    for (const auto &l : c.lits) {
      const bool v = (mask >> (l.var - 1)) & 1u;
      any = any || (l.negated ? !v : v);
    }
    k += !any;
  }
  return k;
}

inline Assignment random_assignment(std::size_t m, std::mt19937_64 &rng) {
  Assignment a(m);
  for (std::size_t i = 0; i < m; ++i)
    a.set(i, rng() & 1u);
  return a;
}

/// Largest B/D for which the satisfied levels can be made degenerate:
/// half the peak second difference of sqrt(1 + x^2) at spacing 2F.
inline double analytic_b_bound(double f) {
  return (std::sqrt(1.0 + 4.0 * f * f) - 1.0) / 2.0;
}

} // namespace sat3ce::testing
