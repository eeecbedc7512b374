#include "sat3ce/compiler.hpp"

#include "sat3ce/error.hpp"
#include "sat3ce/summation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace sat3ce {

std::size_t Netlist::inverter_count() const {
  return std::size_t(std::count_if(branches.begin(), branches.end(),
                                   [](const Branch &b) { return b.inverter; }));
}

Netlist build_netlist(const Formula &f) {
  Netlist net;
  net.m = f.num_vars();
  net.n = f.num_clauses();
  net.register_wires.resize(net.m);
  for (std::uint32_t v = 0; v < net.m; ++v)
    net.register_wires[v].var = v + 1;
  net.branches.reserve(3 * net.n);
  net.ce3_nodes.reserve(net.n);
  for (std::size_t c = 0; c < net.n; ++c) {
    CE3Node node{c, {}};
    for (int s = 0; s < 3; ++s) {
      const Literal &lit = f.clause(c).lits[s];
      node.branches[s] = net.branches.size();
      net.branches.push_back({c, s + 1, lit.var, lit.negated});
      ++net.register_wires[lit.var - 1].fanout;
    }
    net.ce3_nodes.push_back(node);
  }
  return net;
}

EnergyModel::EnergyModel(Formula f, CE3Solution s)
    : formula_(std::move(f)), solution_(s),
      levels_(level_energies(s.params)) {
  occurrence_.resize(formula_.num_vars());
  for (std::size_t c = 0; c < formula_.num_clauses(); ++c)
    for (int s = 0; s < 3; ++s)
      occurrence_[formula_.clause(c).lits[s].var - 1].push_back({c, s});
  e_floor_ = double(formula_.num_clauses()) * solution_.u_sat;
}

EnergyModel compile(const Formula &f, const CE3Solution &s, double gap_min) {
  const CE3Params &p = s.params;
  for (double v : {p.a, p.b, p.d, p.e, p.f, s.u_sat, s.u_unsat, s.gap})
    if (!std::isfinite(v))
      throw Error(ErrorCode::InvalidSolution, "non-finite 3CE parameter");
  if (p.d <= 0)
    throw Error(ErrorCode::InvalidSolution, "D must be positive");
  if (gap_min < 0)
    gap_min = 0.2 * p.d;

  const double tol = 1e-9 * p.d;
  const double resid = degeneracy_residual(p);
  if (resid > tol)
    throw Error(ErrorCode::InvalidSolution,
                fmt::format("satisfied levels not degenerate (residual "
                            "{:.3g} D)",
                            resid / p.d));
  const auto u = level_energies(p);
  if (std::abs(u[1] - s.u_sat) > tol || std::abs(u[0] - s.u_unsat) > tol ||
      std::abs((s.u_unsat - s.u_sat) - s.gap) > tol)
    throw Error(ErrorCode::InvalidSolution,
                "recorded levels disagree with the parameters");
  if (s.gap < gap_min)
    throw Error(ErrorCode::InvalidSolution,
                fmt::format("gap {:.17g} below required minimum {:.17g}",
                            s.gap, gap_min));
  return EnergyModel(f, s);
}

double EnergyModel::total_energy(const Assignment &a) const {
  if (a.size() != formula_.num_vars())
    throw Error(ErrorCode::LengthMismatch,
                "assignment has " + std::to_string(a.size()) + " bits, model has " +
                    std::to_string(formula_.num_vars()) + " variables");
  CompensatedSum sum;
  for (const auto &c : formula_.clauses())
    sum += levels_[clause_class(c, a)];
  return sum.value();
}

double EnergyModel::flip_delta(const Assignment &a, std::uint32_t var) const {
  if (a.size() != formula_.num_vars())
    throw Error(ErrorCode::LengthMismatch, "assignment length mismatch");
  if (var < 1 || var > formula_.num_vars())
    throw Error(ErrorCode::IndexOutOfRange,
                "variable " + std::to_string(var) + " outside 1.." +
                    std::to_string(formula_.num_vars()));
  CompensatedSum delta;
  for (const auto &occ : occurrence_[var - 1]) {
    const Clause &c = formula_.clause(occ.clause);
    const int k = clause_class(c, a);
    const int k_new = literal_value(c.lits[occ.slot], a) ? k - 1 : k + 1;
    delta += levels_[k_new] - levels_[k];
  }
  return delta.value();
}

} // namespace sat3ce
