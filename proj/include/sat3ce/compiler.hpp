#pragma once

#include "sat3ce/ce3.hpp"
#include "sat3ce/formula.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace sat3ce {

// --- Machine description --------------------------------------------------

struct RegisterWire {
  std::uint32_t var = 0;  // 1-based
  std::size_t fanout = 0; // clause slots fed by this wire
};

/// Transmission wire from a register wire into one 3CE input.
struct Branch {
  std::size_t clause = 0; // 0-based
  int slot = 1;           // 1..3
  std::uint32_t var = 0;
  bool inverter = false;
};

struct CE3Node {
  std::size_t clause = 0;
  std::array<std::size_t, 3> branches{}; // indices into Netlist::branches
};

struct Netlist {
  std::uint32_t m = 0;
  std::size_t n = 0;
  std::vector<RegisterWire> register_wires;
  std::vector<Branch> branches;
  std::vector<CE3Node> ce3_nodes;

  std::size_t inverter_count() const;
};

/// One register wire per variable, one branch per clause literal (inverted
/// when the literal is negated) and one 3CE per clause.
Netlist build_netlist(const Formula &f);

// --- Energy landscape -----------------------------------------------------

struct Occurrence {
  std::size_t clause = 0;
  int slot = 0; // 0..2
};

/// Energy landscape of the compiled machine. Every clause is evaluated by
/// an identical 3CE; wires and inverters carry no energy, so the total is
/// the sum of the 3CE level energies. Immutable after construction.
class EnergyModel {
public:
  const Formula &formula() const { return formula_; }
  const CE3Solution &solution() const { return solution_; }
  const std::array<double, 4> &levels() const { return levels_; }
  /// Occurrences of 1-based variable `var`.
  const std::vector<Occurrence> &occurrences(std::uint32_t var) const {
    return occurrence_[var - 1];
  }
  double e_floor() const { return e_floor_; }
  double gap() const { return solution_.gap; }
  double u_sat() const { return solution_.u_sat; }
  std::uint32_t num_vars() const { return formula_.num_vars(); }
  std::size_t num_clauses() const { return formula_.num_clauses(); }

  /// Sum of per-clause level energies (compensated).
  double total_energy(const Assignment &a) const;

  /// total_energy(a with `var` flipped) - total_energy(a), touching only the
  /// clauses that contain `var`.
  double flip_delta(const Assignment &a, std::uint32_t var) const;

private:
  friend EnergyModel compile(const Formula &, const CE3Solution &, double);
  EnergyModel(Formula f, CE3Solution s);

  Formula formula_;
  CE3Solution solution_;
  std::array<double, 4> levels_{};
  std::vector<std::vector<Occurrence>> occurrence_;
  double e_floor_ = 0.0;
};

/// Checks `s` (degenerate satisfied levels to 1e-9 D, gap >= gap_min,
/// consistent recorded levels) and builds the model. A negative `gap_min`
/// selects 0.2 D. Throws Error(InvalidSolution).
EnergyModel compile(const Formula &f, const CE3Solution &s,
                    double gap_min = -1.0);

inline double total_energy(const EnergyModel &mod, const Assignment &a) {
  return mod.total_energy(a);
}

inline double flip_delta(const EnergyModel &mod, const Assignment &a,
                         std::uint32_t var) {
  return mod.flip_delta(a, var);
}

} // namespace sat3ce
