#pragma once

#include "sat3ce/compiler.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace sat3ce {

struct SpectrumLevel {
  double energy = 0.0;
  std::uint64_t degeneracy = 0;

  friend bool operator==(const SpectrumLevel &, const SpectrumLevel &) = default;
};

struct SpectrumReport {
  std::uint32_t m = 0;
  std::vector<SpectrumLevel> levels; ///< ascending energy
  double ground_energy = 0.0;
  /// Ground-state assignments as masks (bit i = variable i+1), ascending.
  std::vector<std::uint64_t> ground_masks;
  /// True when ground_masks was cut at SpectrumOptions::ground_limit.
  bool ground_truncated = false;

  std::uint64_t ground_degeneracy() const {
    return levels.empty() ? 0 : levels.front().degeneracy;
  }
  std::vector<Assignment> ground_assignments() const;

  friend bool operator==(const SpectrumReport &, const SpectrumReport &) = default;
};

struct SpectrumOptions {
  std::uint32_t limit = 24;
  unsigned threads = 1; ///< 0 = hardware concurrency
  std::size_t ground_limit = std::numeric_limits<std::size_t>::max();
};

/// Visits all 2^m assignments along a Gray code, updating the energy with
/// flip_delta, and buckets energies within 1e-9 D. The hypercube is split
/// into fixed prefix subcubes, so the report does not depend on `threads`.
/// Throws Error(TooLarge) when m exceeds the limit.
SpectrumReport enumerate_spectrum(const EnergyModel &mod,
                                  const SpectrumOptions &opts = {});

/// Energy of every assignment, indexed by mask. `incremental` selects the
/// Gray-code walk; otherwise each energy is a full resummation.
std::vector<double> all_energies(const EnergyModel &mod, bool incremental,
                                 std::uint32_t limit = 22);

struct EncodingReport {
  bool ok = false;
  std::uint64_t sat_count = 0;
  std::uint64_t ground_degeneracy = 0;
  std::size_t min_unsat = 0;
  double ground_energy = 0.0;
  /// e_floor + gap * min_unsat
  double expected_ground_energy = 0.0;
};

/// Certifies that the ground states of `mod` are exactly the satisfying
/// assignments of `f` (or, for unsatisfiable f, that the ground energy is
/// e_floor + gap * min_unsat). Satisfaction is counted with evaluate(),
/// independently of energies.
EncodingReport check_encoding(const Formula &f, const EnergyModel &mod,
                              const SpectrumOptions &opts = {});

} // namespace sat3ce
