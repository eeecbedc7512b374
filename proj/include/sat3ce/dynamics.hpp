#pragma once

#include "sat3ce/compiler.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sat3ce {

struct ConstantSchedule {
  double temperature = 1.0;
};

/// T = t0 * ratio^floor(step / stage_length).
struct GeometricSchedule {
  double t0 = 1.0;
  double ratio = 0.97;
  std::uint64_t stage_length = 100;
};

class Schedule {
public:
  Schedule(ConstantSchedule c);
  Schedule(GeometricSchedule g);

  /// Temperature used for the step with 0-based index `step`.
  double temperature(std::uint64_t step) const;

  /// Geometric(T0 = 2 gap, r = 0.97, stage = 10 m).
  static Schedule default_for(const EnergyModel &mod);

  /// Parses `const:T` or `geo:T0,r,stage`.
  static Schedule parse(const std::string &text);

  const std::variant<ConstantSchedule, GeometricSchedule> &variant() const {
    return v_;
  }

private:
  std::variant<ConstantSchedule, GeometricSchedule> v_;
};

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;
  std::optional<double> target_energy;
  std::uint64_t record_every = 1000;
  /// Overrides the seeded random start.
  std::optional<Assignment> initial;
  /// Recompute the energy from scratch at every trace point and keep the
  /// largest deviation in RunResult::max_trace_drift.
  bool verify_trace = false;
};

struct TracePoint {
  std::uint64_t step = 0;
  double energy = 0.0;

  friend bool operator==(const TracePoint &, const TracePoint &) = default;
};

struct RunResult {
  std::uint64_t seed = 0;
  double best_energy = 0.0;
  Assignment best_assignment;
  double final_energy = 0.0;
  std::optional<std::uint64_t> steps_to_target;
  std::uint64_t steps = 0;
  std::vector<TracePoint> trace;
  std::uint64_t accept_count = 0;
  std::uint64_t reject_count = 0;
  double max_trace_drift = 0.0;

  friend bool operator==(const RunResult &, const RunResult &) = default;
};

/// Energies within this distance of the target count as reaching it, and
/// flips with |d| within it are treated as moves along a plateau.
double energy_tolerance(const EnergyModel &mod);

/// Metropolis acceptance: always for d <= 0, otherwise with probability
/// exp(-d / T). `u` is a uniform draw from [0, 1).
bool metropolis_accept(double d, double temperature, double u);

/// Single-flip Metropolis dynamics driven by std::mt19937_64(seed).
/// Each step proposes one variable chosen uniformly. Stops after max_steps
/// or once the energy reaches target_energy.
RunResult metropolis_run(const EnergyModel &mod, const RunConfig &cfg,
                         const Schedule &sch);

struct RunSummary {
  std::uint64_t seed = 0;
  double best_energy = 0.0;
  std::optional<std::uint64_t> steps_to_target;
  std::uint64_t accepts = 0;
  std::uint64_t rejects = 0;

  friend bool operator==(const RunSummary &, const RunSummary &) = default;
};

RunSummary summarize(const RunResult &r);

struct RestartReport {
  double success_rate = 0.0;
  std::optional<double> median_steps_to_target;
  std::vector<RunSummary> per_run;

  friend bool operator==(const RestartReport &, const RestartReport &) = default;
};

/// Runs seeds cfg.seed + i for i < restarts, in parallel. per_run is ordered
/// by i. Requires cfg.target_energy (Error(MissingTarget)). When
/// `first_run` is non-null the full result of run 0 is stored there.
RestartReport multi_restart(const EnergyModel &mod, std::uint64_t restarts,
                            const RunConfig &cfg, const Schedule &sch,
                            unsigned threads = 0,
                            RunResult *first_run = nullptr);

} // namespace sat3ce
