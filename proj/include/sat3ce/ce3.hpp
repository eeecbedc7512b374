#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace sat3ce {

/// Parameters of a three-literal clause evaluator.
///
/// a: one-body bias, b: two-body coupling, d: half-splitting of the
/// two-level responser (must be > 0), e: external field, f: field step
/// contributed by each wire. All in the same energy unit; the responser
/// dipole is fixed to 1.
struct CE3Params {
  double a = 0.0;
  double b = 0.0;
  double d = 1.0;
  double e = 0.0;
  double f = 0.0;

  friend bool operator==(const CE3Params &, const CE3Params &) = default;
};

/// Energy of a 3CE whose three literals contain `k` true values (k in 0..3).
///
/// Evaluated in spin form: with S = 3 - 2k,
///   U(S) = a*S + b*(S^2 - 3)/2 - sqrt(d^2 + (e + f*S)^2),
/// which is the responser's lower branch plus the one- and two-body terms.
double level_energy(const CE3Params &p, int k);

/// The four class energies U0..U3.
std::array<double, 4> level_energies(const CE3Params &p);

/// Spin-form Hamiltonian of an explicit literal triple, without collapsing
/// to the class index.
double triple_energy(const CE3Params &p, bool l1, bool l2, bool l3);

/// max(|U1-U2|, |U2-U3|): zero when the satisfied classes are degenerate.
double degeneracy_residual(const CE3Params &p);

struct CE3Solution {
  CE3Params params;
  double u_sat = 0.0;   ///< energy of classes 1..3 (taken as U1)
  double u_unsat = 0.0; ///< energy of class 0
  double gap = 0.0;     ///< u_unsat - u_sat

  friend bool operator==(const CE3Solution &, const CE3Solution &) = default;
};

/// Builds a CE3Solution record from parameters by evaluating the levels.
CE3Solution make_solution(const CE3Params &p);

/// The tailoring function phi(E) = g(1) - 2 g(-1) + g(-3) - 4B with
/// g(S) = sqrt(D^2 + (E + F S)^2). Its roots are the fields E at which
/// U2 = U3 once A has been fixed by U1 = U2. Evaluated in a
/// cancellation-free form.
double tailoring_function(double b, double d, double f, double e);

struct SolveOptions {
  /// Half-width of the search window around E = F, in units of D. Zero
  /// selects the default 10(|F|+|B|+D)/min(max(|F|,1e-3 D), D), capped at
  /// 1000 D.
  double window = 0.0;
  int brackets = 2048;
  double tolerance = 1e-12; ///< on |phi|, in units of D
  int max_iterations = 200;
};

/// Every real root of the tailoring function that yields gap >= gap_min,
/// ordered by E. Throws Error(NoSolution) when none survives.
std::vector<CE3Solution> solve(double b, double d, double f, double gap_min,
                               const SolveOptions &opts = {});

/// Like solve() but returns an empty vector instead of throwing.
std::vector<CE3Solution> solve_or_empty(double b, double d, double f,
                                        double gap_min,
                                        const SolveOptions &opts = {});

/// Largest gap, ties to smaller E.
const CE3Solution &best_solution(const std::vector<CE3Solution> &sols);

// --- Feasibility map over (B/D, F/D) -------------------------------------

struct RegionCell {
  bool feasible = false;
  std::optional<CE3Solution> best;

  friend bool operator==(const RegionCell &, const RegionCell &) = default;
};

struct ScanRequest {
  double b_min = 0.01, b_max = 1.0;
  double f_min = 0.1, f_max = 3.0;
  std::size_t nb = 100, nf = 100;
  double gap_min = 0.2; ///< in units of D
};

struct RegionGrid {
  std::vector<double> b_axis;
  std::vector<double> f_axis;
  std::vector<RegionCell> cells; ///< row-major, b index major

  const RegionCell &at(std::size_t ib, std::size_t jf) const {
    return cells[ib * f_axis.size() + jf];
  }
  std::size_t feasible_count() const;

  friend bool operator==(const RegionGrid &, const RegionGrid &) = default;
};

/// Samples both axes inclusively (linspace) with D = 1 and solves every
/// cell. `threads` = 0 uses the hardware concurrency; the grid is identical
/// for any thread count.
RegionGrid scan_region(const ScanRequest &req, unsigned threads = 0);

/// CSV: b_over_d,f_over_d,feasible,a_over_d,e_over_d,gap_over_d
void write_region_csv(std::ostream &out, const RegionGrid &grid);

/// Plain PGM (P2): nf columns by nb rows, 0 = feasible, 255 = infeasible.
void write_region_pgm(std::ostream &out, const RegionGrid &grid);

} // namespace sat3ce
