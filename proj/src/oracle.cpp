#include "sat3ce/oracle.hpp"

#include "sat3ce/error.hpp"
#include "sat3ce/summation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <thread>

namespace sat3ce {

std::vector<Assignment> SpectrumReport::ground_assignments() const {
  std::vector<Assignment> out;
  out.reserve(ground_masks.size());
  for (auto mask : ground_masks)
    out.push_back(Assignment::from_mask(mask, m));
  return out;
}

namespace {

void check_size(std::uint32_t m, std::uint32_t limit) {
  if (m > limit || m > 62)
    throw Error(ErrorCode::TooLarge,
                "exhaustive enumeration over " + std::to_string(m) +
                    " variables exceeds the limit of " + std::to_string(limit));
}

// Gray-code walk over the low `q` variables with the high variables fixed
// by `prefix`. Calls visit(mask, energy) for each of the 2^q assignments.
template <typename Visit>
void gray_walk(const EnergyModel &mod, std::uint32_t q, std::uint64_t prefix,
               Visit &&visit) {
  const std::uint32_t m = mod.num_vars();
  std::uint64_t mask = prefix << q;
  Assignment a = Assignment::from_mask(mask, m);
  CompensatedSum energy(mod.total_energy(a));
  visit(mask, energy.value());
  const std::uint64_t count = std::uint64_t(1) << q;
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto bit = std::uint32_t(std::countr_zero(i));
    energy += mod.flip_delta(a, bit + 1);
    a.flip(bit);
    mask ^= std::uint64_t(1) << bit;
    visit(mask, energy.value());
  }
}

// Energies within `tol` of an existing representative join its bucket.
void add_to_levels(std::map<double, std::uint64_t> &levels, double e,
                   std::uint64_t count, double tol) {
  auto it = levels.lower_bound(e - tol);
  if (it != levels.end() && it->first <= e + tol)
    it->second += count;
  else
    levels.emplace(e, count);
}

struct SubcubeResult {
  std::map<double, std::uint64_t> levels;
  double local_min = std::numeric_limits<double>::infinity();
  std::vector<std::pair<std::uint64_t, double>> candidates;
};

template <typename Job>
void run_jobs(std::size_t count, unsigned threads, Job &&job) {
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = unsigned(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++)
        job(i);
    });
}

} // namespace

SpectrumReport enumerate_spectrum(const EnergyModel &mod,
                                  const SpectrumOptions &opts) {
  const std::uint32_t m = mod.num_vars();
  check_size(m, opts.limit);
  const double tol = 1e-9 * mod.solution().params.d;

  const std::uint32_t p = m > 12 ? 6 : 0;
  const std::uint32_t q = m - p;
  std::vector<SubcubeResult> parts(std::size_t(1) << p);

  run_jobs(parts.size(), opts.threads, [&](std::size_t prefix) {
    SubcubeResult &r = parts[prefix];
    gray_walk(mod, q, prefix, [&](std::uint64_t mask, double e) {
      add_to_levels(r.levels, e, 1, tol);
      if (e < r.local_min) {
        r.local_min = e;
        std::erase_if(r.candidates, [&](const auto &c) {
          return c.second > r.local_min + 2 * tol;
        });
      }
      if (e <= r.local_min + 2 * tol)
        r.candidates.emplace_back(mask, e);
    });
  });

  std::map<double, std::uint64_t> merged;
  for (const auto &r : parts)
    for (const auto &[e, count] : r.levels)
      add_to_levels(merged, e, count, tol);

  SpectrumReport rep;
  rep.m = m;
  for (const auto &[e, count] : merged)
    rep.levels.push_back({e, count});
  rep.ground_energy = rep.levels.front().energy;
  for (const auto &r : parts)
    for (const auto &[mask, e] : r.candidates)
      if (std::abs(e - rep.ground_energy) <= tol)
        rep.ground_masks.push_back(mask);
  std::sort(rep.ground_masks.begin(), rep.ground_masks.end());
  if (rep.ground_masks.size() > opts.ground_limit) {
    rep.ground_masks.resize(opts.ground_limit);
    rep.ground_truncated = true;
  }
  return rep;
}

std::vector<double> all_energies(const EnergyModel &mod, bool incremental,
                                 std::uint32_t limit) {
  const std::uint32_t m = mod.num_vars();
  check_size(m, limit);
  std::vector<double> out(std::size_t(1) << m);
  if (incremental) {
    gray_walk(mod, m, 0, [&](std::uint64_t mask, double e) { out[mask] = e; });
  } else {
    for (std::uint64_t mask = 0; mask < out.size(); ++mask)
      out[mask] = mod.total_energy(Assignment::from_mask(mask, m));
  }
  return out;
}

EncodingReport check_encoding(const Formula &f, const EnergyModel &mod,
                              const SpectrumOptions &opts) {
  const std::uint32_t m = f.num_vars();
  check_size(m, opts.limit);
  if (m != mod.num_vars())
    throw Error(ErrorCode::LengthMismatch,
                "formula and model disagree on the variable count");

  SpectrumOptions full = opts;
  full.ground_limit = std::numeric_limits<std::size_t>::max();
  const SpectrumReport spec = enumerate_spectrum(mod, full);

  EncodingReport rep;
  rep.ground_degeneracy = spec.ground_degeneracy();
  rep.ground_energy = spec.ground_energy;
  rep.min_unsat = f.num_clauses();

  std::vector<std::uint64_t> sat_masks;
  Assignment a(m);
  const std::uint64_t total = std::uint64_t(1) << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::uint32_t i = 0; i < m; ++i)
      a.set(i, (mask >> i) & 1u);
    const Evaluation ev = evaluate(f, a);
    rep.min_unsat = std::min(rep.min_unsat, ev.unsat_count);
    if (ev.satisfied)
      sat_masks.push_back(mask);
  }
  rep.sat_count = sat_masks.size();
  rep.expected_ground_energy =
      mod.e_floor() + mod.gap() * double(rep.min_unsat);

  if (rep.sat_count > 0) {
    rep.ok = spec.ground_masks == sat_masks &&
             rep.ground_degeneracy == rep.sat_count;
  } else {
    const double tol = 1e-9 * mod.solution().params.d *
                       std::max<double>(1.0, double(f.num_clauses()));
    rep.ok = std::abs(rep.ground_energy - rep.expected_ground_energy) <= tol;
  }
  return rep;
}

} // namespace sat3ce
