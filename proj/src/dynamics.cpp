#include "sat3ce/dynamics.hpp"

#include "sat3ce/error.hpp"
#include "sat3ce/summation.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <random>
#include <thread>

namespace sat3ce {

namespace {

void validate(const ConstantSchedule &c) {
  if (!(c.temperature > 0) || !std::isfinite(c.temperature))
    throw Error(ErrorCode::InvalidArgument, "temperature must be positive");
}

void validate(const GeometricSchedule &g) {
  if (!(g.t0 > 0) || !std::isfinite(g.t0))
    throw Error(ErrorCode::InvalidArgument, "T0 must be positive");
  if (!(g.ratio > 0 && g.ratio < 1))
    throw Error(ErrorCode::InvalidArgument, "cooling ratio must lie in (0,1)");
  if (g.stage_length < 1)
    throw Error(ErrorCode::InvalidArgument, "stage length must be >= 1");
}

double parse_double(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidArgument,
                "bad number '" + std::string(s) + "' in schedule");
  return v;
}

} // namespace

Schedule::Schedule(ConstantSchedule c) : v_(c) { validate(c); }
Schedule::Schedule(GeometricSchedule g) : v_(g) { validate(g); }

double Schedule::temperature(std::uint64_t step) const {
  if (const auto *c = std::get_if<ConstantSchedule>(&v_))
    return c->temperature;
  const auto &g = std::get<GeometricSchedule>(v_);
  return g.t0 * std::pow(g.ratio, double(step / g.stage_length));
}

Schedule Schedule::default_for(const EnergyModel &mod) {
  return GeometricSchedule{2.0 * mod.gap(), 0.97,
                           std::max<std::uint64_t>(1, 10u * mod.num_vars())};
}

Schedule Schedule::parse(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::InvalidArgument,
                "schedule must be const:T or geo:T0,r,stage");
  const std::string_view kind(text.data(), colon);
  const std::string_view rest(text.data() + colon + 1, text.size() - colon - 1);
  if (kind == "const")
    return ConstantSchedule{parse_double(rest)};
  if (kind == "geo") {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
      const auto comma = rest.find(',', start);
      parts.push_back(rest.substr(start, comma - start));
      if (comma == std::string_view::npos)
        break;
      start = comma + 1;
    }
    if (parts.size() != 3)
      throw Error(ErrorCode::InvalidArgument,
                  "geometric schedule needs T0,r,stage");
    const double stage = parse_double(parts[2]);
    if (stage < 1 || stage != std::floor(stage))
      throw Error(ErrorCode::InvalidArgument,
                  "stage length must be a positive integer");
    return GeometricSchedule{parse_double(parts[0]), parse_double(parts[1]),
                             std::uint64_t(stage)};
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown schedule kind '" + std::string(kind) + "'");
}

double energy_tolerance(const EnergyModel &mod) {
  return 1e-9 * mod.solution().params.d *
         std::max<double>(1.0, double(mod.num_clauses()));
}

bool metropolis_accept(double d, double temperature, double u) {
  return d <= 0.0 || u < std::exp(-d / temperature);
}

RunResult metropolis_run(const EnergyModel &mod, const RunConfig &cfg,
                         const Schedule &sch) {
  if (cfg.max_steps < 1)
    throw Error(ErrorCode::InvalidArgument, "max_steps must be >= 1");
  if (cfg.record_every < 1)
    throw Error(ErrorCode::InvalidArgument, "record_every must be >= 1");
  const std::uint32_t m = mod.num_vars();
  if (cfg.initial && cfg.initial->size() != m)
    throw Error(ErrorCode::LengthMismatch, "initial assignment length");

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::uint32_t> pick(1, m);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  Assignment a(m);
  if (cfg.initial) {
    a = *cfg.initial;
  } else {
    for (std::uint32_t i = 0; i < m; ++i)
      a.set(i, rng() >> 63);
  }

  const double tol = energy_tolerance(mod);
  const std::optional<double> target = cfg.target_energy;
  auto reached = [&](double e) { return target && e <= *target + tol; };

  RunResult r;
  r.seed = cfg.seed;
  CompensatedSum energy(mod.total_energy(a));
  r.best_energy = energy.value();
  r.best_assignment = a;

  auto record = [&](std::uint64_t step) {
    const double e = energy.value();
    r.trace.push_back({step, e});
    if (cfg.verify_trace)
      r.max_trace_drift =
          std::max(r.max_trace_drift, std::abs(mod.total_energy(a) - e));
  };

  record(0);
  if (reached(energy.value())) {
    r.steps_to_target = 0;
    r.final_energy = energy.value();
    return r;
  }

  std::uint64_t step = 0;
  while (step < cfg.max_steps) {
    const double temp = sch.temperature(step);
    const std::uint32_t v = pick(rng);
    const double d = mod.flip_delta(a, v);
    ++step;
    // Flips within tolerance of zero move along a degenerate plateau.
    const bool accept = d <= tol || metropolis_accept(d, temp, unif(rng));
    if (accept) {
      a.flip(v - 1);
      energy += d;
      ++r.accept_count;
      if (energy.value() < r.best_energy) {
        r.best_energy = energy.value();
        r.best_assignment = a;
      }
    } else {
      ++r.reject_count;
    }
    const bool hit = reached(energy.value());
    if (step % cfg.record_every == 0 || hit)
      record(step);
    if (hit) {
      r.steps_to_target = step;
      break;
    }
  }
  r.steps = step;
  r.final_energy = energy.value();
  return r;
}

RunSummary summarize(const RunResult &r) {
  return {r.seed, r.best_energy, r.steps_to_target, r.accept_count,
          r.reject_count};
}

RestartReport multi_restart(const EnergyModel &mod, std::uint64_t restarts,
                            const RunConfig &cfg, const Schedule &sch,
                            unsigned threads, RunResult *first_run) {
  if (!cfg.target_energy)
    throw Error(ErrorCode::MissingTarget,
                "multi_restart needs a target energy");
  if (restarts < 1)
    throw Error(ErrorCode::InvalidArgument, "restarts must be >= 1");

  std::vector<RunSummary> runs(restarts);
  auto job = [&](std::uint64_t i) {
    RunConfig c = cfg;
    c.seed = cfg.seed + i;
    RunResult res = metropolis_run(mod, c, sch);
    runs[i] = summarize(res);
    if (i == 0 && first_run)
      *first_run = std::move(res);
  };

  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = unsigned(std::min<std::uint64_t>(threads, restarts));
  if (threads <= 1) {
    for (std::uint64_t i = 0; i < restarts; ++i)
      job(i);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::uint64_t i = next++; i < restarts; i = next++)
          job(i);
      });
  }

  RestartReport rep;
  rep.per_run = std::move(runs);
  std::vector<std::uint64_t> hits;
  for (const auto &s : rep.per_run)
    if (s.steps_to_target)
      hits.push_back(*s.steps_to_target);
  rep.success_rate = double(hits.size()) / double(restarts);
  if (!hits.empty()) {
    std::sort(hits.begin(), hits.end());
    const std::size_t h = hits.size();
    rep.median_steps_to_target =
        h % 2 ? double(hits[h / 2])
              : 0.5 * (double(hits[h / 2 - 1]) + double(hits[h / 2]));
  }
  return rep;
}

} // namespace sat3ce
