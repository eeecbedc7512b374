#include "sat3ce/json_io.hpp"

#include <ostream>

#include <fmt/format.h>

namespace sat3ce {

Json to_json(const CE3Solution &s) {
  const auto &p = s.params;
  Json j;
  j["a"] = p.a;
  j["b"] = p.b;
  j["d"] = p.d;
  j["e"] = p.e;
  j["f"] = p.f;
  j["u_sat"] = s.u_sat;
  j["u_unsat"] = s.u_unsat;
  j["gap"] = s.gap;
  j["a_over_d"] = p.a / p.d;
  j["b_over_d"] = p.b / p.d;
  j["e_over_d"] = p.e / p.d;
  j["f_over_d"] = p.f / p.d;
  j["gap_over_d"] = s.gap / p.d;
  return j;
}

Json to_json(const Netlist &net) {
  Json j;
  j["m"] = net.m;
  j["n"] = net.n;
  Json branches = Json::array();
  for (const auto &b : net.branches) {
    Json jb;
    jb["clause"] = b.clause + 1;
    jb["slot"] = b.slot;
    jb["var"] = b.var;
    jb["inverter"] = b.inverter;
    branches.push_back(std::move(jb));
  }
  j["branches"] = std::move(branches);
  Json fanout = Json::array();
  for (const auto &w : net.register_wires)
    fanout.push_back(w.fanout);
  j["fanout"] = std::move(fanout);
  return j;
}

Json to_json(const SpectrumReport &rep) {
  Json j;
  j["m"] = rep.m;
  j["ground_energy"] = rep.ground_energy;
  j["ground_degeneracy"] = rep.ground_degeneracy();
  Json levels = Json::array();
  for (const auto &l : rep.levels)
    levels.push_back(Json{{"energy", l.energy}, {"degeneracy", l.degeneracy}});
  j["levels"] = std::move(levels);
  Json ground = Json::array();
  for (const auto &a : rep.ground_assignments())
    ground.push_back(a.to_string());
  j["ground_assignments"] = std::move(ground);
  j["ground_truncated"] = rep.ground_truncated;
  return j;
}

Json to_json(const EncodingReport &rep) {
  Json j;
  j["ok"] = rep.ok;
  j["sat_count"] = rep.sat_count;
  j["ground_degeneracy"] = rep.ground_degeneracy;
  j["min_unsat"] = rep.min_unsat;
  j["ground_energy"] = rep.ground_energy;
  j["expected_ground_energy"] = rep.expected_ground_energy;
  return j;
}

Json to_json(const RunSummary &s) {
  Json j;
  j["seed"] = s.seed;
  j["best_energy"] = s.best_energy;
  j["steps_to_target"] =
      s.steps_to_target ? Json(*s.steps_to_target) : Json(nullptr);
  j["accepts"] = s.accepts;
  j["rejects"] = s.rejects;
  return j;
}

Json to_json(const RestartReport &rep) {
  Json j;
  j["restarts"] = rep.per_run.size();
  j["success_rate"] = rep.success_rate;
  j["median_steps_to_target"] = rep.median_steps_to_target
                                    ? Json(*rep.median_steps_to_target)
                                    : Json(nullptr);
  Json runs = Json::array();
  for (const auto &r : rep.per_run)
    runs.push_back(to_json(r));
  j["runs"] = std::move(runs);
  return j;
}

void write_trace_csv(std::ostream &out, const std::vector<TracePoint> &trace) {
  out << "step,energy\n";
  for (const auto &p : trace)
    out << fmt::format("{},{:.17g}\n", p.step, p.energy);
}

} // namespace sat3ce
