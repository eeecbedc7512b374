#pragma once

#include "sat3ce/ce3.hpp"
#include "sat3ce/compiler.hpp"
#include "sat3ce/dynamics.hpp"
#include "sat3ce/oracle.hpp"

#include <json.hpp>

#include <iosfwd>

namespace sat3ce {

using Json = nlohmann::ordered_json;

// Key order is fixed so that output diffs cleanly. Clause indices are
// 1-based; assignments are 0/1 strings with variable 1 leftmost.

Json to_json(const CE3Solution &s);
Json to_json(const Netlist &net);
Json to_json(const SpectrumReport &rep);
Json to_json(const EncodingReport &rep);
Json to_json(const RunSummary &s);
Json to_json(const RestartReport &rep);

/// CSV `step,energy`.
void write_trace_csv(std::ostream &out, const std::vector<TracePoint> &trace);

} // namespace sat3ce
