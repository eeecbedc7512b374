#include "sat3ce/compiler.hpp"
#include "sat3ce/error.hpp"
#include "sat3ce/json_io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sat3ce;
using namespace sat3ce::testing;

TEST(Netlist, TwoClauseMachine) {
  const Netlist net = build_netlist(two_clause_formula());
  EXPECT_EQ(net.register_wires.size(), 4u);
  EXPECT_EQ(net.branches.size(), 6u);
  EXPECT_EQ(net.ce3_nodes.size(), 2u);
  EXPECT_EQ(net.inverter_count(), 2u);
  for (const auto &b : net.branches)
    if (b.inverter)
      EXPECT_TRUE((b.clause == 0 && b.var == 1) || (b.clause == 1 && b.var == 3));
  EXPECT_EQ(net.register_wires[3].fanout, 2u);
  EXPECT_EQ(net.register_wires[0].fanout, 2u);
  EXPECT_EQ(net.register_wires[1].fanout, 1u);
  const auto &node = net.ce3_nodes[1];
  EXPECT_EQ(net.branches[node.branches[1]].var, 3u);
  EXPECT_EQ(net.branches[node.branches[1]].slot, 2);
}

TEST(Netlist, SingleClauseAndUnusedWire) {
  const Netlist one = build_netlist(single_clause_formula());
  EXPECT_EQ(one.register_wires.size(), 3u);
  EXPECT_EQ(one.branches.size(), 3u);
  EXPECT_EQ(one.inverter_count(), 0u);
  EXPECT_EQ(one.ce3_nodes.size(), 1u);

  const Netlist gap = build_netlist(Formula(5, {make_clause(1, -2, 3)}));
  EXPECT_EQ(gap.register_wires.size(), 5u);
  EXPECT_EQ(gap.register_wires[4].fanout, 0u);
}

TEST(Netlist, InvertersMatchNegationsOnRandomFormulas) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint32_t m = 3 + rng() % 20;
    const Formula f =
        gen_random(m, 1 + rng() % std::min<std::uint64_t>(60, max_clause_count(m)), rng());
    const Netlist net = build_netlist(f);
    ASSERT_EQ(net.branches.size(), 3 * f.num_clauses());
    std::vector<std::size_t> fan(f.num_vars(), 0);
    for (std::size_t c = 0; c < f.num_clauses(); ++c)
      for (int s = 0; s < 3; ++s) {
        const Branch &b = net.branches[net.ce3_nodes[c].branches[s]];
        const Literal &l = f.clause(c).lits[s];
        EXPECT_EQ(b.clause, c);
        EXPECT_EQ(b.slot, s + 1);
        EXPECT_EQ(b.var, l.var);
        EXPECT_EQ(b.inverter, l.negated);
        ++fan[l.var - 1];
      }
    for (std::uint32_t v = 0; v < f.num_vars(); ++v)
      EXPECT_EQ(net.register_wires[v].fanout, fan[v]);
  }
}

TEST(Netlist, JsonShape) {
  const Json j = to_json(build_netlist(two_clause_formula()));
  EXPECT_EQ(j.dump(),
            R"({"m":4,"n":2,"branches":[)"
            R"({"clause":1,"slot":1,"var":1,"inverter":true},)"
            R"({"clause":1,"slot":2,"var":2,"inverter":false},)"
            R"({"clause":1,"slot":3,"var":4,"inverter":false},)"
            R"({"clause":2,"slot":1,"var":1,"inverter":false},)"
            R"({"clause":2,"slot":2,"var":3,"inverter":true},)"
            R"({"clause":2,"slot":3,"var":4,"inverter":false}],)"
            R"("fanout":[2,1,1,2]})");
}

TEST(Compile, FloorAndOccurrences) {
  const CE3Solution s = reference_solution();
  const EnergyModel mod = compile(two_clause_formula(), s);
  EXPECT_DOUBLE_EQ(mod.e_floor(), 2 * s.u_sat);
  EXPECT_EQ(mod.occurrences(4).size(), 2u);
  EXPECT_EQ(mod.occurrences(2).size(), 1u);
  std::size_t slots = 0;
  for (std::uint32_t v = 1; v <= 4; ++v)
    slots += mod.occurrences(v).size();
  EXPECT_EQ(slots, 6u);

  const EnergyModel empty = compile(Formula(4, {}), s);
  EXPECT_EQ(empty.e_floor(), 0.0);
  EXPECT_EQ(empty.total_energy(Assignment::from_string("1010")), 0.0);
}

TEST(Compile, RejectsInvalidSolutions) {
  const CE3Solution s = reference_solution();
  auto code = [](const CE3Solution &sol, double gap_min = -1.0) {
    try {
      compile(two_clause_formula(), sol, gap_min);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  // Gap requirement above the achieved gap.
  EXPECT_EQ(code(s, 1.5), ErrorCode::InvalidSolution);
  // Detuned bias breaks U1 = U2.
  CE3Solution detuned = make_solution({s.params.a + 1e-3, s.params.b,
                                       s.params.d, s.params.e, s.params.f});
  EXPECT_EQ(code(detuned), ErrorCode::InvalidSolution);
  // Recorded levels inconsistent with parameters.
  CE3Solution forged = s;
  forged.gap += 0.1;
  EXPECT_EQ(code(forged), ErrorCode::InvalidSolution);
  // Mirror root: degenerate but the class-0 state lies below.
  const double e = kMirrorE;
  const double a = 0.5 * (std::hypot(1.0, e + 1) - std::hypot(1.0, e - 1));
  EXPECT_EQ(code(make_solution({a, 0.3, 1.0, e, 1.0})),
            ErrorCode::InvalidSolution);
}

TEST(TotalEnergy, TwoClauseExamples) {
  const CE3Solution s = reference_solution();
  const EnergyModel mod = compile(two_clause_formula(), s);
  EXPECT_NEAR(mod.total_energy(Assignment::from_string("1111")), 2 * s.u_sat,
              1e-12);
  EXPECT_NEAR(mod.total_energy(Assignment::from_string("1000")),
              2 * s.u_sat + s.gap, 1e-12);
  EXPECT_THROW(mod.total_energy(Assignment::from_string("11111")), Error);
}

TEST(TotalEnergy, AllPatternsMinimumByEnumeration) {
  const CE3Solution s = reference_solution();
  const EnergyModel mod = compile(all_patterns_formula(), s);
  double lo = 1e300;
  for (std::uint64_t mask = 0; mask < 8; ++mask)
    lo = std::min(lo, mod.total_energy(Assignment::from_mask(mask, 3)));
  EXPECT_NEAR(lo, 8 * s.u_sat + s.gap, 1e-12);
}

TEST(TotalEnergy, AffineInUnsatCount) {
  const CE3Solution s = reference_solution();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t m = 3 + rng() % 40;
    const Formula f =
        gen_random(m, 1 + rng() % std::min<std::uint64_t>(200, max_clause_count(m)), rng());
    const EnergyModel mod = compile(f, s);
    const Assignment a = random_assignment(m, rng);
    const double n = double(f.num_clauses());
    EXPECT_NEAR(mod.total_energy(a) - mod.e_floor(),
                s.gap * double(brute_unsat(f, a.to_mask())), 1e-9 * n);
  }
}

TEST(FlipDelta, Examples) {
  const CE3Solution s = reference_solution();
  const EnergyModel two_clause = compile(two_clause_formula(), s);
  EXPECT_NEAR(two_clause.flip_delta(Assignment::from_string("1000"), 4), -s.gap,
              1e-12);
  const EnergyModel sparse = compile(Formula(5, {make_clause(1, -2, 3)}), s);
  EXPECT_EQ(sparse.flip_delta(Assignment::from_string("10101"), 5), 0.0);
  EXPECT_THROW(sparse.flip_delta(Assignment::from_string("10101"), 6), Error);
  EXPECT_THROW(sparse.flip_delta(Assignment::from_string("10101"), 0), Error);
}

TEST(FlipDelta, MatchesRecomputation) {
  const CE3Solution s = reference_solution();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Formula f = gen_random(10, 42, rng());
    const EnergyModel mod = compile(f, s);
    const Assignment a = random_assignment(10, rng);
    for (std::uint32_t v = 1; v <= 10; ++v) {
      Assignment b = a;
      b.flip(v - 1);
      const double brute = mod.total_energy(b) - mod.total_energy(a);
      const double touched = double(mod.occurrences(v).size());
      EXPECT_NEAR(mod.flip_delta(a, v), brute,
                  1e-12 * std::max(1.0, touched));
      // Flip involution.
      EXPECT_NEAR(mod.flip_delta(a, v) + mod.flip_delta(b, v), 0.0,
                  1e-12 * 42);
    }
  }
}
