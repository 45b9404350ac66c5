#include <doctest.h>

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "qhdl/elab/builtins.hpp"
#include "qhdl/elab/compile.hpp"
#include "qhdl/elab/flatten.hpp"
#include "qhdl/elab/rules.hpp"
#include "qhdl/elab/schedule.hpp"
#include "qhdl/elab/vhdl_wrapper.hpp"
#include "qhdl/elab/wires.hpp"

using namespace qhdl;
using namespace qhdl::elab;
using frontend::parse_source;

namespace {

ElaborationError::Kind elab_error_kind(const std::string& src, const std::string& top) {
    auto d = parse_source(src);
    try {
        compile_design(d, top);
    } catch (const ElaborationError& e) {
        return e.kind();
    }
    FAIL("expected an elaboration error");
    return {};
}

// Partition of qbit nets into qubits, as sets of net names.
std::set<std::set<std::string>> partition(const Netlist& nl, const QubitWireAssignment& w) {
    std::map<std::size_t, std::set<std::string>> groups;
    for (NetId id : nl.qnets()) groups[w.wire(id)].insert(nl.nets[id].name);
    std::set<std::set<std::string>> out;
    for (auto& [k, g] : groups) out.insert(g);
    return out;
}

// Independent partition: breadth-first search over pass-through pin pairs.
std::set<std::set<std::string>> bfs_partition(const Netlist& nl) {
    std::map<NetId, std::vector<NetId>> adj;
    for (const auto& g : nl.gates) {
        for (auto [in, out] : g.gate->pass_through) {
            adj[g.pins[in]].push_back(g.pins[out]);
            adj[g.pins[out]].push_back(g.pins[in]);
        }
    }
    std::set<NetId> seen;
    std::set<std::set<std::string>> out;
    for (NetId start : nl.qnets()) {
        if (seen.count(start)) continue;
        std::set<std::string> comp;
        std::queue<NetId> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            NetId n = q.front();
            q.pop();
            comp.insert(nl.nets[n].name);
            for (NetId m : adj[n]) {
                if (seen.insert(m).second) q.push(m);
            }
        }
        out.insert(comp);
    }
    return out;
}

void check_schedule_invariants(const Netlist& nl, const Schedule& s) {
    REQUIRE(s.steps_total() == nl.gates.size());
    std::vector<std::size_t> step_of(nl.gates.size());
    std::set<std::size_t> gates;
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
        CHECK(s.steps[i].step_index == i);
        step_of[s.steps[i].gate] = i;
        gates.insert(s.steps[i].gate);
    }
    CHECK(gates.size() == nl.gates.size());

    auto phase = [&](std::size_t g) {
        switch (nl.gates[g].gate->kind) {
            case GateKind::setup:
                return 0;
            case GateKind::unitary:
                return 1;
            case GateKind::measure:
                return 2;
        }
        return -1;
    };
    for (std::size_t i = 1; i < s.steps.size(); ++i) {
        CHECK(phase(s.steps[i - 1].gate) <= phase(s.steps[i].gate));
    }
    for (NetId net : nl.qnets()) {
        for (auto d : nl.drivers(net)) {
            for (auto k : nl.sinks(net)) {
                const auto& sink = nl.gates[k.gate];
                if (sink.gate->kind == GateKind::setup && sink.gate->ports[k.port].name == "d") continue;
                CHECK(step_of[d.gate] < step_of[k.gate]);
            }
        }
    }
}

const char* kLoop = R"(
entity loop is port (x: in bit); end entity loop;
architecture a of loop is signal p, r: qbit; begin
  g1: qnot port map (d => p, q => r);
  g2: qnot port map (d => r, q => p);
end architecture a;)";

}  // namespace

TEST_CASE("built-in catalog") {
    CHECK(builtin_catalog().size() == 7);
    const auto* cnot = find_builtin("qcnot");
    REQUIRE(cnot);
    CHECK(cnot->arity() == 2);
    CHECK(cnot->op == UnitaryOp::cnot);
    CHECK(find_builtin("qtoffoli")->arity() == 3);
    CHECK(find_builtin("qset")->kind == GateKind::setup);
    CHECK(find_builtin("qmeasure")->kind == GateKind::measure);
    CHECK(find_builtin("and2") == nullptr);
}

TEST_CASE("flattening the Bell circuit") {
    auto d = testing::parse_data("bell.qhdl");
    auto nl = bind_and_flatten(d, "bellstate");
    CHECK(nl.gates.size() == 6);
    CHECK(nl.qnets().size() == 7);
    CHECK(nl.cnets().size() == 5);
    auto g = nl.find_gate("entangle");
    REQUIRE(g);
    CHECK(nl.nets[nl.gates[*g].net_of("c_out")].name == "not_a");
    for (NetId q : nl.qnets()) {
        CHECK(nl.drivers(q).size() == 1);
        CHECK(nl.sinks(q).size() == 1);
    }
}

TEST_CASE("flattening keeps hierarchical labels") {
    auto d = testing::parse_data("hier.qhdl");
    auto nl = bind_and_flatten(d, "htop");
    REQUIRE(nl.gates.size() == 4);
    CHECK(nl.find_gate("u1.g1"));
    CHECK(nl.find_gate("u1.g2"));
    CHECK(nl.find_net("u1.mid"));
    // formal ports alias the enclosing nets
    auto g1 = *nl.find_gate("u1.g1");
    CHECK(nl.nets[nl.gates[g1].net_of("d")].name == "reg");
    CHECK(nl.qnets().size() == 4);
}

TEST_CASE("elaboration errors") {
    using K = ElaborationError::Kind;
    SUBCASE("unknown component") {
        CHECK(elab_error_kind(R"(
entity t is port (x: in bit); end entity t;
architecture a of t is signal p, r: qbit; begin
  g: qwhatever port map (d => p, q => r);
end architecture a;)",
                              "t") == K::unknown_component);
    }
    SUBCASE("unknown top") {
        CHECK(elab_error_kind(kLoop, "nosuch") == K::unknown_entity);
    }
    SUBCASE("undeclared signal") {
        CHECK(elab_error_kind(R"(
entity t is end entity t;
architecture a of t is signal p: qbit; begin
  g: qnot port map (d => p, q => nope);
end architecture a;)",
                              "t") == K::unknown_signal);
    }
    SUBCASE("bit signal on a qbit pin") {
        CHECK(elab_error_kind(R"(
entity t is port (x: in bit); end entity t;
architecture a of t is signal p: qbit; begin
  g: qnot port map (d => x, q => p);
end architecture a;)",
                              "t") == K::port_map_mismatch);
    }
    SUBCASE("unbound formal") {
        CHECK(elab_error_kind(R"(
entity t is end entity t;
architecture a of t is signal p: qbit; begin
  g: qnot port map (d => p);
end architecture a;)",
                              "t") == K::port_map_mismatch);
    }
    SUBCASE("self instantiation") {
        CHECK(elab_error_kind(R"(
entity r is port (d: in qbit; q: out qbit); end entity r;
architecture a of r is begin
  again: r port map (d => d, q => q);
end architecture a;)",
                              "r") == K::recursive_instantiation);
    }
    SUBCASE("missing architecture") {
        CHECK(elab_error_kind("entity t is end entity t;", "t") == K::missing_architecture);
    }
    SUBCASE("two measurements driving one output") {
        CHECK(elab_error_kind(R"(
entity t is port (clk, s: in bit; r: out bit); end entity t;
architecture a of t is signal q0, q1, q2, q3: qbit; begin
  s0: qset port map (clk => clk, d => q2, q => q0, set => s);
  s1: qset port map (clk => clk, d => q3, q => q1, set => s);
  m0: qmeasure port map (clk => clk, d => q0, q => q2, result => r);
  m1: qmeasure port map (clk => clk, d => q1, q => q3, result => r);
end architecture a;)",
                              "t") == K::multiple_drivers);
    }
    SUBCASE("two clock domains") {
        CHECK(elab_error_kind(R"(
entity t is port (c1, c2, s: in bit; r: out bit); end entity t;
architecture a of t is signal q0, q1: qbit; begin
  s0: qset port map (clk => c1, d => q1, q => q0, set => s);
  m0: qmeasure port map (clk => c2, d => q0, q => q1, result => r);
end architecture a;)",
                              "t") == K::clock_domain);
    }
    SUBCASE("qubit limit") {
        auto d = testing::parse_data("bell.qhdl");
        try {
            compile_design(d, "bellstate", 1);
            FAIL("no error");
        } catch (const ElaborationError& e) {
            CHECK(e.kind() == K::qubit_limit_exceeded);
        }
    }
}

TEST_CASE("rule checks") {
    auto diags_of = [](const std::string& file, const std::string& top) {
        auto d = testing::parse_data(file);
        auto nl = bind_and_flatten(d, top);
        return check_qbit_rules(nl, *d.find_entity(top), d);
    };
    SUBCASE("Bell is clean") {
        CHECK(diags_of("bell.qhdl", "bellstate").empty());
    }
    SUBCASE("fan-out") {
        auto ds = diags_of("rule1_fanout.qhdl", "fanout");
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].rule == 1);
        CHECK(ds[0].message.rfind("rule i:", 0) == 0);
        CHECK(ds[0].span.line == 14);
    }
    SUBCASE("qbit ports on the top entity") {
        auto ds = diags_of("rule2_qbit_port.qhdl", "leaky");
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].rule == 2);
        CHECK(ds[0].message.rfind("rule ii:", 0) == 0);
    }
    SUBCASE("process in an architecture") {
        auto ds = diags_of("rule3_process.qhdl", "blinky");
        REQUIRE(ds.size() == 1);
        CHECK(ds[0].rule == 3);
        CHECK(ds[0].message.rfind("rule iii:", 0) == 0);
        CHECK(ds[0].span.line == 20);
    }
    SUBCASE("dangling qbit") {
        auto d = parse_source(R"(
entity t is port (clk, s: in bit; r: out bit); end entity t;
architecture a of t is signal q0, q1, lost: qbit; begin
  s0: qset port map (clk => clk, d => q1, q => q0, set => s);
  h: qhadamard port map (d => q0, q => lost);
  m0: qmeasure port map (clk => clk, d => q0, q => q1, result => r);
end architecture a;)");
        auto nl = bind_and_flatten(d, "t");
        auto ds = check_qbit_rules(nl, *d.find_entity("t"), d);
        // q0 has two sinks, lost has none
        CHECK(ds.size() == 2);
        CHECK(std::all_of(ds.begin(), ds.end(), [](const Diagnostic& x) { return x.rule == 1; }));
    }
    SUBCASE("compile_design refuses violations") {
        auto d = testing::parse_data("rule2_qbit_port.qhdl");
        CHECK_THROWS_AS(compile_design(d, "leaky"), RuleViolation);
    }
}

TEST_CASE("union-find") {
    UnionFind uf(6);
    CHECK(uf.set_count() == 6);
    CHECK(uf.unite(0, 1));
    CHECK(uf.unite(2, 3));
    CHECK(uf.unite(1, 3));
    CHECK_FALSE(uf.unite(0, 2));
    CHECK(uf.set_count() == 3);
    CHECK(uf.find(0) == uf.find(3));
    CHECK(uf.find(4) != uf.find(5));
}

TEST_CASE("qubit wires of the Bell circuit") {
    auto d = testing::parse_data("bell.qhdl");
    auto nl = bind_and_flatten(d, "bellstate");
    auto w = infer_qubit_wires(nl);
    CHECK(w.n == 2);
    auto wire = [&](const char* n) { return w.wire(*nl.find_net(n)); };
    CHECK(wire("reg_a") == 0);
    CHECK(wire("had_a") == 0);
    CHECK(wire("not_a") == 0);
    CHECK(wire("meas_a") == 0);
    CHECK(wire("reg_b") == 1);
    CHECK(wire("not_b") == 1);
    CHECK(wire("meas_b") == 1);
    CHECK(partition(nl, w) == bfs_partition(nl));
}

TEST_CASE("wire inference matches graph search and ignores declaration order") {
    auto d = testing::parse_data("bell.qhdl");
    auto base = bind_and_flatten(d, "bellstate");
    auto expected = bfs_partition(base);
    std::mt19937 gen(11);
    for (int trial = 0; trial < 10; ++trial) {
        auto shuffled = d;
        auto& inst = shuffled.architectures[0].instances;
        std::shuffle(inst.begin(), inst.end(), gen);
        auto nl = bind_and_flatten(shuffled, "bellstate");
        auto w = infer_qubit_wires(nl);
        CHECK(w.n == 2);
        CHECK(partition(nl, w) == expected);
        check_schedule_invariants(nl, schedule(nl, w));
    }
}

TEST_CASE("Bell schedule follows declaration order") {
    auto c = testing::bell();
    const auto& s = c->schedule;
    REQUIRE(s.steps_total() == 6);
    std::vector<std::string> labels;
    for (const auto& op : s.steps) labels.push_back(c->netlist.gates[op.gate].path_label);
    CHECK(labels == std::vector<std::string>{"setter_a", "setter_b", "hadamat_a", "entangle", "measure_a",
                                             "measure_b"});
    check_schedule_invariants(c->netlist, s);
}

TEST_CASE("unitaries are ordered by dataflow, not by declaration") {
    auto d = parse_source(R"(
entity t is port (clk, s: in bit; r: out bit); end entity t;
architecture a of t is signal q0, q1, q2, q3: qbit; begin
  m: qmeasure port map (clk => clk, d => q2, q => q3, result => r);
  second: qnot port map (d => q1, q => q2);
  first: qhadamard port map (d => q0, q => q1);
  st: qset port map (clk => clk, d => q3, q => q0, set => s);
end architecture a;)");
    auto c = compile_design(d, "t");
    std::vector<std::string> labels;
    for (const auto& op : c.schedule.steps) labels.push_back(c.netlist.gates[op.gate].path_label);
    CHECK(labels == std::vector<std::string>{"st", "first", "second", "m"});
    check_schedule_invariants(c.netlist, c.schedule);
}

TEST_CASE("scheduling errors") {
    SUBCASE("combinational loop") {
        CHECK(elab_error_kind(kLoop, "loop") == ElaborationError::Kind::combinational_quantum_loop);
    }
    SUBCASE("measurement feeding a unitary") {
        CHECK(elab_error_kind(R"(
entity t is port (clk, s: in bit; r: out bit); end entity t;
architecture a of t is signal x0, x1, x2: qbit; begin
  st: qset port map (clk => clk, d => x2, q => x0, set => s);
  m: qmeasure port map (clk => clk, d => x0, q => x1, result => r);
  h: qhadamard port map (d => x1, q => x2);
end architecture a;)",
                              "t") == ElaborationError::Kind::unschedulable_dataflow);
    }
}

TEST_CASE("VHDL wrapper") {
    auto c = testing::bell();
    auto text = emit_vhdl_wrapper(c->netlist, c->top);
    CHECK(text == emit_vhdl_wrapper(c->netlist, c->top));
    CHECK(text.find("entity bellstate is") != std::string::npos);
    CHECK(text.find("a_in: in bit;") != std::string::npos);
    CHECK(text.find("b_out: out bit") != std::string::npos);
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        if (line.rfind("--", 0) != 0) CHECK(line.find("qbit") == std::string::npos);
    }
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(netlist_hash(c->netlist)));
    CHECK(text.find(hash) != std::string::npos);

    // Reparsing the same source gives the same hash; a different netlist does not.
    auto again = compile_design(testing::parse_data("bell.qhdl"), "bellstate");
    CHECK(netlist_hash(again.netlist) == netlist_hash(c->netlist));
    auto hier = testing::compile_data("hier.qhdl", "htop");
    CHECK(netlist_hash(hier->netlist) != netlist_hash(c->netlist));
}

TEST_CASE("VHDL wrapper for an entity without ports") {
    auto d = parse_source("entity empty is end entity empty;\narchitecture a of empty is begin end architecture a;");
    auto nl = bind_and_flatten(d, "empty");
    auto text = emit_vhdl_wrapper(nl, *d.find_entity("empty"));
    CHECK(text.find("port") == std::string::npos);
    CHECK(text.find("entity empty is") != std::string::npos);
}
