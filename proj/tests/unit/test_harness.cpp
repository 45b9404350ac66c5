#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "qhdl/harness/report.hpp"
#include "qhdl/harness/stimulus.hpp"
#include "qhdl/harness/vcd.hpp"
#include "vcd_reader.hpp"

using namespace qhdl;
using namespace qhdl::harness;

TEST_CASE("stimulus parsing") {
    auto st = parse_stimulus("# inputs\ndefault A_IN 1\n\nat 7 b_in 1   # late\nat 3 a_in 0\n");
    CHECK(st.defaults.at("a_in") == 1);
    REQUIRE(st.overrides.size() == 2);
    CHECK(st.overrides[0].cycle == 3);
    CHECK(st.overrides[1].name == "b_in");
    CHECK(st.value_at("a_in", 2) == 1);
    CHECK(st.value_at("a_in", 3) == 0);
}

TEST_CASE("stimulus syntax errors carry the line") {
    for (const char* bad : {"default a_in 2", "at x a_in 1", "at 1 a_in", "set a_in 1", "default a_in 1 extra"}) {
        CAPTURE(bad);
        std::string text = std::string("# header\n") + bad + "\n";
        try {
            parse_stimulus(text, "s.stim");
            FAIL("accepted");
        } catch (const StimulusSyntaxError& e) {
            CHECK(e.line() == 2);
            CHECK(e.span()->file == "s.stim");
        }
    }
}

TEST_CASE("vcd identifiers") {
    CHECK(vcd_identifier(0) == "!");
    CHECK(vcd_identifier(1) == "\"");
    CHECK(vcd_identifier(93) == "~");
    CHECK(vcd_identifier(94) == "!!");
    CHECK(vcd_identifier(95) == "\"!");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < 10000; ++i) CHECK(seen.insert(vcd_identifier(i)).second);
}

TEST_CASE("vcd of a Bell run read back independently") {
    sim::Engine e(testing::bell(), {sim::ClockConfig{}, 3});
    auto result = sim::run(e, {}, 12);
    std::ostringstream os;
    auto layout = vcd_layout(e);
    CHECK(layout.order == std::vector<std::string>{"clk", "a_in", "b_in", "a_out", "b_out"});
    auto bytes = write_vcd(result.records, sim::ClockConfig{}, layout, os);
    CHECK(bytes == os.str().size());

    auto dump = testing::read_vcd(os.str());
    CHECK(dump.timescale == "1 fs");
    CHECK(dump.names == layout.order);
    auto rises = dump.times_of("clk", 1);
    REQUIRE(rises.size() == 12);
    for (std::size_t k = 0; k < rises.size(); ++k) CHECK(rises[k] == 5'000'000 + k * 10'000'000);
    auto falls = dump.times_of("clk", 0);
    REQUIRE(falls.size() == 13);  // the initial dump plus one per cycle
    for (std::size_t k = 1; k < falls.size(); ++k) CHECK(falls[k] == 10'000'000 * k);

    std::set<std::uint64_t> rise_set(rises.begin(), rises.end());
    for (const auto& c : dump.changes) {
        if (c.name == "a_out" || c.name == "b_out") CHECK((c.time == 0 || rise_set.count(c.time)));
    }
    for (std::size_t k = 1; k < rises.size(); ++k) {
        CHECK(dump.value_at("a_out", rises[k]) == result.records[k - 1].measured[0].second);
        CHECK(dump.value_at("b_out", rises[k]) == result.records[k - 1].measured[1].second);
    }
    CHECK(dump.value_at("a_out", rises[0]) == 0);
}

TEST_CASE("vcd writer reports a failing sink") {
    sim::Engine e(testing::bell());
    auto result = sim::run(e, {}, 2);
    std::ostringstream os;
    os.setstate(std::ios::badbit);
    CHECK_THROWS_AS(write_vcd(result.records, sim::ClockConfig{}, vcd_layout(e), os), SinkWriteError);
}

TEST_CASE("state trace lines") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.70710678118654757) == "0.70710678118654757");

    std::vector<StateTraceEntry> entries{{{5'000'000, 3}, {{0.5, 0}, {0, 0}, {0, 0}, {0.5, -3.0}}}};
    std::ostringstream os;
    write_state_trace(entries, os);
    CHECK(os.str() == "{\"time_fs\":5000000,\"step\":3,\"amps\":[[0.5,0],[0,0],[0,0],[0.5,-3]]}\n");
    auto j = nlohmann::json::parse(os.str());
    CHECK(j["amps"][3][1].get<double>() == -3.0);
}

TEST_CASE("histogram report") {
    sim::Histogram h;
    for (int i = 0; i < 52; ++i) h.add("00");
    for (int i = 0; i < 48; ++i) h.add("11");
    CHECK(report_histogram(h) == "00 52 0.5200\n11 48 0.4800\ntotal 100\n");

    CHECK(report_histogram(sim::Histogram{}) == "total 0\n");

    sim::Histogram one;
    for (int i = 0; i < 100; ++i) one.add("1");
    std::ostringstream os;
    CHECK(report_histogram(one, os) == "1 100 1.0000\ntotal 100\n");
    CHECK(os.str() == "1 100 1.0000\ntotal 100\n");
}

TEST_CASE("cycle log line") {
    sim::CycleRecord r;
    r.cycle = 4;
    r.outputs_presented = {{"a_out", 1}, {"b_out", 0}};
    CHECK(format_cycle_log(r) == "cycle 4: a_out=1 b_out=0");
    CHECK(r.output_key() == "10");
}
