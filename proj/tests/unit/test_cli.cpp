#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "qhdl/cli/commands.hpp"
#include "ws_client.hpp"

using namespace qhdl;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_qhdl(std::vector<std::string> args) {
    args.insert(args.begin(), "qhdl");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    cli::Console console{out, err, false};
    int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), console);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return testing::data_path(name).string(); }

}  // namespace

TEST_CASE("compile prints the summary and writes the wrapper") {
    testing::TempDir tmp;
    auto r = run_qhdl({"compile", data("bell.qhdl"), "--top", "bellstate", "--wrapper", tmp / "w.vhdl"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gates=6 qubits=2 steps=6") != std::string::npos);
    CHECK(r.err.empty());
    CHECK(testing::read_text(tmp / "w.vhdl").find("entity bellstate is") != std::string::npos);
}

TEST_CASE("compile writes <top>.vhdl next to the source by default") {
    testing::TempDir tmp;
    std::filesystem::copy_file(testing::data_path("bell.qhdl"), tmp.path() / "bell.qhdl");
    auto r = run_qhdl({"compile", tmp / "bell.qhdl"});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(tmp.path() / "bellstate.vhdl"));
}

TEST_CASE("exit codes") {
    testing::TempDir tmp;
    SUBCASE("rule violation") {
        auto r = run_qhdl({"compile", data("rule2_qbit_port.qhdl"), "--wrapper", tmp / "w.vhdl"});
        CHECK(r.code == 1);
        CHECK(r.err.find("rule ii") != std::string::npos);
        CHECK(r.err.find("rule2_qbit_port.qhdl:") != std::string::npos);
    }
    SUBCASE("syntax error") {
        std::ofstream(tmp / "bad.qhdl") << "entity e is port ( ; end;";
        CHECK(run_qhdl({"compile", tmp / "bad.qhdl"}).code == 1);
    }
    SUBCASE("missing source") {
        auto r = run_qhdl({"run", tmp / "missing.qhdl"});
        CHECK(r.code == 2);
    }
    SUBCASE("unwritable output") {
        CHECK(run_qhdl({"run", data("bell.qhdl"), "--vcd", tmp / "no/such/dir/x.vcd"}).code == 2);
    }
    SUBCASE("bad usage") {
        CHECK(run_qhdl({"run", data("bell.qhdl"), "--cycles", "0"}).code == 2);
        CHECK(run_qhdl({"frobnicate"}).code == 2);
        CHECK(run_qhdl({}).code == 2);
    }
    SUBCASE("stimulus naming an unknown input") {
        std::ofstream(tmp / "s.stim") << "default c_in 1\n";
        CHECK(run_qhdl({"run", data("bell.qhdl"), "--stimulus", tmp / "s.stim"}).code == 1);
    }
    SUBCASE("qubit limit at simulation") {
        CHECK(run_qhdl({"run", data("bell.qhdl"), "--qubit-limit", "1"}).code == 1);
    }
    SUBCASE("occupied debug port") {
        auto session = debug::DebugSession(testing::bell(), {}, {}, 1);
        testing::ServerThread holder(session);
        auto r = run_qhdl({"debug", data("bell.qhdl"), "--debug-port", std::to_string(holder.port())});
        CHECK(r.code == 4);
    }
}

TEST_CASE("run prints the histogram") {
    auto r = run_qhdl({"run", data("bell.qhdl")});
    CHECK(r.code == 0);
    CHECK(r.out.find("total 100\n") != std::string::npos);
    CHECK(r.out.find("01 ") == std::string::npos);
    CHECK(r.out.find("10 ") == std::string::npos);

    auto one = run_qhdl({"run", data("bell.qhdl"), "--cycles", "1"});
    CHECK(one.code == 0);
    CHECK(one.out == "total 0\n");
}

TEST_CASE("run is byte-deterministic") {
    testing::TempDir tmp;
    auto a = run_qhdl({"run", data("bell.qhdl"), "--seed", "7", "--vcd", tmp / "a.vcd", "--trace", tmp / "a.jsonl"});
    auto b = run_qhdl({"run", data("bell.qhdl"), "--seed", "7", "--vcd", tmp / "b.vcd", "--trace", tmp / "b.jsonl"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(testing::read_text(tmp / "a.vcd") == testing::read_text(tmp / "b.vcd"));
    CHECK(testing::read_text(tmp / "a.jsonl") == testing::read_text(tmp / "b.jsonl"));
    auto c = run_qhdl({"run", data("bell.qhdl"), "--seed", "8"});
    CHECK(c.out != a.out);
}

TEST_CASE("run honours the clock flags and cycle log") {
    testing::TempDir tmp;
    auto r = run_qhdl({"run", data("bell.qhdl"), "--cycles", "3", "--clock-period-fs", "1000", "--clock-first-edge-fs",
                  "500", "--vcd", tmp / "c.vcd", "--log-cycles"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("cycle 0: a_out=0 b_out=0\n", 0) == 0);
    auto vcd = testing::read_text(tmp / "c.vcd");
    CHECK(vcd.find("#500\n") != std::string::npos);
    CHECK(vcd.find("#1500\n") != std::string::npos);
    CHECK(vcd.find("#2500\n") != std::string::npos);
}

TEST_CASE("the top entity is inferred when unambiguous") {
    testing::TempDir tmp;
    auto r = run_qhdl({"compile", data("hier.qhdl"), "--wrapper", tmp / "h.vhdl"});
    CHECK(r.code == 0);
    CHECK(r.out.find("top=htop") != std::string::npos);
}
