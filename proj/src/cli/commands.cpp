#include "qhdl/cli/commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "qhdl/debug/server.hpp"
#include "qhdl/debug/session.hpp"
#include "qhdl/elab/vhdl_wrapper.hpp"
#include "qhdl/frontend/parser.hpp"
#include "qhdl/harness/report.hpp"
#include "qhdl/harness/stimulus.hpp"
#include "qhdl/harness/vcd.hpp"

namespace qhdl::cli {

namespace {

class IoFailure : public Error {
public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoFailure("cannot read '" + path + "'");
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot write '" + path + "'");
    out << text;
    out.flush();
    if (!out) throw IoFailure("cannot write '" + path + "'");
}

void report(Console& console, const Diagnostic& d) { console.err << format_diagnostic(d, console.color) << '\n'; }

void report(Console& console, const Error& e) { report(console, e.to_diagnostic()); }

template <typename F>
int guarded(Console& console, F&& body) {
    try {
        return body();
    } catch (const elab::RuleViolation& e) {
        for (const auto& d : e.diagnostics()) report(console, d);
        return kDiagnostics;
    } catch (const IoFailure& e) {
        report(console, e);
        return kIoError;
    } catch (const harness::SinkWriteError& e) {
        report(console, e);
        return kIoError;
    } catch (const debug::PortInUse& e) {
        report(console, e);
        return kPortInUse;
    } catch (const sim::SimulationError& e) {
        report(console, e);
        return e.kind() == sim::SimulationError::Kind::stimulus ? kDiagnostics : kSimError;
    } catch (const Error& e) {
        // Lexer, parser, elaboration and stimulus syntax errors.
        report(console, e);
        return kDiagnostics;
    } catch (const std::exception& e) {
        report(console, Diagnostic{Severity::error, {}, e.what(), 0});
        return kSimError;
    }
}

std::string infer_top(const frontend::DesignFile& design) {
    std::set<std::string, std::less<>> instantiated;
    for (const auto& arch : design.architectures) {
        for (const auto& inst : arch.instances) instantiated.insert(inst.component.text);
    }
    std::vector<std::string> roots;
    for (const auto& ent : design.entities) {
        if (!instantiated.count(ent.name.text)) roots.push_back(ent.name.text);
    }
    if (roots.size() != 1) {
        throw Error("cannot infer the top-level entity (" + std::to_string(roots.size()) +
                    " candidates); pass --top");
    }
    return roots.front();
}

struct Loaded {
    frontend::DesignFile design;
    std::shared_ptr<const elab::CompiledDesign> compiled;
};

Loaded load(const RunConfig& config) {
    if (config.sources.empty()) throw IoFailure("no source files given");
    std::vector<frontend::DesignFile> files;
    for (const auto& path : config.sources) files.push_back(frontend::parse_source(read_file(path), path));
    Loaded l;
    l.design = frontend::merge(std::move(files));
    std::string top = config.top.empty() ? infer_top(l.design) : config.top;
    l.compiled = std::make_shared<const elab::CompiledDesign>(elab::compile_design(l.design, top, config.qubit_limit));
    return l;
}

sim::Stimulus load_stimulus(const RunConfig& config) {
    if (!config.stimulus_path) return {};
    return harness::parse_stimulus(read_file(*config.stimulus_path), *config.stimulus_path);
}

sim::EngineOptions engine_options(const RunConfig& config) {
    if (config.clock.period_fs == 0) throw Error("--clock-period-fs must be positive");
    return sim::EngineOptions{config.clock, config.seed, config.qubit_limit};
}

}  // namespace

int cmd_compile(const RunConfig& config, Console& console) {
    return guarded(console, [&] {
        Loaded l = load(config);
        const auto& c = *l.compiled;
        std::string wrapper_path = config.wrapper_path.value_or(
            (std::filesystem::path(config.sources.front()).parent_path() / (c.netlist.top + ".vhdl")).string());
        write_file(wrapper_path, elab::emit_vhdl_wrapper(c.netlist, c.top));
        console.out << "top=" << c.netlist.top << " gates=" << c.netlist.gates.size() << " qubits=" << c.wires.n
                    << " steps=" << c.schedule.steps_total() << " qnets=" << c.netlist.qnets().size()
                    << " cnets=" << c.netlist.cnets().size() << '\n';
        console.out << "wrapper " << wrapper_path << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_run(const RunConfig& config, Console& console) {
    return guarded(console, [&] {
        if (config.cycles < 1) throw Error("--cycles must be at least 1");
        Loaded l = load(config);
        sim::Stimulus stimulus = load_stimulus(config);
        sim::Engine engine(l.compiled, engine_options(config));

        std::vector<harness::StateTraceEntry> trace;
        if (config.trace_path) {
            engine.set_step_observer([&](sim::SimTime t, const sim::StateVector& s) {
                trace.push_back({t, sim::snapshot(s)});
            });
        }
        sim::RunResult result = sim::run(engine, stimulus, config.cycles);

        if (config.vcd_path) {
            std::ostringstream vcd;
            harness::write_vcd(result.records, config.clock, harness::vcd_layout(engine), vcd);
            write_file(*config.vcd_path, vcd.str());
        }
        if (config.trace_path) {
            std::ostringstream os;
            harness::write_state_trace(trace, os);
            write_file(*config.trace_path, os.str());
        }
        if (config.log_cycles) {
            for (const auto& rec : result.records) console.out << harness::format_cycle_log(rec) << '\n';
        }
        harness::report_histogram(result.histogram, console.out);
        return static_cast<int>(kOk);
    });
}

int cmd_debug(const RunConfig& config, Console& console) {
    return guarded(console, [&] {
        if (config.cycles < 1) throw Error("--cycles must be at least 1");
        Loaded l = load(config);
        debug::DebugSession session(l.compiled, engine_options(config), load_stimulus(config), config.cycles);
        debug::ServerOptions options;
        options.port = config.debug_port;
        debug::DebugServer server(session, options);
        server.listen();
        console.out << "QSIM debugger at http://localhost:" << server.port() << "/" << std::endl;
        server.run();
        return static_cast<int>(kOk);
    });
}

int run_cli(int argc, const char* const* argv, Console& console) {
    CLI::App app{"QHDL compiler and QSIM simulator", "qhdl"};
    app.require_subcommand(1);
    RunConfig config;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("sources", config.sources, "QHDL source files")->required();
        sub->add_option("--top", config.top, "Top-level entity");
        sub->add_option("--qubit-limit", config.qubit_limit, "Maximum number of simulated qubits")
            ->check(CLI::PositiveNumber);
    };
    auto add_sim = [&](CLI::App* sub) {
        sub->add_option("--cycles", config.cycles, "Clock cycles to simulate")->check(CLI::PositiveNumber);
        sub->add_option("--seed", config.seed, "Measurement RNG seed");
        sub->add_option("--stimulus", config.stimulus_path, "Stimulus file");
        sub->add_option("--clock-period-fs", config.clock.period_fs, "Clock period in fs")->check(CLI::PositiveNumber);
        sub->add_option("--clock-first-edge-fs", config.clock.first_edge_fs, "Time of the first rising edge in fs");
    };

    auto* compile = app.add_subcommand("compile", "Elaborate a design and write its VHDL wrapper");
    add_common(compile);
    compile->add_option("--wrapper", config.wrapper_path, "Wrapper output path (default <dir>/<top>.vhdl)");

    auto* run = app.add_subcommand("run", "Simulate a design and report the output histogram");
    add_common(run);
    add_sim(run);
    run->add_option("--vcd", config.vcd_path, "Write a VCD waveform");
    run->add_option("--trace", config.trace_path, "Write the JSONL state trace");
    run->add_flag("--log-cycles", config.log_cycles, "Print the presented outputs of every cycle");

    auto* dbg = app.add_subcommand("debug", "Serve the single-step web debugger");
    add_common(dbg);
    add_sim(dbg);
    dbg->add_option("--debug-port", config.debug_port, "HTTP/WebSocket port")->check(CLI::Range(1, 65535));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        console.out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        console.out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        console.err << "error: " << e.what() << '\n';
        return kIoError;
    }

    if (compile->parsed()) return cmd_compile(config, console);
    if (run->parsed()) return cmd_run(config, console);
    return cmd_debug(config, console);
}

}  // namespace qhdl::cli
