#include "qhdl/harness/vcd.hpp"

#include <map>
#include <sstream>

namespace qhdl::harness {

VcdLayout vcd_layout(const sim::Engine& engine) {
    VcdLayout layout;
    layout.scope = engine.design().netlist.top;
    layout.clock = engine.clock_port().value_or("clk");
    layout.inputs = engine.input_names();
    layout.outputs = engine.output_names();
    if (!engine.clock_port()) layout.order.push_back(layout.clock);
    for (const auto& p : engine.design().netlist.top_ports) {
        if (p.decl.type == frontend::TypeMark::bit) layout.order.push_back(p.decl.name.text);
    }
    return layout;
}

std::string vcd_identifier(std::size_t index) {
    constexpr std::size_t kRange = '~' - '!' + 1;
    // Bijective base-94 digits, least significant first.
    std::string id;
    for (;;) {
        id += static_cast<char>('!' + index % kRange);
        index /= kRange;
        if (index == 0) break;
        --index;
    }
    return id;
}

std::size_t write_vcd(const std::vector<sim::CycleRecord>& records, const sim::ClockConfig& clock,
                      const VcdLayout& layout, std::ostream& sink) {
    std::map<std::string, std::string> id_of;
    for (std::size_t i = 0; i < layout.order.size(); ++i) id_of[layout.order[i]] = vcd_identifier(i);

    std::ostringstream os;
    os << "$version qhdl qsim $end\n";
    os << "$timescale 1 fs $end\n";
    os << "$scope module " << layout.scope << " $end\n";
    for (const auto& name : layout.order) os << "$var wire 1 " << id_of[name] << ' ' << name << " $end\n";
    os << "$upscope $end\n";
    os << "$enddefinitions $end\n";
    os << "#0\n$dumpvars\n";
    std::map<std::string, sim::Bit> last;
    for (const auto& name : layout.order) {
        last[name] = 0;
        os << '0' << id_of[name] << '\n';
    }
    os << "$end\n";

    std::uint64_t stamped = 0;
    auto stamp = [&](std::uint64_t t) {
        if (t != stamped) os << '#' << t << '\n';
        stamped = t;
    };
    auto change = [&](const std::string& name, sim::Bit v) {
        if (last[name] == v) return;
        last[name] = v;
        os << (v ? '1' : '0') << id_of[name] << '\n';
    };
    for (const auto& rec : records) {
        stamp(rec.edge_time.time_fs);
        change(layout.clock, 1);
        for (const auto& [name, v] : rec.inputs) change(name, v);
        for (const auto& [name, v] : rec.outputs_presented) change(name, v);
        stamp(rec.edge_time.time_fs + clock.period_fs / 2);
        change(layout.clock, 0);
    }

    const std::string text = os.str();
    sink.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!sink) throw SinkWriteError("failed to write VCD output");
    return text.size();
}

}  // namespace qhdl::harness
