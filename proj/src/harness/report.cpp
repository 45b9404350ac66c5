#include "qhdl/harness/report.hpp"

#include <cstdio>
#include <sstream>

#include "qhdl/harness/vcd.hpp"

namespace qhdl::harness {

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::size_t write_state_trace(const std::vector<StateTraceEntry>& entries, std::ostream& sink) {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "{\"time_fs\":" << e.time.time_fs << ",\"step\":" << e.time.delta_step << ",\"amps\":[";
        for (std::size_t i = 0; i < e.amplitudes.size(); ++i) {
            os << (i ? "," : "") << '[' << format_double(e.amplitudes[i].magnitude) << ','
               << format_double(e.amplitudes[i].phase) << ']';
        }
        os << "]}\n";
    }
    const std::string text = os.str();
    sink.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!sink) throw SinkWriteError("failed to write state trace");
    return text.size();
}

std::string report_histogram(const sim::Histogram& histogram) {
    std::ostringstream os;
    for (const auto& [key, count] : histogram.counts) {
        char frac[32];
        std::snprintf(frac, sizeof frac, "%.4f",
                      histogram.total ? static_cast<double>(count) / static_cast<double>(histogram.total) : 0.0);
        os << key << ' ' << count << ' ' << frac << '\n';
    }
    os << "total " << histogram.total << '\n';
    return os.str();
}

std::string report_histogram(const sim::Histogram& histogram, std::ostream& sink) {
    std::string text = report_histogram(histogram);
    sink << text;
    if (!sink) throw SinkWriteError("failed to write histogram report");
    return text;
}

std::string format_cycle_log(const sim::CycleRecord& record) {
    std::string line = "cycle " + std::to_string(record.cycle) + ":";
    for (const auto& [name, v] : record.outputs_presented) line += " " + name + "=" + (v ? "1" : "0");
    return line;
}

}  // namespace qhdl::harness
