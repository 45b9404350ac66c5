#pragma once

// Minimal VCD reader used to check the writer from the outside. It only
// understands what a 1-bit scalar dump needs: $timescale, $var, #time and
// 0/1 value changes (inside or outside $dumpvars).

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhdl::testing {

struct VcdChange {
    std::uint64_t time;
    std::string name;
    int value;
};

struct VcdDump {
    std::string timescale;
    std::vector<std::string> names;  // declaration order
    std::vector<VcdChange> changes;  // file order

    std::vector<std::uint64_t> times_of(const std::string& name, int value) const {
        std::vector<std::uint64_t> out;
        for (const auto& c : changes) {
            if (c.name == name && c.value == value) out.push_back(c.time);
        }
        return out;
    }

    // Value of `name` after all changes at or before `t`.
    int value_at(const std::string& name, std::uint64_t t) const {
        int v = -1;
        for (const auto& c : changes) {
            if (c.time > t) break;
            if (c.name == name) v = c.value;
        }
        return v;
    }
};

inline VcdDump read_vcd(const std::string& text) {
    VcdDump dump;
    std::map<std::string, std::string> by_id;
    std::istringstream in(text);
    std::string tok;
    std::uint64_t now = 0;
    bool have_time = false;
    while (in >> tok) {
        if (tok == "$timescale") {
            std::string part;
            while (in >> part && part != "$end") dump.timescale += (dump.timescale.empty() ? "" : " ") + part;
        } else if (tok == "$var") {
            std::string type, width, id, name, end;
            in >> type >> width >> id >> name >> end;
            if (end != "$end" || width != "1") throw std::runtime_error("unsupported $var");
            by_id[id] = name;
            dump.names.push_back(name);
        } else if (tok == "$dumpvars" || tok == "$end") {
            continue;
        } else if (tok[0] == '$') {
            std::string part;
            while (in >> part && part != "$end") {
            }
        } else if (tok[0] == '#') {
            std::uint64_t t = std::stoull(tok.substr(1));
            if (have_time && t <= now) throw std::runtime_error("timestamps not increasing at " + tok);
            now = t;
            have_time = true;
        } else if (tok[0] == '0' || tok[0] == '1') {
            auto it = by_id.find(tok.substr(1));
            if (it == by_id.end()) throw std::runtime_error("unknown identifier in " + tok);
            if (!have_time) throw std::runtime_error("value change before first timestamp");
            dump.changes.push_back({now, it->second, tok[0] - '0'});
        } else {
            throw std::runtime_error("unexpected token " + tok);
        }
    }
    return dump;
}

}  // namespace qhdl::testing
