#include "qhdl/harness/stimulus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace qhdl::harness {

namespace {

std::vector<std::string> split_words(std::string_view line) {
    std::vector<std::string> words;
    std::istringstream in{std::string(line)};
    for (std::string w; in >> w;) words.push_back(std::move(w));
    return words;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

sim::Stimulus parse_stimulus(std::string_view text, const std::string& file) {
    sim::Stimulus st;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        auto words = split_words(line);
        if (words.empty()) continue;
        auto fail = [&](const std::string& msg) { return StimulusSyntaxError(line_no, msg, file); };
        auto bit = [&](const std::string& w) -> sim::Bit {
            if (w == "0") return 0;
            if (w == "1") return 1;
            throw fail("expected bit value 0 or 1, found '" + w + "'");
        };
        auto name = [&](const std::string& w) {
            if (!valid_name(w)) throw fail("invalid input name '" + w + "'");
            return lowercase(w);
        };

        if (words[0] == "default") {
            if (words.size() != 3) throw fail("expected 'default <name> <0|1>'");
            st.defaults[name(words[1])] = bit(words[2]);
        } else if (words[0] == "at") {
            if (words.size() != 4) throw fail("expected 'at <cycle> <name> <0|1>'");
            std::uint64_t cycle = 0;
            const auto& c = words[1];
            auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), cycle);
            if (ec != std::errc{} || ptr != c.data() + c.size()) throw fail("invalid cycle number '" + c + "'");
            st.overrides.push_back({cycle, name(words[2]), bit(words[3])});
        } else {
            throw fail("unknown directive '" + words[0] + "'");
        }
    }
    std::stable_sort(st.overrides.begin(), st.overrides.end(),
                     [](const auto& a, const auto& b) { return a.cycle < b.cycle; });
    return st;
}

}  // namespace qhdl::harness
