#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <unistd.h>

#include "qhdl/elab/compile.hpp"
#include "qhdl/frontend/parser.hpp"

namespace qhdl::testing {

inline std::filesystem::path data_path(const std::string& name) {
    return std::filesystem::path(QHDL_TEST_DATA_DIR) / name;
}

inline std::string read_text(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline frontend::DesignFile parse_data(const std::string& name) {
    return frontend::parse_source(read_text(data_path(name)), name);
}

inline std::shared_ptr<const elab::CompiledDesign> compile_data(const std::string& name, const std::string& top) {
    auto design = parse_data(name);
    return std::make_shared<const elab::CompiledDesign>(elab::compile_design(design, top));
}

inline std::shared_ptr<const elab::CompiledDesign> bell() {
    static auto compiled = compile_data("bell.qhdl", "bellstate");
    return compiled;
}

// Fresh directory below the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("qhdl-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace qhdl::testing
