#include <cstdlib>
#include <iostream>
#include <unistd.h>

#include "qhdl/cli/commands.hpp"

int main(int argc, char** argv) {
    qhdl::cli::Console console{std::cout, std::cerr, std::getenv("QHDL_NO_COLOR") == nullptr && isatty(2)};
    return qhdl::cli::run_cli(argc, argv, console);
}
