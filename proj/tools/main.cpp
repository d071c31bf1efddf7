#include "qhodge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    qhodge::CliResult res = qhodge::run_cli(args);
    (res.code == 2 ? std::cerr : std::cout) << res.output;
    return res.code;
}
