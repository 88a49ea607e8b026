// Command-line front end: one experiment (or batch) per invocation.
#include <iostream>
#include <string>
#include <vector>

#include "qwline/experiment.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return qwline::run_cli(args, std::cout, std::cerr);
}
