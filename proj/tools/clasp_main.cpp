#include <iostream>
#include <vector>

#include "clasp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return clasp::run_cli(args, std::cout, std::cerr);
}
