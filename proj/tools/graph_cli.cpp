#include <iostream>
#include <string>
#include <vector>

#include "graphlib/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return graphlib::run_command(args, std::cin, std::cout, std::cerr);
}
