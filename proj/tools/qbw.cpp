#include <iostream>
#include <string>
#include <vector>

#include "qbw/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return qbw::run_cli(args, std::cout, std::cerr);
}
