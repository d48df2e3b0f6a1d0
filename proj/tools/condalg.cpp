#include <iostream>
#include <string>
#include <vector>

#include "condalg/cli.hpp"

int main(int argc, char **argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return condalg::run_cli(args, std::cout, std::cerr);
}
