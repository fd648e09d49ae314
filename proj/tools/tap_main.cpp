#include <iostream>
#include <string>
#include <vector>

#include "tap/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tap::run_cli(std::move(args), std::cout, std::cerr);
}
