#include <iostream>
#include <string>
#include <vector>

#include "h2z/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return h2z::run_cli(args, std::cout, std::cerr);
}
