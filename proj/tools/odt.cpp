#include <iostream>

#include "odt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return odt::run_cli(args, std::cout, std::cerr);
}
