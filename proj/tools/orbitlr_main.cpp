#include <iostream>
#include <string>
#include <vector>

#include "orbitlr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return orbitlr::cli::run(args, std::cout, std::cerr);
}
