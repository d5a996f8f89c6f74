#include <iostream>
#include <string>
#include <vector>

#include "bcft/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bcft::cli::run(args, std::cout, std::cerr);
}
