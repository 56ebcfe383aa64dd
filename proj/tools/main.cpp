#include <iostream>
#include <string>
#include <vector>

#include "cauchy_jump/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cauchy_jump::cli::run(args, std::cout, std::cerr);
}
