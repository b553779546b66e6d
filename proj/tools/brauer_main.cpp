#include <iostream>
#include <string>
#include <vector>

#include "brauer/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return brauer::cli::run(args, std::cout, std::cerr);
}
