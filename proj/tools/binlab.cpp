#include <iostream>
#include <string>
#include <vector>

#include "binlab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return binlab::run(args, std::cout, std::cerr);
}
