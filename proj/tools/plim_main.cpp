#include <iostream>
#include <string>
#include <vector>

#include "plim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return plim::cli::main(args, std::cout, std::cerr);
}
