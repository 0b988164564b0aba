#include <iostream>
#include <vector>

#include "u5/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return u5::cli_run(args, std::cout, std::cerr);
}
