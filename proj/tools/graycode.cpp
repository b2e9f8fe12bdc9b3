#include <iostream>

#include "graycode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return graycode::run_cli(args, std::cin, std::cout, std::cerr);
}
