#include <iostream>
#include <string>
#include <vector>

#include "toromotive/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return toromotive::cli::run(args, std::cout);
}
