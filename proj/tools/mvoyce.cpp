#include <iostream>
#include <string>
#include <vector>

#include "mvoyce/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return mvoyce::cli::run(args, std::cout, std::cerr);
}
