#include <iostream>
#include <vector>

#include "orbifano/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return orbifano::cli::dispatch(args, std::cout, std::cerr);
}
