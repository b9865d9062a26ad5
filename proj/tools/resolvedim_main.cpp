#include <iostream>
#include <string>
#include <vector>

#include "resolvedim/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return resolvedim::run_cli(args, std::cout, std::cerr);
}
