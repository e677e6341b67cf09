#include <iostream>
#include <string>
#include <vector>

#include "ftsent/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ftsent::run_cli(args, std::cout, std::cerr);
}
