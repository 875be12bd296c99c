#include <iostream>

#include "fourfold/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    fourfold::RunResult result = fourfold::run(args);
    (result.exit_code == 0 ? std::cout : std::cerr) << result.output;
    return result.exit_code;
}
