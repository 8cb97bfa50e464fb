#include <iostream>
#include <vector>

#include "bierfan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const bierfan::cli::RunResult result = bierfan::cli::run(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.status;
}
