#include <iostream>

#include "rslab/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const rslab::cli::Outcome o = rslab::cli::run(args);
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}
