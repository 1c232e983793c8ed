#include <iostream>
#include <string>
#include <vector>

#include "chaos/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const chaos::cli::CommandResult result = chaos::cli::run(args);
    std::cout << chaos::cli::render(result);
    return chaos::cli::exit_code(result.status);
}
