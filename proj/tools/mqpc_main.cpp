#include <iostream>
#include <string>
#include <vector>

#include "mqpc/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return mqpc::dispatch(args, std::cout, std::cerr);
}
