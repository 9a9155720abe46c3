#include <iostream>

#include "ptsep/cli.hh"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ptsep::cli::run(args, std::cout, std::cerr);
}
