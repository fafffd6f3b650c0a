#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    return lattice_euclid::cli::run(argc, argv, std::cout, std::cerr);
}
