#include <iostream>

#include "ringlab/cli.hpp"

int main(int argc, char** argv) {
    return ringlab::run_cli(argc, argv, std::cout, std::cerr);
}
