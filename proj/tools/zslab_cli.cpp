#include "zslab/zslab.hpp"
#include "zslab/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    std::cout << "zslab (stub)\n";
    (void)argc;
    (void)argv;
    return 0;
}
