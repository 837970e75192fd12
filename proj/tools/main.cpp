#include <iostream>

#include "ocalc/cli.hpp"

int main(int argc, char** argv) {
    return ocalc::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
