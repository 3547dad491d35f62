#include <iostream>

#include "concordia/cli.hpp"

int main(int argc, char** argv) {
    return concordia::run_cli({argv + 1, argv + argc}, std::cout);
}
