#include <iostream>

#include "scx/cli.hpp"

int main(int argc, char** argv)
{
    return scx::cli::run(argc, argv, std::cout, std::cerr);
}
