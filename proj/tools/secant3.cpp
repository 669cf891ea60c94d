#include <iostream>

#include "secant/cli.hpp"

int main(int argc, char** argv)
{
    return secant::cli::main(argc, argv, std::cout, std::cerr);
}
