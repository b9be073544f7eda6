#include "qseries/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return qseries::cli::main(argc, argv, std::cout, std::cerr);
}
