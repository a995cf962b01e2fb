#include <dodeca_cli/commands.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    return dodeca::cli::run(argc, argv, std::cout, std::cerr);
}
