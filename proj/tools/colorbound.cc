/* vim: set sw=4 sts=4 et : */

#include <colorbound/cli.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args{ argv + 1, argv + argc };
    return colorbound::cli::main_with_args(args, std::cout, std::cerr);
}
