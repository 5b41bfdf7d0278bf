#include <iostream>
#include <string>
#include <vector>

#include "effectkit/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return effectkit::cli::run(args, std::cout, std::cerr);
}
