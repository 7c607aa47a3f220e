#include "ucf/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return ucf::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
