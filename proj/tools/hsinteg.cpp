#include <iostream>
#include <string>
#include <vector>

#include <hsinteg/cli.hpp>

int main(int argc, char **argv)
{
    return hsinteg::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
