#include <iostream>

#include "fermat/cli.hpp"

int main(int argc, char** argv)
{
    return fermat::cli::dispatch({argv + 1, argv + argc}, std::cout, std::cerr);
}
