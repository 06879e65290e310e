#include "lebesgue/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lebesgue::cli_dispatch(argc, argv, std::cout, std::cerr); }
