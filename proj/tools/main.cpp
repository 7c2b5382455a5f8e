#include <iostream>

#include "hss/cli.hpp"

int main(int argc, char** argv) { return hss::cli::main_entry(argc, argv, std::cout, std::cerr); }
