#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return monoconj::cli::main_entry(argc, argv, std::cout, std::cerr); }
