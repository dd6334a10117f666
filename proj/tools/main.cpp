#include <iostream>

#include "fockcb/cli.hpp"

int main(int argc, char** argv) { return fockcb::run_cli(argc, argv, std::cout, std::cerr); }
