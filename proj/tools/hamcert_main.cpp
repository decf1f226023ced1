#include <iostream>

#include "hamcert/cli.hpp"

int main(int argc, char** argv) { return hamcert::cli_main(argc, argv, std::cout, std::cerr); }
