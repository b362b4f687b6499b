#include "tracecert/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tracecert::run_cli(argc, argv, std::cout, std::cerr); }
