#include <iostream>

#include "regjm/cli.hpp"

int main(int argc, char** argv) { return regjm::run_cli(argc, argv, std::cout, std::cerr); }
