#include <iostream>

#include "hpade/cli/app.hpp"

int main(int argc, char** argv) { return hpade::cli::run_cli(argc, argv, std::cout, std::cerr); }
