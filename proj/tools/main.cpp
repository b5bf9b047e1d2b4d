#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return igm::cli::cli_main(argc, argv, std::cout, std::cerr); }
