#include <iostream>

#include "gcs/cli/commands.hpp"

int main(int argc, char** argv) { return gcs::cli::run(argc, argv, std::cout, std::cerr); }
