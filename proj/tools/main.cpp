#include <iostream>

#include "nfcurve/cli.hpp"

int main(int argc, char** argv) { return nfcurve::cli::run(argc, argv, std::cout, std::cerr); }
