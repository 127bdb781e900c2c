#include <iostream>

#include "wsp/cli.hpp"

int main(int argc, char** argv) { return wsp::run(argc, argv, std::cout, std::cerr); }
