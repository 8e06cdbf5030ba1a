#include <betawalk/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return betawalk::cli::run(argc, argv, std::cout, std::cerr); }
