#include "liewidth/cli.hpp"

int main(int argc, char** argv) { return liewidth::cli::main_entry(argc, argv); }
