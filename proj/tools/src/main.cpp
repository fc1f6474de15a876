#include "hermitia_cli/cli.hpp"

int main(int argc, char** argv) { return hermitia::cli::main(argc, argv); }
