#include "matgirth/cli.hpp"

int main(int argc, char** argv) { return matgirth::cli::main_entry(argc, argv); }
