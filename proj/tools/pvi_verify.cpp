#include "painleve/cli/cli.hpp"

int main(int argc, char** argv) { return painleve::cli::run(argc, argv); }
