#include "basins/cli.hpp"

int main(int argc, char** argv) { return basins::cli::run_cli(argc, argv); }
