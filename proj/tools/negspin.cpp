#include "negspin/cli.hpp"

int main(int argc, char** argv) { return negspin::cli::run_cli(argc, argv); }
