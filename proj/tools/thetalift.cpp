#include "thetalift/cli/cli.hpp"

int main(int argc, char** argv) { return thetalift::cli::run_cli(argc, argv); }
