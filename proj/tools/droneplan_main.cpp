#include "droneplan/cli.hpp"

int main(int argc, char** argv) { return droneplan::cli_main(argc, argv); }
