#include "dirac/cli.hpp"

int main(int argc, char** argv) { return dirac::run_cli(argc, argv); }
