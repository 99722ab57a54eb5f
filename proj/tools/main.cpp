#include "srujac/cli.hpp"

int main(int argc, char** argv) { return srujac::run_cli(argc, argv); }
