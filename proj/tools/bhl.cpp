#include "bhl/cli.hpp"

int main(int argc, char** argv) { return bhl::run_cli(argc, argv); }
