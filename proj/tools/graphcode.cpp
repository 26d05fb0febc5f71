#include "graphcode/cli.hpp"

int main(int argc, char** argv) { return graphcode::cli_main(argc, argv); }
