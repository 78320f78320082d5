#include "tenseg/cli.hpp"

int main(int argc, char** argv) { return tenseg::runCli(argc, argv); }
