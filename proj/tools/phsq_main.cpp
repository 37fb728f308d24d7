#include "phsq/cli.hpp"

int main(int argc, char** argv) { return phsq::run_cli(argc, argv); }
