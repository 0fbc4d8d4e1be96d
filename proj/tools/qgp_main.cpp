#include "qgp/cli.hpp"

int main(int argc, char** argv) { return qgp::run_cli(argc, argv); }
