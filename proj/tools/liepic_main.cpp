#include "liepic/cli.hpp"

int main(int argc, char** argv) { return liepic::run_cli(argc, argv); }
