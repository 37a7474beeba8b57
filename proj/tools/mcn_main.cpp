#include "mcn/cli.hpp"

int main(int argc, char** argv) { return mcn::run_cli(argc, argv); }
