#include "llx/cli.hpp"

int main(int argc, char** argv) { return llx::run_cli(argc, argv); }
