#include "hcminor/cli.hpp"

int main(int argc, char** argv) { return hcminor::cli::run(argc, argv); }
