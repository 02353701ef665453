#include "rnf/cli.hpp"

int main(int argc, char** argv) { return rnf::cli::run(argc, argv); }
