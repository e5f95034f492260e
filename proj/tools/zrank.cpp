#include "zrank/cli.hpp"

int main(int argc, char** argv) { return zrank::cli::run(argc, argv); }
