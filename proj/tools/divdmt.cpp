#include "divdmt/cli.hpp"

int main(int argc, char** argv) { return divdmt::cli::run(argc, argv); }
