#include "tacho/cli.hpp"

int main(int argc, char** argv) { return tacho::cli::run(argc, argv); }
