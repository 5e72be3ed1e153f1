#include "dmorse/cli.hpp"

int main(int argc, char** argv) { return dmorse::cli::run(argc, argv); }
