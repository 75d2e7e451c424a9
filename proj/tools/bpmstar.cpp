#include "bpm/cli.hpp"

int main(int argc, char** argv) { return bpm::cli::run(argc, argv); }
