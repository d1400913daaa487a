#include "zsig/cli.hpp"

int main(int argc, char** argv) { return zsig::cli::run(argc, argv); }
