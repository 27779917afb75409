#include "topring/cli.hpp"

int main(int argc, char** argv) { return topring::cli::run(argc, argv); }
