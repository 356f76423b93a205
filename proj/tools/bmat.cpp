#include "bmat/cli.hpp"

int main(int argc, char** argv) { return bmat::cli::run(argc, argv); }
