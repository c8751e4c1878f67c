#include "bhj/cli.hpp"

int main(int argc, char** argv) { return bhj::cli::run_main(argc, argv); }
