#include "twindom/cli.hpp"

int main(int argc, char** argv) { return twindom::cli::run(argc, argv); }
