#include "hlplan/cli.hpp"

int main(int argc, char** argv) { return hlplan::cli_main(argc, argv); }
