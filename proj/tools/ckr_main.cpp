#include "ckr/cli.hpp"

int main(int argc, char** argv) { return ckr::cli_main(argc, argv); }
