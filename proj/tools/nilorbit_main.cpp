#include "nilorbit/cli.hpp"

int main(int argc, char** argv) { return nilorbit::run_cli(argc, argv); }
