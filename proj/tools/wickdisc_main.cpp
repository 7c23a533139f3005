#include "wickdisc/cli.hpp"

int main(int argc, char** argv) { return wickdisc::cli::run(argc, argv); }
