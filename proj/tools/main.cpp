#include "repstab/cli.hpp"

int main(int argc, char** argv) { return repstab::cli::run(argc, argv); }
