#include "commands.hpp"

int main(int argc, char** argv) { return majorana::cli::run(argc, argv); }
