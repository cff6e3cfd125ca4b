#include "cli.hpp"

int main(int argc, char** argv) { return reestype::cli::main_entry(argc, argv); }
