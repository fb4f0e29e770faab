#include "catpop/experiments.hpp"

int main(int argc, char** argv) { return catpop::run_cli(argc, argv); }
