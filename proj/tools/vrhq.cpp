#include "vrhq_cli.hpp"

int main(int argc, char** argv) { return vrhq::cli::run(argc, argv); }
