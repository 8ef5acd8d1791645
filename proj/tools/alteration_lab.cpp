#include "cli_app.hpp"

int main(int argc, char** argv) { return alab::cli::run(argc, argv); }
