#include "kcenter/cli/app.hpp"

int main(int argc, char** argv) { return kcenter::cli::run_cli(argc, argv); }
