#include "circle_sqm/cli/app.hpp"

int main(int argc, char** argv) { return circle_sqm::cli::run_cli(argc, argv); }
