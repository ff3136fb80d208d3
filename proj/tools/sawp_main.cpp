#include "sawp/report.hpp"

int main(int argc, char** argv) { return sawp::report::cli::cli_main(argc, argv); }
