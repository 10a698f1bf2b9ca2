#include "ffzeta/driver.hpp"

int main(int argc, char** argv) { return ffzeta::run_cli(argc, argv); }
