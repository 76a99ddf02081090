#include "app.hpp"

int main(int argc, char** argv) { return besselgeo::app::run_cli(argc, argv); }
