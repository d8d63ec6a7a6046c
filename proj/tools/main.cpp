#include <iostream>

#include "webs/cli.hpp"

int main(int argc, char** argv) {
  return webs::run_cli(argc, argv, std::cout, std::cerr);
}
