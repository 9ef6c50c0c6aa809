#include <iostream>

#include "faithrep/cli.hpp"

int main(int argc, char** argv) {
  return faithrep::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
