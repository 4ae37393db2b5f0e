#include <iostream>

#include "dini/cli.hpp"

int main(int argc, char** argv) {
  return dini::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
