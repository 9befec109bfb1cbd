#include <iostream>

#include "psg/cli.hpp"

int main(int argc, char** argv) {
  return psg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
