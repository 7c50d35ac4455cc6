#include <iostream>

#include "ineqcert/cli.hpp"

int main(int argc, char** argv) {
  return ineqcert::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
