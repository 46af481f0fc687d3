#include <iostream>

#include "subcount/cli.hpp"

int main(int argc, char** argv) {
  return subcount::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
