#include <iostream>

#include "reflekt/cli.hpp"

int main(int argc, char** argv) {
  return reflekt::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
