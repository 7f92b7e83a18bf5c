// Project moments - Copyright 2026 the moments authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "moments/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return moments::cli::run(args, std::cin, std::cout, std::cerr);
}
