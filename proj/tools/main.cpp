#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  int code = 0;
  auto config = typespace::cli::parse_args(argc, argv, std::cout, std::cerr, &code);
  if (!config) return code;
  return typespace::cli::run(*config, std::cout, std::cerr);
}
