#include <iostream>
#include <vector>

#include "folcoh/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const folcoh::CommandResult result = folcoh::run_command(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
