#include <string>
#include <vector>

#include "ccent/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ccent::run_cli(args);
}
