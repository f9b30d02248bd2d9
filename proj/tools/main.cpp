#include <string>
#include <vector>

#include "cantorval_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cantorval::cli::run(args);
}
