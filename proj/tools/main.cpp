#include <iostream>
#include <string>
#include <vector>

#include "liouville/cli.hpp"
#include "liouville/error.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return liouville::cli::run_command_line(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
