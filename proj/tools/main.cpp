#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const cusp::cli::CommandResult result = cusp::cli::dispatch(args);
  std::ostream& out = result.status == cusp::cli::Status::ok ? std::cout : std::cerr;
  out << result.render() << '\n';
  return result.exit_code();
}
