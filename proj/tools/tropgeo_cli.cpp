#include "tropgeo/cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  tropgeo::cli::CliResult res = tropgeo::cli::run(args);
  if (!res.output.empty()) std::cout << res.output;
  if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
  return res.code;
}
