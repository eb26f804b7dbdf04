#include <string>
#include <vector>

#include <cyclord/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyclord::cli::dispatch(args);
}
