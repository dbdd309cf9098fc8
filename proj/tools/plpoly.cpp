#include "plpoly_cli.hpp"

int main(int argc, char** argv) {
  return plpoly::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
