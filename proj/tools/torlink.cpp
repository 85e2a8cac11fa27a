#include <iostream>

#include "torlink/cli.hpp"

int main(int argc, char** argv) {
  return torlink::run_cli(argc, argv, std::cout, std::cerr);
}
