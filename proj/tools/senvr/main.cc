#include <iostream>

#include "senvr/commands.h"

int main(int argc, char** argv) {
  return senvr::cli::Main(argc, argv, std::cout, std::cerr);
}
