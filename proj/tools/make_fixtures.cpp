// Regenerates the bundled example documents. The output is deterministic;
// tests compare the shipped files byte for byte against fixture_document.

#include <iostream>
#include <string>

#include "hpt/driver.hpp"
#include "hpt/io.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  for (const std::string name : {"interval", "circle", "torus", "massey"}) {
    std::string path = dir + "/" + name + ".json";
    hpt::write_document_file(hpt::fixture_document(name), path);
    std::cout << path << "\n";
  }
  return 0;
}
