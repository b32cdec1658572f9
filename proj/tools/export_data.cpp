// Regenerates the shipped catalogs under data/ from the built-in tables.
#include <fstream>
#include <iostream>

#include "maninlab/serialize.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: maninlab_export_data DATA_DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::ofstream(dir + "/symmetric_pairs.json") << maninlab::catalog_to_json(maninlab::builtin_catalog()).dump(1) << "\n";
  std::ofstream(dir + "/varieties.json") << maninlab::varieties_to_json(maninlab::builtin_varieties()).dump(1) << "\n";
  return 0;
}
