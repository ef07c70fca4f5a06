// Regenerates src/catalog_data.cpp from the exhaustive derivation.
#include <iostream>

#include "lrw1/oracle.hpp"

int main() {
  std::cout << "// Generated by gen_catalog_data. Do not edit.\n"
               "#include \"catalog_data.hpp\"\n\n"
               "namespace lrw1::detail {\n\n"
               "const std::vector<EmbeddedObstruction>& embedded_catalog() {\n"
               "  static const std::vector<EmbeddedObstruction> data{\n";
  for (const auto& e : lrw1::derive_obstruction_catalog()) {
    std::cout << "      {" << e.graph.order() << ", {";
    bool first = true;
    for (auto [u, v] : e.graph.edges()) {
      std::cout << (first ? "" : ", ") << "{" << u << ", " << v << "}";
      first = false;
    }
    std::cout << "}, \"" << e.name << "\", {";
    first = true;
    for (const auto& a : e.annotations) {
      std::cout << (first ? "" : ", ") << "\"" << a << "\"";
      first = false;
    }
    std::cout << "}},\n";
  }
  std::cout << "  };\n  return data;\n}\n\n}  // namespace lrw1::detail\n";
}
