// Canonical extension of the four-element Boolean algebra: the image of each
// element as a set of proper filters, then the verifier report.

#include <iostream>

#include "canext/ba/canonical_extension.hpp"

int main() {
  using namespace canext::ba;
  const auto ext = canonical_extension_ba(FinBoolAlg::with_atoms(2));
  const auto& b = ext.algebra();

  std::cout << "|B| = " << b.size() << ", |C| = " << ext.extension().size() << "\n";
  for (auto x : b.elements()) {
    std::cout << "e(" << b.label(x) << ") = {";
    const char* sep = "";
    for (auto g : ext.generators(ext.e(x))) {
      std::cout << sep << "up" << b.label(g);
      sep = ", ";
    }
    std::cout << "}\n";
  }

  const auto report = verify_canonical_ba(ext);
  for (const auto& c : report.checks)
    std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
  return report.pass() ? 0 : 1;
}
