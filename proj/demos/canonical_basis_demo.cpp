// Walk through one weight space: theta-good words, the PBW and canonical
// families, the transition data and the simple characters.

#include <qshuffle/qshuffle.hpp>

#include <iostream>

using namespace qsh;

int main() {
  const DimVector beta = parse_dimvector("1:2,-1:2");
  std::cout << "weight " << beta.str() << ", tkpf = " << tkpf(beta).str() << "\n\n";

  WeightSpace ws(beta);
  for (std::size_t i = 0; i < ws.dim(); ++i) {
    const Word& nu = ws.good()[i];
    std::cout << "word " << nu.str() << "  (theta-kappa = " << theta_kappa(nu).str() << ")\n";
    std::cout << "  PBW:      ";
    for (const auto& [w, c] : ws.pbw(i).terms) std::cout << "[" << w.str() << "] " << c.str() << "  ";
    std::cout << "\n  canonical:";
    for (const auto& [w, c] : ws.canonical(i).terms) std::cout << " [" << w.str() << "] " << c.str() << " ";
    std::cout << "\n  dual can.:";
    for (const auto& [w, c] : ws.dual_canonical(i).terms) std::cout << " [" << w.str() << "] " << c.str() << " ";
    std::cout << "\n";
  }

  std::cout << "\ncanonical-to-PBW transitions (rows ascending):\n";
  for (const auto& row : ws.trans_can_pbw()) {
    for (const auto& v : row) std::cout << "  " << v.str();
    std::cout << "\n";
  }

  const CharTable t = simple_chars(beta);
  std::cout << "\ngraded decomposition matrix:\n";
  for (const auto& row : t.decomp) {
    for (const auto& v : row) std::cout << "  " << v.str();
    std::cout << "\n";
  }
  return 0;
}
