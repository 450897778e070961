// Verify the orientifold KLR presentation in its polynomial representation
// at rank two, with a nontrivial framing.

#include <qshuffle/qshuffle.hpp>

#include <iostream>

using namespace qsh;

int main() {
  const DimVector beta = parse_dimvector("1:1,-1:1,3:1,-3:1");
  const DimVector lambda = parse_dimvector("1:1");

  const Report relations = verify_relations(2, beta, lambda, 5);
  const Report grading = verify_grading(2, beta, lambda);
  const Report pbw = verify_pbw_independence(2, beta, lambda, 5, 1);

  int failures = 0;
  for (const Report* r : {&relations, &grading, &pbw})
    for (const auto& e : r->entries) {
      if (!e.pass) ++failures;
      std::cout << (e.pass ? "[pass] " : "[FAIL] ") << e.family << " / " << e.which << " @ " << e.word << "\n";
    }
  std::cout << (failures == 0 ? "all checks passed\n" : "failures present\n");
  return failures == 0 ? 0 : 1;
}
