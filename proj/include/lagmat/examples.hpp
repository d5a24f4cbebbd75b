// Small worked instances used by the CLI `examples` command, the fixtures
// and the acceptance run.

#ifndef LAGMAT_EXAMPLES_HPP
#define LAGMAT_EXAMPLES_HPP

#include <string>
#include <vector>

#include "lagmat/io.hpp"

namespace lagmat::examples {

// [[1,0,1,1],[0,1,1,1]] over Q.
FieldMatrix small_lagrangian();
// U_{2,3} as the row space of [[1,0,1],[0,1,1]].
Matroid uniform_2_3();
// [I | A] over GF(3) for A = I and A = [[1,1],[1,-1]].
FieldMatrix ternary_identity();
FieldMatrix ternary_full();
// Lift of the delta-matroid {0, 1, 2, 3, 123} on [3].
SymmetricMatroid non_even_lift();
// [I | I] over `field`.
FieldMatrix identity_pair(int n, TractId field);
// Indicator over GF(2) of the antisymmetric matroid on +-[4] that passes the
// three-term relations and fails a four-term one.
RGPFunction four_term_obstruction();
// [I | Sigma] over Q with Sigma = [[1,1/2,1/4],[1/2,1,1/4],[1/4,1/4,1]].
FieldMatrix positive_definite();

struct NamedInstance {
  std::string name;  // file stem
  Instance instance;
};
// Every worked instance in the forms the CLI reads.
std::vector<NamedInstance> all();

}  // namespace lagmat::examples

#endif  // LAGMAT_EXAMPLES_HPP
