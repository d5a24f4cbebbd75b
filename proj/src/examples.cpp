#include "lagmat/examples.hpp"

#include <bit>

namespace lagmat::examples {

namespace {

FieldMatrix with_identity(TractId f, const std::vector<std::vector<mpq_class>>& sigma) {
  const int n = static_cast<int>(sigma.size());
  FieldMatrix m(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, TractElement::one(f));
    for (int j = 0; j < n; ++j)
      m.set(i, n + j, TractElement::from_rational(f, sigma[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  }
  return m;
}

}  // namespace

FieldMatrix small_lagrangian() {
  return FieldMatrix::from_ints(TractId::rationals(), {{1, 0, 1, 1}, {0, 1, 1, 1}});
}

Matroid uniform_2_3() { return Matroid::uniform(2, 3); }

FieldMatrix ternary_identity() { return with_identity(TractId::finite_field(3), {{1, 0}, {0, 1}}); }

FieldMatrix ternary_full() { return with_identity(TractId::finite_field(3), {{1, 1}, {1, -1}}); }

SymmetricMatroid non_even_lift() { return lift(3, {0b000, 0b001, 0b010, 0b100, 0b111}); }

FieldMatrix identity_pair(int n, TractId field) {
  std::vector<std::vector<mpq_class>> id(static_cast<std::size_t>(n), std::vector<mpq_class>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return with_identity(field, id);
}

RGPFunction four_term_obstruction() {
  const int n = 4;
  const TractId f = TractId::finite_field(2);
  RGPFunction phi(n, f);
  for (const ESubset& b : coordinates(n)) {
    bool basis = false;
    if (b.classify() == SetKind::Transversal) {
      const int stars = std::popcount(b.high());
      basis = stars == 0 || stars == 2;
    } else {
      // ii*jk and ii*jk*: the two elements outside the skew pair are not both starred.
      const std::uint64_t pair = b.skew_pairs();
      const std::uint64_t rest_high = b.high() & ~pair;
      basis = std::popcount(rest_high) <= 1;
    }
    if (basis) phi.set(b, TractElement::one(f));
  }
  return phi;
}

FieldMatrix positive_definite() {
  return with_identity(TractId::rationals(), {{1, mpq_class(1, 2), mpq_class(1, 4)},
                                              {mpq_class(1, 2), 1, mpq_class(1, 4)},
                                              {mpq_class(1, 4), mpq_class(1, 4), 1}});
}

std::vector<NamedInstance> all() {
  std::vector<NamedInstance> out;
  const LagrangianWitness small = LagrangianWitness::verify(small_lagrangian());
  out.push_back({"small_lagrangian_matrix", small.matrix()});
  out.push_back({"small_lagrangian_rgp", plucker(small)});
  out.push_back({"small_lagrangian_bases", family_file(InstanceKind::Bases, 2, underlying(plucker(small)).bases())});
  out.push_back({"small_lagrangian_fcircuits", circuit_vectors(small).star()});

  const Matroid u23 = uniform_2_3();
  out.push_back({"uniform_2_3_matroid", MatroidFile{u23.n(), u23.bases()}});
  out.push_back({"uniform_2_3_circuits", family_file(InstanceKind::Circuits, 3, ant_circuits(u23).circuits)});
  const Matroid u34 = Matroid::uniform(3, 4);
  out.push_back({"uniform_3_4_matroid", MatroidFile{u34.n(), u34.bases()}});

  out.push_back({"ternary_identity_matrix", ternary_identity()});
  out.push_back({"ternary_full_matrix", ternary_full()});
  out.push_back({"transversals_2_bases", family_file(InstanceKind::Bases, 2, enumerate(2, SetKind::Transversal))});
  out.push_back({"all_coordinates_2_bases", family_file(InstanceKind::Bases, 2, coordinates(2))});

  const SymmetricMatroid lifted = non_even_lift();
  out.push_back({"non_even_lift_symmetric", family_file(InstanceKind::Symmetric, 3, lifted.bases())});

  out.push_back({"identity_pair_matrix", identity_pair(3, TractId::rationals())});
  out.push_back({"four_term_obstruction_rgp", four_term_obstruction()});
  out.push_back({"positive_definite_matrix", positive_definite()});
  const RGPFunction pd = plucker(LagrangianWitness::verify(positive_definite()));
  out.push_back({"positive_definite_sign_rgp", pushforward(pd, TractMorphism::rationals_to_sign())});
  out.push_back({"positive_definite_gaussoid",
                 family_file(InstanceKind::Gaussoid, 3, gaussoid_from_antisym(underlying(pd)).members())});
  return out;
}

}  // namespace lagmat::examples
