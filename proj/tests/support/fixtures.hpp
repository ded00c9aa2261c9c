#ifndef MAXSUB_TESTS_FIXTURES_HPP_
#define MAXSUB_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "maxsub/rees_matrix.hpp"
#include "maxsub/semigroup.hpp"

namespace fixtures {

  using maxsub::FiniteSemigroup;
  using maxsub::ReesZeroMatrixSemigroup;

  struct Named {
    std::string     name;
    FiniteSemigroup semigroup;
  };

  // The 8 generators x1..x8 of W, a subsemigroup of T7.
  std::vector<maxsub::Transformation> w_generators();
  FiniteSemigroup                     w_semigroup();

  // The 6x6 Rees 0-matrix semigroup over S4.
  ReesZeroMatrixSemigroup s4_example();

  // Brandt semigroup over the symmetric group of degree d.
  ReesZeroMatrixSemigroup brandt_symmetric(std::size_t degree, std::size_t m);
  // Brandt semigroup over C2.
  ReesZeroMatrixSemigroup brandt_c2(std::size_t m);
  // [[1, 1], [1, x]] over C2.
  ReesZeroMatrixSemigroup c2_full_block();

  // <a | a^(index + period) = a^index>, generated by a.
  FiniteSemigroup monogenic(std::size_t index, std::size_t period);

  // Multiplication tables for the elementary families; all elements generate.
  FiniteSemigroup zero_semigroup(std::size_t n);
  FiniteSemigroup left_zero_semigroup(std::size_t n);
  FiniteSemigroup right_zero_semigroup(std::size_t n);

  // Adjoins an identity to s, via its table.  Every element generates.
  FiniteSemigroup with_identity(FiniteSemigroup const& s);

  // Direct product of C3 and the semilattice {1, 0}, generated by (a, 1) and
  // (1, 0).
  FiniteSemigroup c3_times_semilattice();

  // Every semigroup in the oracle corpus (all have at most 16 elements).
  std::vector<Named> oracle_corpus();

  // Some larger semigroups for the property suite (at most 2000 elements).
  std::vector<Named> property_corpus();

  // The table of s, table[a][b] = ab.
  std::vector<std::vector<std::size_t>> table_of(FiniteSemigroup const& s);

}  // namespace fixtures

#endif  // MAXSUB_TESTS_FIXTURES_HPP_
