#ifndef MAXSUB_ORACLE_HPP_
#define MAXSUB_ORACLE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "graphs.hpp"
#include "semigroup.hpp"

namespace maxsub {

  struct OracleReport {
    std::size_t            semigroup_size = 0;
    std::vector<VertexSet> maximal;  // each sorted; lexicographic order
    double                 seconds = 0;
  };

  //! Largest semigroup brute_force_maximal accepts.
  inline constexpr std::size_t oracle_subset_bound = 16;

  //! Every non-empty maximal subsemigroup, found by testing all subsets for
  //! closure.  Uses nothing but the multiplication.  Throws CapacityError
  //! above oracle_subset_bound elements.
  OracleReport brute_force_maximal(FiniteSemigroup const& s);

  struct Verdict {
    bool        ok = false;
    std::string diagnostic;  // empty when ok

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Checks that \p members (sorted) is a proper subsemigroup and that adding
  //! any single missing element generates all of \p s.
  Verdict verify_maximal(FiniteSemigroup const& s, VertexSet const& members);

}  // namespace maxsub

#endif  // MAXSUB_ORACLE_HPP_
