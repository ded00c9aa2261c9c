#ifndef MAXSUB_REES_MATRIX_HPP_
#define MAXSUB_REES_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graphs.hpp"
#include "perm_group.hpp"

namespace maxsub {

  //! M0[I, G, Λ; P].  Group elements are indices into group().elements().
  //!
  //! Element ids: 0 is the zero, and (i, g, λ) is 1 + (i |G| + g) |Λ| + λ, so
  //! ids are dense in [0, size()).
  class ReesZeroMatrixSemigroup {
   public:
    using Entry  = std::optional<std::size_t>;
    using Matrix = std::vector<std::vector<Entry>>;  // matrix[λ][i]

    struct Triple {
      std::size_t i, g, lambda;
      auto operator<=>(Triple const&) const = default;
    };

    ReesZeroMatrixSemigroup(std::size_t i_size,
                            std::size_t lambda_size,
                            PermGroup   group,
                            Matrix      matrix);

    //! Same, with matrix entries given as permutations (nullopt for zero).
    static ReesZeroMatrixSemigroup
    from_permutations(std::size_t                                  i_size,
                      std::size_t                                  lambda_size,
                      PermGroup                                    group,
                      std::vector<std::vector<std::optional<Permutation>>> const&
                          matrix);

    std::size_t i_size() const noexcept {
      return _i_size;
    }
    std::size_t lambda_size() const noexcept {
      return _lambda_size;
    }
    PermGroup const& group() const noexcept {
      return _group;
    }
    GroupTable const& table() const noexcept {
      return _table;
    }
    Matrix const& matrix() const noexcept {
      return _matrix;
    }
    Entry entry(std::size_t lambda, std::size_t i) const {
      return _matrix[lambda][i];
    }

    std::size_t size() const noexcept {
      return 1 + _i_size * _group.order() * _lambda_size;
    }

    std::size_t element(std::size_t i, std::size_t g, std::size_t lambda) const {
      return 1 + (i * _group.order() + g) * _lambda_size + lambda;
    }
    static bool is_zero(std::size_t id) noexcept {
      return id == 0;
    }
    //! Requires id != 0.
    Triple triple(std::size_t id) const;

    std::size_t multiply(std::size_t a, std::size_t b) const;

    //! Every row and every column of P has a non-zero entry.
    bool is_regular() const;
    bool has_zero_entry() const;

    //! "0" or "(i,g,λ)" with 1-based i, group element in cycle notation, and
    //! λ printed as -1, -2, ...
    std::string to_string(std::size_t id) const;

   private:
    std::size_t _i_size;
    std::size_t _lambda_size;
    PermGroup   _group;
    GroupTable  _table;
    Matrix      _matrix;
  };

  //! Bipartite: vertices 0..|I|-1 are I, then |I|..|I|+|Λ|-1 are Λ.
  Graph graham_houghton(ReesZeroMatrixSemigroup const& r);

  struct NormalizationComponent {
    std::vector<std::size_t> i_indices;       // sorted
    std::vector<std::size_t> lambda_indices;  // sorted
    std::size_t              anchor_i;
    std::size_t              anchor_lambda;
    PermGroup                group;  // generated by the normalized block
  };

  //! An isomorphism (i, g, λ) -> (i, u_i g v_λ, λ) onto a normalized copy.
  struct NormalizationData {
    ReesZeroMatrixSemigroup             normalized;
    std::vector<std::size_t>            u;  // group index per i
    std::vector<std::size_t>            v;  // group index per λ
    std::vector<NormalizationComponent> components;

    std::size_t to_normalized(std::size_t id) const;
    std::size_t from_normalized(std::size_t id) const;
  };

  //! Rescales along a breadth-first spanning forest of the Graham-Houghton
  //! graph so that every tree edge becomes the identity.  Each tree is rooted
  //! at a Λ vertex.  A seed shuffles the visiting order, giving a different
  //! but equally valid forest.  Throws InputError if \p r is not regular.
  NormalizationData normalize(ReesZeroMatrixSemigroup const& r,
                              std::optional<std::uint64_t>   shuffle_seed = {},
                              Limits const&                  limits = {});

  enum class RzmsType { R1, R2, R3, R4, R5, R6 };

  std::string to_string(RzmsType t);

  struct RzmsMaxSubsemigroup {
    RzmsType type;
    // R3: removed λ; R4: removed i.
    std::optional<std::size_t> removed;
    // R5: the independent set X ∪ Y, X ⊆ I and Y ⊆ Λ.
    std::vector<std::size_t> x_indices;
    std::vector<std::size_t> y_indices;
    // R6: index into maximal_subgroup_classes(group), and t_1, ..., t_n.
    std::size_t              subgroup_class = 0;
    std::vector<Permutation> coset_tuple;

    std::vector<std::size_t> generators;
    std::vector<std::size_t> members;  // sorted

    std::size_t size() const noexcept {
      return members.size();
    }
  };

  struct R6Options {
    //! Shuffles the spanning forest and the coset transversals; the output
    //! must not change as a family of sets.
    std::optional<std::uint64_t> shuffle_seed;
    Limits                       limits;
  };

  std::vector<RzmsMaxSubsemigroup> max_r1_r2(ReesZeroMatrixSemigroup const& r);
  std::vector<RzmsMaxSubsemigroup> max_r3_r4(ReesZeroMatrixSemigroup const& r);
  std::vector<RzmsMaxSubsemigroup> max_r5(ReesZeroMatrixSemigroup const& r,
                                          Limits const& limits = {});

  //! Type (R6).  With \p required, only results containing every listed
  //! element are kept.
  std::vector<RzmsMaxSubsemigroup>
  max_r6(ReesZeroMatrixSemigroup const&          r,
         std::optional<std::vector<std::size_t>> required = {},
         R6Options const&                        options  = {});

  //! All maximal subsemigroups, sorted by type then members, without
  //! duplicate member sets.
  std::vector<RzmsMaxSubsemigroup>
  max_subsemigroups_rzms(ReesZeroMatrixSemigroup const& r,
                         R6Options const&               options = {});

}  // namespace maxsub

#endif  // MAXSUB_REES_MATRIX_HPP_
