#ifndef MAXSUB_PERM_GROUP_HPP_
#define MAXSUB_PERM_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace maxsub {

  using point_type = std::uint32_t;

  //! A permutation of {0, ..., degree - 1}, stored as its image list.
  //!
  //! Products act on the right, as in GAP: `(p * q)[i] == q[p[i]]`, i.e. first
  //! apply \p p, then \p q.  Conjugation `g^-1 V g` therefore has its usual
  //! meaning for right actions.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<point_type> images);

    static Permutation identity(std::size_t degree);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](std::size_t i) const {
      return _images[i];
    }

    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept;
    Permutation inverse() const;
    Permutation operator*(Permutation const& that) const;

    auto operator<=>(Permutation const&) const = default;
    bool operator==(Permutation const&) const  = default;

   private:
    std::vector<point_type> _images;
  };

  struct PermutationHash {
    std::size_t operator()(Permutation const& p) const noexcept;
  };

  //! Parses 1-based cycle notation such as "(1 2)(3 4)"; "()" and "id" are the
  //! identity.  Throws InputError naming the offending character position.
  Permutation parse_cycles(std::string_view text, std::size_t degree);

  //! 1-based cycle notation; the identity prints as "()".
  std::string to_cycle_string(Permutation const& p);

  //! A permutation group given by generators, with its full element list.
  //!
  //! The elements are sorted, so the identity always comes first and two
  //! groups are equal exactly when their element lists are.
  class PermGroup {
   public:
    PermGroup() = default;
    PermGroup(std::size_t degree, std::vector<Permutation> generators);

    //! Builds a group whose sorted element list is already known.
    static PermGroup from_elements(std::size_t               degree,
                                   std::vector<Permutation> generators,
                                   std::vector<Permutation> sorted_elements);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    std::vector<Permutation> const& generators() const noexcept {
      return _generators;
    }
    std::vector<Permutation> const& elements() const noexcept {
      return _elements;
    }

    std::optional<std::size_t> index_of(Permutation const& p) const;
    bool contains(Permutation const& p) const {
      return index_of(p).has_value();
    }

    bool operator==(PermGroup const& that) const {
      return _elements == that._elements;
    }

   private:
    std::size_t              _degree = 0;
    std::vector<Permutation> _generators;
    std::vector<Permutation> _elements;
  };

  //! Multiplication by element index of a PermGroup.  Small groups get a
  //! dense table; larger ones multiply permutations and binary-search.
  class GroupTable {
   public:
    explicit GroupTable(PermGroup const& group);

    std::size_t order() const noexcept {
      return _order;
    }
    std::size_t identity() const noexcept {
      return 0;
    }
    std::size_t product(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const {
      return _inverse[a];
    }

    static constexpr std::size_t dense_limit = 2048;

   private:
    std::size_t              _order;
    std::vector<std::size_t> _product;
    std::vector<std::size_t> _inverse;
    PermGroup                _group;  // only kept when no dense table
  };

  struct MaximalSubgroupClass {
    PermGroup                representative;
    PermGroup                normalizer;
    std::vector<Permutation> normalizer_coset_reps;
  };

  PermGroup generate_group(std::size_t                   degree,
                           std::vector<Permutation> const& gens,
                           Limits const&                 limits = {});

  //! Every subgroup of \p group exactly once, by cyclic extension.  Sorted by
  //! order, then by element list.
  std::vector<PermGroup> all_subgroups(PermGroup const& group,
                                       Limits const&    limits = {});

  //! One representative per conjugacy class of maximal subgroups, largest
  //! first.
  std::vector<MaximalSubgroupClass>
  maximal_subgroup_classes(PermGroup const& group, Limits const& limits = {});

  PermGroup normalizer(PermGroup const& group, PermGroup const& sub);

  //! A right transversal r_1 = id, ..., r_m of sub in group: the cosets
  //! sub * r_j partition group.  If \p order is non-empty it gives the order
  //! (as element indices of \p group) in which candidates are tried; the
  //! identity is always taken first regardless.
  std::vector<Permutation>
  right_coset_reps(PermGroup const&           group,
                   PermGroup const&           sub,
                   std::span<std::size_t const> order = {});

  //! g^-1 V g.
  PermGroup conjugate_subgroup(PermGroup const& sub, Permutation const& g);

  bool is_subgroup(std::span<Permutation const> sub, PermGroup const& group);
  bool is_subgroup(PermGroup const& sub, PermGroup const& group);

}  // namespace maxsub

#endif  // MAXSUB_PERM_GROUP_HPP_
