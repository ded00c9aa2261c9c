#ifndef MAXSUB_SEMIGROUP_HPP_
#define MAXSUB_SEMIGROUP_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graphs.hpp"
#include "perm_group.hpp"
#include "rees_matrix.hpp"

namespace maxsub {

  //! A map {0, ..., n - 1} -> itself.  Composition is left to right:
  //! `(a * b)[i] == b[a[i]]`.
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<point_type> images);

    std::size_t degree() const noexcept {
      return _images.size();
    }
    point_type operator[](std::size_t i) const {
      return _images[i];
    }
    std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    Transformation operator*(Transformation const& that) const;

    auto operator<=>(Transformation const&) const = default;
    bool operator==(Transformation const&) const  = default;

   private:
    std::vector<point_type> _images;
  };

  struct TransformationHash {
    std::size_t operator()(Transformation const& t) const noexcept;
  };

  //! Parses a 1-based image row such as "1 3 4 1 5 5 5".
  Transformation parse_image_row(std::string_view text);

  //! A finite semigroup given by generators, enumerated breadth first.
  //!
  //! Elements are numbered in discovery order: first the distinct generators,
  //! then their products.  Only the right and left Cayley graphs are needed
  //! from the representation; a full table is kept when the semigroup is
  //! small enough, otherwise products are traced along words.
  class FiniteSemigroup {
   public:
    //! Closure of \p gens under \p mul.  T needs equality and \p Hash.
    template <typename T, typename Mul, typename Hash = std::hash<T>>
    static FiniteSemigroup closure(std::vector<T> const& gens,
                                   Mul const&            mul,
                                   Limits const&         limits   = {},
                                   std::vector<T>*       elements = nullptr);

    static FiniteSemigroup
    from_transformations(std::vector<Transformation> const& gens,
                         Limits const&                      limits = {});

    //! A semigroup given by its Cayley table, table[a][b] = ab.  Generators
    //! default to all elements.  Throws InputError on a non-associative or
    //! malformed table.
    static FiniteSemigroup
    from_table(std::vector<std::vector<std::size_t>> const& table,
               std::optional<std::vector<std::size_t>>      generators = {},
               Limits const&                                limits     = {});

    //! The Rees 0-matrix semigroup generated by all its elements, so element
    //! ids coincide with those of \p r.
    static FiniteSemigroup from_rzms(ReesZeroMatrixSemigroup const& r,
                                     Limits const&                  limits = {});

    std::size_t size() const noexcept {
      return _parent.size();
    }
    std::size_t nr_generators() const noexcept {
      return _gens.size();
    }
    //! Element id of the j-th generator (generators may repeat).
    std::size_t generator(std::size_t j) const {
      return _gens[j];
    }
    std::vector<std::size_t> const& generators() const noexcept {
      return _gens;
    }
    //! Distinct generator elements, ascending.
    std::vector<std::size_t> generator_elements() const;

    std::size_t right(std::size_t a, std::size_t j) const {
      return _right[a * _gens.size() + j];
    }
    std::size_t left(std::size_t j, std::size_t a) const {
      return _left[a * _gens.size() + j];
    }

    std::size_t product(std::size_t a, std::size_t b) const;
    bool        has_table() const noexcept {
      return !_table.empty();
    }

    //! Generator indices spelling \p a.
    std::vector<std::size_t> word(std::size_t a) const;
    std::size_t product_of_word(std::vector<std::size_t> const& w) const;
    //! Word as text, e.g. "x1x6".
    std::string label(std::size_t a) const;

    //! Original table row for from_table semigroups, else the element id.
    std::size_t source_id(std::size_t a) const {
      return _source.empty() ? a : _source[a];
    }

    //! Images of each element, if built from transformations.
    std::vector<Transformation> const& transformations() const noexcept {
      return _transformations;
    }

   private:
    FiniteSemigroup() = default;
    void finish(Limits const& limits);

    std::vector<std::size_t>    _gens;
    std::vector<std::size_t>    _right;
    std::vector<std::size_t>    _left;
    std::vector<std::size_t>    _parent;  // npos for generators
    std::vector<std::size_t>    _last;    // last generator of the word
    std::vector<std::size_t>    _table;
    std::vector<std::size_t>    _source;
    std::vector<Transformation> _transformations;
  };

  //! Green's structure.  Class ids are numbered by their smallest element.
  struct GreensStructure {
    std::vector<std::size_t> r_class, l_class, h_class, j_class;
    std::vector<VertexSet>   r_members, l_members, h_members, j_members;

    //! Edge J -> J' when J' = J_{ax} or J_{xa} for a generator x and a in J.
    //! Acyclic; J > J' iff J' is reachable from J.
    Digraph           j_order;
    std::vector<bool> regular_j;
    std::vector<bool> is_idempotent;  // per element
    VertexSet         idempotents;

    std::size_t nr_j_classes() const noexcept {
      return j_members.size();
    }
    //! Classes J' with J' < J, ascending.
    std::vector<std::size_t> below(std::size_t j) const;
    //! Classes J' with J' > J, ascending.
    std::vector<std::size_t> above(std::size_t j) const;
    bool                     is_maximal(std::size_t j) const {
      return j_order.in_neighbours(j).empty();
    }
    //! All J-classes, every class before the classes below it.
    std::vector<std::size_t> topological_order() const;
  };

  GreensStructure greens_structure(FiniteSemigroup const& s);

  VertexSet idempotents(FiniteSemigroup const& s);

  //! A group H-class as a permutation group, via its right regular action
  //! on itself: h acts by k -> kh.
  struct HClassGroup {
    VertexSet                elements;  // sorted
    PermGroup                group;
    std::vector<std::size_t> to_group;    // position in elements -> index
    std::vector<std::size_t> from_group;  // index -> element id
  };

  HClassGroup group_h_class_as_permgroup(FiniteSemigroup const& s,
                                         GreensStructure const& gs,
                                         std::size_t            h_class);

  //! An isomorphism from the principal factor J* onto a Rees 0-matrix
  //! semigroup.  Rows are the R-classes of J and columns the L-classes, both
  //! in class-id order.
  struct PrincipalFactorIso {
    std::size_t              j_class;
    ReesZeroMatrixSemigroup  target;
    std::vector<std::size_t> r_classes;  // i -> R-class id
    std::vector<std::size_t> l_classes;  // λ -> L-class id
    std::vector<std::size_t> backward_map;  // target id -> element, [0] unused
    std::unordered_map<std::size_t, std::size_t> forward_map;

    //! Requires x in J.
    std::size_t forward(std::size_t x) const {
      return forward_map.at(x);
    }
    //! Requires id != 0.
    std::size_t backward(std::size_t id) const {
      return backward_map[id];
    }
  };

  //! Throws InputError if J is not regular.
  PrincipalFactorIso principal_factor_iso(FiniteSemigroup const& s,
                                          GreensStructure const& gs,
                                          std::size_t            j_class);

  //! Generators for the union of the J-classes strictly below J, chosen
  //! greedily from the top of that ideal down.  Empty if nothing is below.
  VertexSet ideal_below_generators(FiniteSemigroup const& s,
                                   GreensStructure const& gs,
                                   std::size_t            j_class);

  //! Distinct generator elements x with J_x > J, ascending.
  VertexSet x_prime(FiniteSemigroup const& s,
                    GreensStructure const& gs,
                    std::size_t            j_class);

  //! Sorted closure of \p gens inside \p s.
  VertexSet closure_in(FiniteSemigroup const& s, VertexSet const& gens);

  ////////////////////////////////////////////////////////////////////////
  // Implementation of the closure template
  ////////////////////////////////////////////////////////////////////////

  template <typename T, typename Mul, typename Hash>
  FiniteSemigroup FiniteSemigroup::closure(std::vector<T> const& gens,
                                           Mul const&            mul,
                                           Limits const&         limits,
                                           std::vector<T>*       elements) {
    if (gens.empty()) {
      throw InputError("a semigroup needs at least one generator");
    }
    std::size_t const                     k    = gens.size();
    std::size_t const                     npos = static_cast<std::size_t>(-1);
    FiniteSemigroup                       s;
    std::vector<T>                        elts;
    std::unordered_map<T, std::size_t, Hash> index;
    auto add = [&](T const& x, std::size_t parent, std::size_t last) {
      auto [it, fresh] = index.emplace(x, elts.size());
      if (fresh) {
        if (elts.size() == limits.semigroup_size) {
          throw CapacityError("semigroup has more elements than allowed",
                              limits.semigroup_size);
        }
        elts.push_back(x);
        s._parent.push_back(parent);
        s._last.push_back(last);
      }
      return it->second;
    };
    for (std::size_t j = 0; j < k; ++j) {
      s._gens.push_back(add(gens[j], npos, j));
    }
    for (std::size_t a = 0; a < elts.size(); ++a) {
      s._right.resize((a + 1) * k);
      for (std::size_t j = 0; j < k; ++j) {
        T y                  = mul(elts[a], gens[j]);
        s._right[a * k + j] = add(y, a, j);
      }
    }
    s.finish(limits);
    if (elements != nullptr) {
      *elements = std::move(elts);
    }
    return s;
  }

}  // namespace maxsub

#endif  // MAXSUB_SEMIGROUP_HPP_
