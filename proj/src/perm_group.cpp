#include "maxsub/perm_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

namespace maxsub {

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<point_type> images)
      : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (auto x : _images) {
      if (x >= _images.size() || seen[x]) {
        throw InputError("image list is not a permutation of {0, ..., "
                         + std::to_string(_images.size()) + " - 1}");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t degree) {
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), 0);
    Permutation result;
    result._images = std::move(images);
    return result;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    Permutation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[_images[i]] = static_cast<point_type>(i);
    }
    return result;
  }

  Permutation Permutation::operator*(Permutation const& that) const {
    if (that.degree() != degree()) {
      throw InputError("cannot multiply permutations of degree "
                       + std::to_string(degree()) + " and "
                       + std::to_string(that.degree()));
    }
    Permutation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[i] = that._images[_images[i]];
    }
    return result;
  }

  std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
    std::size_t seed = p.degree();
    for (auto x : p.images()) {
      seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }

  namespace {
    [[noreturn]] void cycle_error(std::string_view text,
                                  std::size_t      pos,
                                  std::string const& what) {
      throw InputError("malformed cycle notation \"" + std::string(text)
                       + "\" at position " + std::to_string(pos + 1) + ": "
                       + what);
    }
  }  // namespace

  Permutation parse_cycles(std::string_view text, std::size_t degree) {
    std::vector<point_type> images(degree);
    std::iota(images.begin(), images.end(), 0);

    std::size_t pos = 0;
    auto        skip_space = [&] {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_space();
    if (text.substr(pos) == "id") {
      return Permutation(std::move(images));
    }
    std::vector<bool> used(degree, false);
    while (pos < text.size()) {
      if (text[pos] != '(') {
        cycle_error(text, pos, "expected '('");
      }
      ++pos;
      std::vector<point_type> cycle;
      while (true) {
        while (pos < text.size()
               && (std::isspace(static_cast<unsigned char>(text[pos]))
                   || text[pos] == ',')) {
          ++pos;
        }
        if (pos == text.size()) {
          cycle_error(text, pos, "unterminated cycle, expected ')'");
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
          cycle_error(text, pos, "expected a point or ')'");
        }
        std::size_t start = pos;
        std::size_t value = 0;
        while (pos < text.size()
               && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
          if (value > degree) {
            break;
          }
          ++pos;
        }
        if (value == 0 || value > degree) {
          cycle_error(text,
                      start,
                      "point out of range 1.." + std::to_string(degree));
        }
        if (used[value - 1]) {
          cycle_error(text, start, "point repeated");
        }
        used[value - 1] = true;
        cycle.push_back(static_cast<point_type>(value - 1));
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      skip_space();
    }
    return Permutation(std::move(images));
  }

  std::string to_cycle_string(Permutation const& p) {
    std::string       out;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t i = 0; i < p.degree(); ++i) {
      if (seen[i] || p[i] == i) {
        continue;
      }
      out += '(';
      std::size_t j = i;
      do {
        if (j != i) {
          out += ' ';
        }
        out += std::to_string(j + 1);
        seen[j] = true;
        j       = p[j];
      } while (j != i);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  ////////////////////////////////////////////////////////////////////////
  // PermGroup
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<Permutation> enumerate(std::size_t                     degree,
                                       std::vector<Permutation> const& gens,
                                       std::size_t                     bound) {
      for (auto const& g : gens) {
        if (g.degree() != degree) {
          throw InputError("generator of degree " + std::to_string(g.degree())
                           + " given for a group of degree "
                           + std::to_string(degree));
        }
      }
      std::vector<Permutation> elements{Permutation::identity(degree)};
      std::unordered_set<Permutation, PermutationHash> seen(elements.begin(),
                                                            elements.end());
      for (std::size_t i = 0; i < elements.size(); ++i) {
        for (auto const& g : gens) {
          Permutation p = elements[i] * g;
          if (seen.insert(p).second) {
            elements.push_back(std::move(p));
            if (elements.size() > bound) {
              throw CapacityError("permutation group too large", bound);
            }
          }
        }
      }
      std::sort(elements.begin(), elements.end());
      return elements;
    }

    // Greedy generating set of a subgroup given by its elements.
    std::vector<Permutation>
    small_generating_set(std::size_t                     degree,
                         std::vector<Permutation> const& elements) {
      std::vector<Permutation>                         gens;
      std::unordered_set<Permutation, PermutationHash> current{
          Permutation::identity(degree)};
      for (auto const& p : elements) {
        if (current.count(p) == 0) {
          gens.push_back(p);
          auto more = enumerate(degree, gens, elements.size());
          current   = {more.begin(), more.end()};
        }
      }
      return gens;
    }
  }  // namespace

  PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
      : _degree(degree),
        _generators(std::move(generators)),
        _elements(enumerate(degree, _generators, Limits{}.group_order)) {}

  PermGroup PermGroup::from_elements(std::size_t              degree,
                                     std::vector<Permutation> generators,
                                     std::vector<Permutation> sorted_elements) {
    PermGroup g;
    g._degree     = degree;
    g._generators = std::move(generators);
    g._elements   = std::move(sorted_elements);
    return g;
  }

  std::optional<std::size_t> PermGroup::index_of(Permutation const& p) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), p);
    if (it == _elements.end() || *it != p) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  PermGroup generate_group(std::size_t                     degree,
                           std::vector<Permutation> const& gens,
                           Limits const&                   limits) {
    return PermGroup::from_elements(
        degree, gens, enumerate(degree, gens, limits.group_order));
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupTable
  ////////////////////////////////////////////////////////////////////////

  GroupTable::GroupTable(PermGroup const& group)
      : _order(group.order()), _inverse(group.order()) {
    auto const& elts = group.elements();
    for (std::size_t a = 0; a < _order; ++a) {
      _inverse[a] = *group.index_of(elts[a].inverse());
    }
    if (_order <= dense_limit) {
      _product.resize(_order * _order);
      for (std::size_t a = 0; a < _order; ++a) {
        for (std::size_t b = 0; b < _order; ++b) {
          _product[a * _order + b] = *group.index_of(elts[a] * elts[b]);
        }
      }
    } else {
      _group = group;
    }
  }

  std::size_t GroupTable::product(std::size_t a, std::size_t b) const {
    if (!_product.empty()) {
      return _product[a * _order + b];
    }
    auto const& elts = _group.elements();
    return *_group.index_of(elts[a] * elts[b]);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Bits = boost::dynamic_bitset<>;

    struct Lattice {
      std::vector<Bits>                     subgroups;
      std::vector<std::vector<std::size_t>> gens;
    };

    Bits cyclic(GroupTable const& table, std::size_t x) {
      Bits        b(table.order());
      std::size_t y = 0;
      do {
        b.set(y);
        y = table.product(y, x);
      } while (y != 0);
      return b;
    }

    // <H, x> where H is a subgroup (as bits) generated by hgens.
    Bits join(GroupTable const&               table,
              Bits const&                     h,
              std::vector<std::size_t> const& hgens,
              std::size_t                     x) {
      Bits                     k = h;
      std::deque<std::size_t>  queue;
      std::vector<std::size_t> gens = hgens;
      gens.push_back(x);
      for (auto a = h.find_first(); a != Bits::npos; a = h.find_next(a)) {
        auto b = table.product(a, x);
        if (!k.test(b)) {
          k.set(b);
          queue.push_back(b);
        }
      }
      while (!queue.empty()) {
        auto b = queue.front();
        queue.pop_front();
        for (auto g : gens) {
          auto c = table.product(b, g);
          if (!k.test(c)) {
            k.set(c);
            queue.push_back(c);
          }
        }
      }
      return k;
    }

    Lattice lattice(PermGroup const& group, Limits const& limits) {
      if (group.order() > limits.subgroup_parent) {
        throw CapacityError("subgroup lattice requested for a group of order "
                                + std::to_string(group.order()),
                            limits.subgroup_parent);
      }
      GroupTable                 table(group);
      std::size_t const          n = group.order();
      Lattice                    result;
      std::map<Bits, std::size_t> seen;
      auto add = [&](Bits b, std::vector<std::size_t> g) {
        if (seen.emplace(b, result.subgroups.size()).second) {
          result.subgroups.push_back(std::move(b));
          result.gens.push_back(std::move(g));
          return true;
        }
        return false;
      };
      Bits trivial(n);
      trivial.set(0);
      add(trivial, {});
      std::vector<std::size_t> cyclic_gens;
      for (std::size_t x = 1; x < n; ++x) {
        if (add(cyclic(table, x), {x})) {
          cyclic_gens.push_back(x);
        }
      }
      for (std::size_t i = 0; i < result.subgroups.size(); ++i) {
        for (auto x : cyclic_gens) {
          if (result.subgroups[i].test(x)) {
            continue;
          }
          Bits h    = result.subgroups[i];
          auto gens = result.gens[i];
          Bits k    = join(table, h, gens, x);
          gens.push_back(x);
          add(std::move(k), std::move(gens));
        }
      }
      return result;
    }

    PermGroup to_group(PermGroup const&                parent,
                       Bits const&                     bits,
                       std::vector<std::size_t> const& gens) {
      std::vector<Permutation> elements;
      for (auto a = bits.find_first(); a != Bits::npos;
           a      = bits.find_next(a)) {
        elements.push_back(parent.elements()[a]);
      }
      std::vector<Permutation> generators;
      for (auto g : gens) {
        generators.push_back(parent.elements()[g]);
      }
      return PermGroup::from_elements(
          parent.degree(), std::move(generators), std::move(elements));
    }

    void require_subgroup(PermGroup const& sub, PermGroup const& group) {
      if (!is_subgroup(sub, group)) {
        throw InputError("the given group is not a subgroup of the parent");
      }
    }

    bool by_order_then_elements(PermGroup const& a, PermGroup const& b) {
      if (a.order() != b.order()) {
        return a.order() < b.order();
      }
      return a.elements() < b.elements();
    }
  }  // namespace

  std::vector<PermGroup> all_subgroups(PermGroup const& group,
                                       Limits const&    limits) {
    auto                   lat = lattice(group, limits);
    std::vector<PermGroup> result;
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
      result.push_back(to_group(group, lat.subgroups[i], lat.gens[i]));
    }
    std::sort(result.begin(), result.end(), by_order_then_elements);
    return result;
  }

  std::vector<MaximalSubgroupClass>
  maximal_subgroup_classes(PermGroup const& group, Limits const& limits) {
    auto              lat = lattice(group, limits);
    std::size_t const n   = group.order();
    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
      auto const& v = lat.subgroups[i];
      if (v.count() == n) {
        continue;
      }
      bool is_max = true;
      for (std::size_t j = 0; j < lat.subgroups.size() && is_max; ++j) {
        auto const& w = lat.subgroups[j];
        if (w.count() != n && w.count() > v.count() && v.is_subset_of(w)) {
          is_max = false;
        }
      }
      if (is_max) {
        maximal.push_back(i);
      }
    }

    std::vector<PermGroup> candidates;
    for (auto i : maximal) {
      candidates.push_back(to_group(group, lat.subgroups[i], lat.gens[i]));
    }
    std::sort(candidates.begin(),
              candidates.end(),
              [](PermGroup const& a, PermGroup const& b) {
                if (a.order() != b.order()) {
                  return a.order() > b.order();
                }
                return a.elements() < b.elements();
              });

    std::vector<MaximalSubgroupClass>   result;
    std::vector<std::vector<Permutation>> covered;
    for (auto const& v : candidates) {
      if (std::find(covered.begin(), covered.end(), v.elements())
          != covered.end()) {
        continue;
      }
      for (auto const& g : group.elements()) {
        auto conj = conjugate_subgroup(v, g);
        if (std::find(covered.begin(), covered.end(), conj.elements())
            == covered.end()) {
          covered.push_back(conj.elements());
        }
      }
      auto norm = normalizer(group, v);
      auto reps = right_coset_reps(group, norm);
      result.push_back({v, std::move(norm), std::move(reps)});
    }
    return result;
  }

  PermGroup normalizer(PermGroup const& group, PermGroup const& sub) {
    require_subgroup(sub, group);
    std::vector<Permutation> elements;
    for (auto const& g : group.elements()) {
      Permutation gi     = g.inverse();
      bool        normal = true;
      for (auto const& v : sub.generators()) {
        if (!sub.contains(gi * v * g)) {
          normal = false;
          break;
        }
      }
      if (normal) {
        elements.push_back(g);
      }
    }
    auto gens = small_generating_set(group.degree(), elements);
    return PermGroup::from_elements(
        group.degree(), std::move(gens), std::move(elements));
  }

  std::vector<Permutation>
  right_coset_reps(PermGroup const&             group,
                   PermGroup const&             sub,
                   std::span<std::size_t const> order) {
    require_subgroup(sub, group);
    std::size_t const        n = group.order();
    std::vector<bool>        covered(n, false);
    std::vector<Permutation> reps;
    auto                     take = [&](std::size_t g) {
      auto const& r = group.elements()[g];
      reps.push_back(r);
      for (auto const& v : sub.elements()) {
        covered[*group.index_of(v * r)] = true;
      }
    };
    take(0);
    if (order.empty()) {
      for (std::size_t g = 0; g < n; ++g) {
        if (!covered[g]) {
          take(g);
        }
      }
    } else {
      for (auto g : order) {
        if (!covered[g]) {
          take(g);
        }
      }
    }
    return reps;
  }

  PermGroup conjugate_subgroup(PermGroup const& sub, Permutation const& g) {
    if (g.degree() != sub.degree()) {
      throw InputError("conjugating element has the wrong degree");
    }
    Permutation              gi = g.inverse();
    std::vector<Permutation> gens, elements;
    for (auto const& x : sub.generators()) {
      gens.push_back(gi * x * g);
    }
    for (auto const& x : sub.elements()) {
      elements.push_back(gi * x * g);
    }
    std::sort(elements.begin(), elements.end());
    return PermGroup::from_elements(
        sub.degree(), std::move(gens), std::move(elements));
  }

  bool is_subgroup(std::span<Permutation const> sub, PermGroup const& group) {
    std::unordered_set<Permutation, PermutationHash> set;
    for (auto const& p : sub) {
      if (p.degree() != group.degree() || !group.contains(p)) {
        return false;
      }
      set.insert(p);
    }
    if (set.count(Permutation::identity(group.degree())) == 0) {
      return false;
    }
    for (auto const& a : set) {
      for (auto const& b : set) {
        if (set.count(a * b) == 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_subgroup(PermGroup const& sub, PermGroup const& group) {
    if (sub.degree() != group.degree() || group.order() % sub.order() != 0) {
      return false;
    }
    return std::all_of(sub.elements().begin(),
                       sub.elements().end(),
                       [&group](auto const& p) { return group.contains(p); });
  }

}  // namespace maxsub
