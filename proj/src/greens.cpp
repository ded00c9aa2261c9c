#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "maxsub/closure.hpp"
#include "maxsub/semigroup.hpp"

namespace maxsub {

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> GreensStructure::below(std::size_t j) const {
    auto out = reachable_set(j_order, j);
    out.erase(std::find(out.begin(), out.end(), j));
    return out;
  }

  std::vector<std::size_t> GreensStructure::above(std::size_t j) const {
    std::vector<bool>        seen(nr_j_classes(), false);
    std::vector<std::size_t> stack{j}, out;
    seen[j] = true;
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      for (auto d : j_order.in_neighbours(c)) {
        if (!seen[d]) {
          seen[d] = true;
          out.push_back(d);
          stack.push_back(d);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> GreensStructure::topological_order() const {
    std::size_t const        n = nr_j_classes();
    std::vector<std::size_t> indegree(n), out;
    std::priority_queue<std::size_t,
                        std::vector<std::size_t>,
                        std::greater<std::size_t>>
        ready;
    for (std::size_t c = 0; c < n; ++c) {
      indegree[c] = j_order.in_neighbours(c).size();
      if (indegree[c] == 0) {
        ready.push(c);
      }
    }
    while (!ready.empty()) {
      auto c = ready.top();
      ready.pop();
      out.push_back(c);
      for (auto d : j_order.out_neighbours(c)) {
        if (--indegree[d] == 0) {
          ready.push(d);
        }
      }
    }
    return out;
  }

  namespace {
    std::vector<VertexSet> members_of(std::vector<std::size_t> const& cls,
                                      std::size_t                     count) {
      std::vector<VertexSet> out(count);
      for (std::size_t a = 0; a < cls.size(); ++a) {
        out[cls[a]].push_back(a);
      }
      return out;
    }
  }  // namespace

  GreensStructure greens_structure(FiniteSemigroup const& s) {
    std::size_t const n = s.size(), k = s.nr_generators();
    Digraph           right(n), left(n), both(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t j = 0; j < k; ++j) {
        auto b = s.right(a, j);
        auto c = s.left(j, a);
        if (b != a) {
          right.add_edge(a, b);
          both.add_edge(a, b);
        }
        if (c != a) {
          left.add_edge(a, c);
          both.add_edge(a, c);
        }
      }
    }
    auto rc = strongly_connected_condensation(right);
    auto lc = strongly_connected_condensation(left);
    auto jc = strongly_connected_condensation(both);

    GreensStructure gs;
    gs.r_class   = rc.component_of;
    gs.l_class   = lc.component_of;
    gs.j_class   = jc.component_of;
    gs.r_members = members_of(gs.r_class, rc.size());
    gs.l_members = members_of(gs.l_class, lc.size());
    gs.j_members = members_of(gs.j_class, jc.size());
    gs.j_order   = jc.dag;

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> h_ids;
    gs.h_class.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      auto key = std::make_pair(gs.r_class[a], gs.l_class[a]);
      auto it  = h_ids.emplace(key, h_ids.size()).first;
      gs.h_class[a] = it->second;
    }
    gs.h_members = members_of(gs.h_class, h_ids.size());

    gs.is_idempotent.assign(n, false);
    gs.regular_j.assign(jc.size(), false);
    for (std::size_t a = 0; a < n; ++a) {
      if (s.product(a, a) == a) {
        gs.is_idempotent[a] = true;
        gs.idempotents.push_back(a);
        gs.regular_j[gs.j_class[a]] = true;
      }
    }
    return gs;
  }

  VertexSet idempotents(FiniteSemigroup const& s) {
    VertexSet out;
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (s.product(a, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group H-classes and principal factors
  ////////////////////////////////////////////////////////////////////////

  HClassGroup group_h_class_as_permgroup(FiniteSemigroup const& s,
                                         GreensStructure const& gs,
                                         std::size_t            h_class) {
    if (h_class >= gs.h_members.size()) {
      throw InputError("no H-class with id " + std::to_string(h_class));
    }
    HClassGroup out;
    out.elements = gs.h_members[h_class];
    auto const& H = out.elements;
    if (std::none_of(H.begin(), H.end(), [&gs](std::size_t a) {
          return gs.is_idempotent[a];
        })) {
      throw InputError("H-class " + std::to_string(h_class)
                       + " contains no idempotent, so it is not a group");
    }
    std::size_t const m   = H.size();
    auto              pos = [&H](std::size_t a) {
      return static_cast<std::size_t>(
          std::lower_bound(H.begin(), H.end(), a) - H.begin());
    };

    std::vector<Permutation> perms;
    for (std::size_t p = 0; p < m; ++p) {
      std::vector<point_type> images(m);
      for (std::size_t q = 0; q < m; ++q) {
        images[q] = static_cast<point_type>(pos(s.product(H[q], H[p])));
      }
      perms.emplace_back(std::move(images));
    }

    auto local = [&](std::size_t p, std::size_t q) {
      return pos(s.product(H[p], H[q]));
    };
    std::vector<std::size_t> all(m);
    for (std::size_t p = 0; p < m; ++p) {
      all[p] = p;
    }
    std::vector<Permutation> gens;
    for (auto p : greedy_generators(m, local, all)) {
      gens.push_back(perms[p]);
    }

    std::vector<Permutation> sorted = perms;
    std::sort(sorted.begin(), sorted.end());
    out.group = PermGroup::from_elements(m, std::move(gens), sorted);
    out.to_group.resize(m);
    out.from_group.resize(m);
    for (std::size_t p = 0; p < m; ++p) {
      auto g           = *out.group.index_of(perms[p]);
      out.to_group[p]  = g;
      out.from_group[g] = H[p];
    }
    return out;
  }

  PrincipalFactorIso principal_factor_iso(FiniteSemigroup const& s,
                                          GreensStructure const& gs,
                                          std::size_t            j_class) {
    if (j_class >= gs.nr_j_classes()) {
      throw InputError("no J-class with id " + std::to_string(j_class));
    }
    if (!gs.regular_j[j_class]) {
      throw InputError("J-class " + std::to_string(j_class)
                       + " is not regular; its principal factor is a null "
                         "semigroup, handled by removing the whole class");
    }
    auto const& J = gs.j_members[j_class];
    std::size_t e = *std::find_if(
        J.begin(), J.end(), [&gs](std::size_t a) { return gs.is_idempotent[a]; });
    auto const  He = gs.h_class[e], Le = gs.l_class[e], Re = gs.r_class[e];
    auto        hg = group_h_class_as_permgroup(s, gs, He);

    std::vector<std::size_t> r_ids, l_ids;
    for (auto a : J) {
      r_ids.push_back(gs.r_class[a]);
      l_ids.push_back(gs.l_class[a]);
    }
    for (auto* v : {&r_ids, &l_ids}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }

    std::vector<std::size_t> row_reps, col_reps;
    for (auto r : r_ids) {
      auto const& R = gs.r_members[r];
      row_reps.push_back(*std::find_if(
          R.begin(), R.end(), [&](std::size_t a) { return gs.l_class[a] == Le; }));
    }
    for (auto l : l_ids) {
      auto const& L = gs.l_members[l];
      col_reps.push_back(*std::find_if(
          L.begin(), L.end(), [&](std::size_t a) { return gs.r_class[a] == Re; }));
    }

    auto const& H       = hg.elements;
    auto        h_index = [&](std::size_t a) {
      auto p = static_cast<std::size_t>(
          std::lower_bound(H.begin(), H.end(), a) - H.begin());
      return hg.to_group[p];
    };

    ReesZeroMatrixSemigroup::Matrix matrix(l_ids.size());
    for (std::size_t l = 0; l < l_ids.size(); ++l) {
      for (std::size_t i = 0; i < r_ids.size(); ++i) {
        auto p = s.product(col_reps[l], row_reps[i]);
        if (gs.j_class[p] == j_class) {
          matrix[l].emplace_back(h_index(p));
        } else {
          matrix[l].emplace_back();
        }
      }
    }

    PrincipalFactorIso iso{j_class,
                           ReesZeroMatrixSemigroup(
                               r_ids.size(), l_ids.size(), hg.group, matrix),
                           r_ids,
                           l_ids,
                           {},
                           {}};
    iso.backward_map.assign(iso.target.size(), 0);
    for (std::size_t i = 0; i < r_ids.size(); ++i) {
      for (std::size_t g = 0; g < H.size(); ++g) {
        auto rh = s.product(row_reps[i], hg.from_group[g]);
        for (std::size_t l = 0; l < l_ids.size(); ++l) {
          auto x  = s.product(rh, col_reps[l]);
          auto id = iso.target.element(i, g, l);
          iso.backward_map[id] = x;
          iso.forward_map.emplace(x, id);
        }
      }
    }
    if (iso.forward_map.size() != J.size()) {
      throw std::logic_error("principal factor map is not a bijection");
    }
    return iso;
  }

  VertexSet ideal_below_generators(FiniteSemigroup const& s,
                                   GreensStructure const& gs,
                                   std::size_t            j_class) {
    auto              below = gs.below(j_class);
    std::vector<bool> is_below(gs.nr_j_classes(), false);
    for (auto c : below) {
      is_below[c] = true;
    }
    auto mul = [&s](std::size_t a, std::size_t b) { return s.product(a, b); };
    IncrementalClosure<decltype(mul)> c(s.size(), mul);
    for (auto cls : gs.topological_order()) {
      if (!is_below[cls]) {
        continue;
      }
      for (auto a : gs.j_members[cls]) {
        c.add(a);
      }
    }
    auto gens = c.generators();
    std::sort(gens.begin(), gens.end());
    return gens;
  }

  VertexSet x_prime(FiniteSemigroup const& s,
                    GreensStructure const& gs,
                    std::size_t            j_class) {
    auto      above = gs.above(j_class);
    VertexSet out;
    for (auto g : s.generator_elements()) {
      if (std::binary_search(above.begin(), above.end(), gs.j_class[g])) {
        out.push_back(g);
      }
    }
    return out;
  }

}  // namespace maxsub
