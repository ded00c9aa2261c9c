#include "maxsub/rees_matrix.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "maxsub/closure.hpp"

namespace maxsub {

  ////////////////////////////////////////////////////////////////////////
  // ReesZeroMatrixSemigroup
  ////////////////////////////////////////////////////////////////////////

  ReesZeroMatrixSemigroup::ReesZeroMatrixSemigroup(std::size_t i_size,
                                                   std::size_t lambda_size,
                                                   PermGroup   group,
                                                   Matrix      matrix)
      : _i_size(i_size),
        _lambda_size(lambda_size),
        _group(std::move(group)),
        _table(_group),
        _matrix(std::move(matrix)) {
    if (_i_size == 0 || _lambda_size == 0) {
      throw InputError("index sets I and Lambda must be non-empty");
    }
    if (_matrix.size() != _lambda_size) {
      throw InputError("structure matrix has " + std::to_string(_matrix.size())
                       + " rows, expected |Lambda| = "
                       + std::to_string(_lambda_size));
    }
    for (std::size_t l = 0; l < _lambda_size; ++l) {
      if (_matrix[l].size() != _i_size) {
        throw InputError("row " + std::to_string(l + 1) + " has "
                         + std::to_string(_matrix[l].size())
                         + " entries, expected |I| = "
                         + std::to_string(_i_size));
      }
      for (auto const& e : _matrix[l]) {
        if (e && *e >= _group.order()) {
          throw InputError("matrix entry is not a group element index");
        }
      }
    }
  }

  ReesZeroMatrixSemigroup ReesZeroMatrixSemigroup::from_permutations(
      std::size_t i_size,
      std::size_t lambda_size,
      PermGroup   group,
      std::vector<std::vector<std::optional<Permutation>>> const& matrix) {
    Matrix m;
    for (std::size_t l = 0; l < matrix.size(); ++l) {
      m.emplace_back();
      for (auto const& e : matrix[l]) {
        if (!e) {
          m.back().emplace_back();
          continue;
        }
        auto idx = group.index_of(*e);
        if (!idx) {
          throw InputError("matrix entry " + to_cycle_string(*e) + " in row "
                           + std::to_string(l + 1)
                           + " is not an element of the group");
        }
        m.back().emplace_back(*idx);
      }
    }
    return ReesZeroMatrixSemigroup(
        i_size, lambda_size, std::move(group), std::move(m));
  }

  ReesZeroMatrixSemigroup::Triple
  ReesZeroMatrixSemigroup::triple(std::size_t id) const {
    std::size_t x      = id - 1;
    std::size_t lambda = x % _lambda_size;
    x /= _lambda_size;
    return {x / _group.order(), x % _group.order(), lambda};
  }

  std::size_t ReesZeroMatrixSemigroup::multiply(std::size_t a,
                                                std::size_t b) const {
    if (a == 0 || b == 0) {
      return 0;
    }
    auto x = triple(a);
    auto y = triple(b);
    auto p = _matrix[x.lambda][y.i];
    if (!p) {
      return 0;
    }
    return element(
        x.i, _table.product(_table.product(x.g, *p), y.g), y.lambda);
  }

  bool ReesZeroMatrixSemigroup::is_regular() const {
    std::vector<bool> col(_i_size, false);
    for (auto const& row : _matrix) {
      bool any = false;
      for (std::size_t i = 0; i < _i_size; ++i) {
        if (row[i]) {
          any    = true;
          col[i] = true;
        }
      }
      if (!any) {
        return false;
      }
    }
    return std::all_of(col.begin(), col.end(), [](bool b) { return b; });
  }

  bool ReesZeroMatrixSemigroup::has_zero_entry() const {
    for (auto const& row : _matrix) {
      for (auto const& e : row) {
        if (!e) {
          return true;
        }
      }
    }
    return false;
  }

  std::string ReesZeroMatrixSemigroup::to_string(std::size_t id) const {
    if (id == 0) {
      return "0";
    }
    auto t = triple(id);
    return "(" + std::to_string(t.i + 1) + ","
           + to_cycle_string(_group.elements()[t.g]) + ",-"
           + std::to_string(t.lambda + 1) + ")";
  }

  Graph graham_houghton(ReesZeroMatrixSemigroup const& r) {
    Graph g(r.i_size() + r.lambda_size());
    for (std::size_t l = 0; l < r.lambda_size(); ++l) {
      for (std::size_t i = 0; i < r.i_size(); ++i) {
        if (r.entry(l, i)) {
          g.add_edge(i, r.i_size() + l);
        }
      }
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normalization
  ////////////////////////////////////////////////////////////////////////

  std::size_t NormalizationData::to_normalized(std::size_t id) const {
    if (id == 0) {
      return 0;
    }
    auto const& t = normalized.table();
    auto        x = normalized.triple(id);
    return normalized.element(
        x.i, t.product(t.product(u[x.i], x.g), v[x.lambda]), x.lambda);
  }

  std::size_t NormalizationData::from_normalized(std::size_t id) const {
    if (id == 0) {
      return 0;
    }
    auto const& t = normalized.table();
    auto        x = normalized.triple(id);
    return normalized.element(
        x.i,
        t.product(t.product(t.inverse(u[x.i]), x.g), t.inverse(v[x.lambda])),
        x.lambda);
  }

  NormalizationData normalize(ReesZeroMatrixSemigroup const& r,
                              std::optional<std::uint64_t>   shuffle_seed,
                              Limits const&                  limits) {
    if (!r.is_regular()) {
      throw InputError("cannot normalize a Rees 0-matrix semigroup that is not "
                       "regular (some row or column of P is zero)");
    }
    std::size_t const nI = r.i_size(), nL = r.lambda_size();
    auto const&       t  = r.table();

    std::vector<std::size_t> i_order(nI), l_order(nL);
    std::iota(i_order.begin(), i_order.end(), 0);
    std::iota(l_order.begin(), l_order.end(), 0);
    if (shuffle_seed) {
      std::mt19937_64 rng(*shuffle_seed);
      std::shuffle(i_order.begin(), i_order.end(), rng);
      std::shuffle(l_order.begin(), l_order.end(), rng);
    }

    std::size_t const        none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> u(nI, none), v(nL, none);
    std::vector<std::size_t> comp_i(nI, none), comp_l(nL, none);
    std::vector<std::pair<std::size_t, std::size_t>> anchors;

    for (auto i0 : i_order) {
      if (u[i0] != none) {
        continue;
      }
      std::size_t root = none;
      for (auto l : l_order) {
        if (r.entry(l, i0)) {
          root = l;
          break;
        }
      }
      std::size_t const k = anchors.size();
      anchors.emplace_back(i0, root);
      v[root]      = t.identity();
      comp_l[root] = k;
      // (is_lambda, index)
      std::deque<std::pair<bool, std::size_t>> queue{{true, root}};
      while (!queue.empty()) {
        auto [is_lambda, x] = queue.front();
        queue.pop_front();
        if (is_lambda) {
          for (auto i : i_order) {
            auto p = r.entry(x, i);
            if (p && u[i] == none) {
              u[i]      = t.product(t.inverse(v[x]), *p);
              comp_i[i] = k;
              queue.emplace_back(false, i);
            }
          }
        } else {
          for (auto l : l_order) {
            auto p = r.entry(l, x);
            if (p && v[l] == none) {
              v[l]      = t.product(*p, t.inverse(u[x]));
              comp_l[l] = k;
              queue.emplace_back(true, l);
            }
          }
        }
      }
    }

    ReesZeroMatrixSemigroup::Matrix m(
        nL, std::vector<ReesZeroMatrixSemigroup::Entry>(nI));
    for (std::size_t l = 0; l < nL; ++l) {
      for (std::size_t i = 0; i < nI; ++i) {
        if (auto p = r.entry(l, i)) {
          m[l][i] = t.product(t.product(t.inverse(v[l]), *p), t.inverse(u[i]));
        }
      }
    }

    std::vector<NormalizationComponent> comps;
    auto const&                         elts = r.group().elements();
    for (std::size_t k = 0; k < anchors.size(); ++k) {
      NormalizationComponent c;
      c.anchor_i      = anchors[k].first;
      c.anchor_lambda = anchors[k].second;
      for (std::size_t i = 0; i < nI; ++i) {
        if (comp_i[i] == k) {
          c.i_indices.push_back(i);
        }
      }
      for (std::size_t l = 0; l < nL; ++l) {
        if (comp_l[l] == k) {
          c.lambda_indices.push_back(l);
        }
      }
      std::vector<std::size_t> entries;
      for (auto l : c.lambda_indices) {
        for (auto i : c.i_indices) {
          if (m[l][i] && *m[l][i] != t.identity()) {
            entries.push_back(*m[l][i]);
          }
        }
      }
      std::sort(entries.begin(), entries.end());
      entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
      std::vector<Permutation> gens;
      for (auto e : entries) {
        gens.push_back(elts[e]);
      }
      c.group = generate_group(r.group().degree(), gens, limits);
      comps.push_back(std::move(c));
    }

    return NormalizationData{
        ReesZeroMatrixSemigroup(nI, nL, r.group(), std::move(m)),
        std::move(u),
        std::move(v),
        std::move(comps)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Types (R1)-(R5)
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(RzmsType t) {
    switch (t) {
      case RzmsType::R1:
        return "R1";
      case RzmsType::R2:
        return "R2";
      case RzmsType::R3:
        return "R3";
      case RzmsType::R4:
        return "R4";
      case RzmsType::R5:
        return "R5";
      case RzmsType::R6:
        return "R6";
    }
    return "?";
  }

  namespace {
    auto multiplier(ReesZeroMatrixSemigroup const& r) {
      return [&r](std::size_t a, std::size_t b) { return r.multiply(a, b); };
    }

    // 0 together with every (i, g, λ) accepted by keep(i, λ).
    template <typename Pred>
    std::vector<std::size_t> members_where(ReesZeroMatrixSemigroup const& r,
                                           Pred keep) {
      std::vector<std::size_t> out{0};
      for (std::size_t id = 1; id < r.size(); ++id) {
        auto x = r.triple(id);
        if (keep(x.i, x.lambda)) {
          out.push_back(id);
        }
      }
      return out;
    }

    RzmsMaxSubsemigroup make(ReesZeroMatrixSemigroup const& r,
                             RzmsType                       type,
                             std::vector<std::size_t>       members) {
      RzmsMaxSubsemigroup m{};
      m.type       = type;
      m.generators = greedy_generators(r.size(), multiplier(r), members);
      m.members    = std::move(members);
      return m;
    }
  }  // namespace

  std::vector<RzmsMaxSubsemigroup> max_r1_r2(ReesZeroMatrixSemigroup const& r) {
    std::vector<RzmsMaxSubsemigroup> out;
    if (r.size() == 2) {
      out.push_back(make(r, RzmsType::R1, {0}));
    }
    if (!r.has_zero_entry()) {
      std::vector<std::size_t> members(r.size() - 1);
      std::iota(members.begin(), members.end(), 1);
      out.push_back(make(r, RzmsType::R2, std::move(members)));
    }
    return out;
  }

  std::vector<RzmsMaxSubsemigroup> max_r3_r4(ReesZeroMatrixSemigroup const& r) {
    std::vector<RzmsMaxSubsemigroup> out;
    std::size_t const                nI = r.i_size(), nL = r.lambda_size();
    if (nL > 1) {
      for (std::size_t lambda = 0; lambda < nL; ++lambda) {
        bool ok = true;
        for (std::size_t i = 0; i < nI && ok; ++i) {
          bool covered = false;
          for (std::size_t l = 0; l < nL && !covered; ++l) {
            covered = l != lambda && r.entry(l, i).has_value();
          }
          ok = covered;
        }
        if (ok) {
          auto m = make(r,
                        RzmsType::R3,
                        members_where(r, [lambda](std::size_t, std::size_t l) {
                          return l != lambda;
                        }));
          m.removed = lambda;
          out.push_back(std::move(m));
        }
      }
    }
    if (nI > 1) {
      for (std::size_t i0 = 0; i0 < nI; ++i0) {
        bool ok = true;
        for (std::size_t l = 0; l < nL && ok; ++l) {
          bool covered = false;
          for (std::size_t i = 0; i < nI && !covered; ++i) {
            covered = i != i0 && r.entry(l, i).has_value();
          }
          ok = covered;
        }
        if (ok) {
          auto m = make(r,
                        RzmsType::R4,
                        members_where(r, [i0](std::size_t i, std::size_t) {
                          return i != i0;
                        }));
          m.removed = i0;
          out.push_back(std::move(m));
        }
      }
    }
    return out;
  }

  std::vector<RzmsMaxSubsemigroup> max_r5(ReesZeroMatrixSemigroup const& r,
                                          Limits const& limits) {
    std::vector<RzmsMaxSubsemigroup> out;
    std::size_t const                nI = r.i_size(), nL = r.lambda_size();
    for (auto const& set :
         maximal_independent_sets(graham_houghton(r), limits.clique_vertices)) {
      std::vector<std::size_t> xs, ys;
      for (auto v : set) {
        if (v < nI) {
          xs.push_back(v);
        } else {
          ys.push_back(v - nI);
        }
      }
      if (xs.empty() || ys.empty() || xs.size() == nI || ys.size() == nL) {
        continue;
      }
      std::vector<bool> in_x(nI, false), in_y(nL, false);
      for (auto i : xs) {
        in_x[i] = true;
      }
      for (auto l : ys) {
        in_y[l] = true;
      }
      auto m = make(r,
                    RzmsType::R5,
                    members_where(r, [&](std::size_t i, std::size_t l) {
                      return in_x[i] || in_y[l];
                    }));
      m.x_indices = std::move(xs);
      m.y_indices = std::move(ys);
      out.push_back(std::move(m));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Type (R6)
  ////////////////////////////////////////////////////////////////////////

  std::vector<RzmsMaxSubsemigroup>
  max_r6(ReesZeroMatrixSemigroup const&          r,
         std::optional<std::vector<std::size_t>> required,
         R6Options const&                        options) {
    auto norm = normalize(r, options.shuffle_seed, options.limits);
    auto const&       rn    = norm.normalized;
    auto const&       G     = r.group();
    auto const&       table = r.table();
    auto const&       comps = norm.components;
    std::size_t const n     = comps.size();

    std::vector<std::size_t> order(G.order());
    std::iota(order.begin(), order.end(), 0);
    if (options.shuffle_seed) {
      std::mt19937_64 rng(*options.shuffle_seed + 1);
      std::shuffle(order.begin(), order.end(), rng);
    }

    // E(R') and 0, as ids of the normalized semigroup.
    std::vector<std::size_t> base{0};
    for (std::size_t l = 0; l < rn.lambda_size(); ++l) {
      for (std::size_t i = 0; i < rn.i_size(); ++i) {
        if (auto p = rn.entry(l, i)) {
          base.push_back(rn.element(i, table.inverse(*p), l));
        }
      }
    }

    if (required) {
      std::sort(required->begin(), required->end());
    }

    std::vector<RzmsMaxSubsemigroup> out;
    auto classes = maximal_subgroup_classes(G, options.limits);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      auto const& V = classes[c].representative;
      auto const& N = classes[c].normalizer;
      auto        n_reps = right_coset_reps(G, N, order);
      auto        v_reps = right_coset_reps(G, V, order);

      std::vector<std::vector<Permutation>> T(n);
      for (auto const& t : n_reps) {
        if (is_subgroup(comps[0].group, conjugate_subgroup(V, t))) {
          T[0].push_back(t);
        }
      }
      for (std::size_t k = 1; k < n; ++k) {
        for (auto const& g : v_reps) {
          if (is_subgroup(comps[k].group, conjugate_subgroup(V, g))) {
            T[k].push_back(g);
          }
        }
      }
      if (std::any_of(
              T.begin(), T.end(), [](auto const& Tk) { return Tk.empty(); })) {
        continue;
      }

      auto const i1 = comps[0].anchor_i, l1 = comps[0].anchor_lambda;
      std::vector<std::size_t> choice(n, 0);
      while (true) {
        std::vector<Permutation> tuple;
        for (std::size_t k = 0; k < n; ++k) {
          tuple.push_back(T[k][choice[k]]);
        }
        Permutation const t1i  = tuple[0].inverse();
        std::vector<std::size_t> gens = base;
        auto const               conj = conjugate_subgroup(V, tuple[0]);
        for (auto const& a : conj.generators()) {
          gens.push_back(rn.element(i1, *G.index_of(a), l1));
        }
        for (std::size_t k = 1; k < n; ++k) {
          gens.push_back(rn.element(
              i1, *G.index_of(t1i * tuple[k]), comps[k].anchor_lambda));
          gens.push_back(rn.element(comps[k].anchor_i,
                                    *G.index_of(tuple[k].inverse() * tuple[0]),
                                    l1));
        }
        for (auto& x : gens) {
          x = norm.from_normalized(x);
        }
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

        auto members = closure_of(r.size(), multiplier(r), gens);
        if (!required
            || std::includes(members.begin(),
                             members.end(),
                             required->begin(),
                             required->end())) {
          RzmsMaxSubsemigroup m{};
          m.type           = RzmsType::R6;
          m.subgroup_class = c;
          m.coset_tuple    = std::move(tuple);
          m.generators     = std::move(gens);
          m.members        = std::move(members);
          out.push_back(std::move(m));
        }

        std::size_t k = 0;
        while (k < n && ++choice[k] == T[k].size()) {
          choice[k] = 0;
          ++k;
        }
        if (k == n) {
          break;
        }
      }
    }
    return out;
  }

  std::vector<RzmsMaxSubsemigroup>
  max_subsemigroups_rzms(ReesZeroMatrixSemigroup const& r,
                         R6Options const&               options) {
    if (!r.is_regular()) {
      throw InputError("the Rees 0-matrix semigroup is not regular");
    }
    std::vector<RzmsMaxSubsemigroup> out = max_r1_r2(r);
    for (auto& m : max_r3_r4(r)) {
      out.push_back(std::move(m));
    }
    for (auto& m : max_r5(r, options.limits)) {
      out.push_back(std::move(m));
    }
    for (auto& m : max_r6(r, std::nullopt, options)) {
      out.push_back(std::move(m));
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      if (a.type != b.type) {
        return a.type < b.type;
      }
      return a.members < b.members;
    });
    std::vector<RzmsMaxSubsemigroup>      unique;
    std::vector<std::vector<std::size_t>> seen;
    for (auto& m : out) {
      if (std::find(seen.begin(), seen.end(), m.members) == seen.end()) {
        seen.push_back(m.members);
        unique.push_back(std::move(m));
      }
    }
    return unique;
  }

}  // namespace maxsub
