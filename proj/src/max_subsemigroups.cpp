#include "maxsub/max_subsemigroups.hpp"

#include <algorithm>
#include <array>

#include "maxsub/closure.hpp"

namespace maxsub {

  namespace {
    std::array<std::pair<MaxType, char const*>, 11> const type_names{{
        {MaxType::MaxTrivial, "MAX-TRIVIAL"},
        {MaxType::MaxR3, "MAX-R3"},
        {MaxType::MaxR4, "MAX-R4"},
        {MaxType::MaxR5, "MAX-R5"},
        {MaxType::MaxR6, "MAX-R6"},
        {MaxType::S1, "S1"},
        {MaxType::S2, "S2"},
        {MaxType::S3, "S3"},
        {MaxType::S4, "S4"},
        {MaxType::S5, "S5"},
        {MaxType::S6, "S6"},
    }};
  }  // namespace

  std::string to_string(MaxType t) {
    for (auto const& [type, name] : type_names) {
      if (type == t) {
        return name;
      }
    }
    return "?";
  }

  std::optional<MaxType> max_type_from_string(std::string const& s) {
    for (auto const& [type, name] : type_names) {
      if (s == name) {
        return type;
      }
    }
    return std::nullopt;
  }

  namespace {

    std::size_t index_in(std::vector<std::size_t> const& sorted,
                         std::size_t                     x) {
      return static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
    }

    VertexSet outside_j(GreensStructure const& gs, std::size_t j_class) {
      VertexSet out;
      for (std::size_t a = 0; a < gs.j_class.size(); ++a) {
        if (gs.j_class[a] != j_class) {
          out.push_back(a);
        }
      }
      return out;
    }

    // (X \ J) together with generators of the ideal strictly below J.
    VertexSet base_generators(FiniteSemigroup const& s,
                              GreensStructure const& gs,
                              std::size_t            j_class) {
      VertexSet out;
      for (auto x : s.generator_elements()) {
        if (gs.j_class[x] != j_class) {
          out.push_back(x);
        }
      }
      for (auto x : ideal_below_generators(s, gs, j_class)) {
        out.push_back(x);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    // Checks the generators against the members; substitutes the members
    // if they disagree.
    void settle(FiniteSemigroup const& s, MaximalSubsemigroup& m) {
      std::sort(m.generators.begin(), m.generators.end());
      m.generators.erase(std::unique(m.generators.begin(), m.generators.end()),
                         m.generators.end());
      if (closure_in(s, m.generators) != m.members) {
        m.generators          = m.members;
        m.fallback_generators = true;
      }
    }

    MaximalSubsemigroup whole_class_removed(FiniteSemigroup const& s,
                                            GreensStructure const& gs,
                                            std::size_t            j_class,
                                            MaxType                type) {
      MaximalSubsemigroup m{};
      m.type       = type;
      m.j_class    = j_class;
      m.members    = outside_j(gs, j_class);
      m.generators = base_generators(s, gs, j_class);
      settle(s, m);
      return m;
    }

    MaximalSubsemigroup lift(FiniteSemigroup const&    s,
                             GreensStructure const&    gs,
                             PrincipalFactorIso const& pfi,
                             RzmsMaxSubsemigroup       r,
                             MaxType                   type,
                             VertexSet const&          base) {
      MaximalSubsemigroup m{};
      m.type       = type;
      m.j_class    = pfi.j_class;
      m.members    = outside_j(gs, pfi.j_class);
      m.generators = base;
      for (auto id : r.members) {
        if (id != 0) {
          m.members.push_back(pfi.backward(id));
        }
      }
      for (auto id : r.generators) {
        if (id != 0) {
          m.generators.push_back(pfi.backward(id));
        }
      }
      std::sort(m.members.begin(), m.members.end());
      m.lifted = std::move(r);
      settle(s, m);
      return m;
    }

    // First element of L ∩ R (the two classes must lie in one J-class).
    std::size_t element_in(GreensStructure const& gs,
                           std::size_t            l_class,
                           std::size_t            r_class) {
      for (auto a : gs.l_members[l_class]) {
        if (gs.r_class[a] == r_class) {
          return a;
        }
      }
      throw std::logic_error("L- and R-class do not intersect");
    }

    VertexSet group_generators(FiniteSemigroup const& s,
                               GreensStructure const& gs,
                               std::size_t            e) {
      auto mul = [&s](std::size_t a, std::size_t b) { return s.product(a, b); };
      return greedy_generators(s.size(), mul, gs.h_members[gs.h_class[e]]);
    }

    // Sources of the subdigraph of d.dag induced on the flagged components.
    std::vector<std::size_t> induced_sources(CondensedDigraph const& d,
                                             std::vector<bool> const& in) {
      std::vector<std::size_t> out;
      for (std::size_t c = 0; c < d.size(); ++c) {
        if (!in[c]) {
          continue;
        }
        auto const& preds = d.dag.in_neighbours(c);
        if (std::none_of(preds.begin(), preds.end(), [&in](std::size_t p) {
              return in[p];
            })) {
          out.push_back(c);
        }
      }
      return out;
    }

    std::vector<bool> negate(std::vector<bool> v) {
      v.flip();
      return v;
    }

    // Helper bundling the per-class lookups shared by S3-S5.
    struct ClassView {
      GreensStructure const& gs;
      JClassGraphs const&    g;

      std::size_t l_comp(std::size_t a) const {
        return g.gamma_l.component_of[index_in(g.l_classes, gs.l_class[a])];
      }
      std::size_t r_comp(std::size_t a) const {
        return g.gamma_r.component_of[index_in(g.r_classes, gs.r_class[a])];
      }
      // Some L-class of Γ_L component c.
      std::size_t l_class_of(std::size_t c) const {
        return g.l_classes[g.gamma_l.components[c].front()];
      }
      std::size_t r_class_of(std::size_t c) const {
        return g.r_classes[g.gamma_r.components[c].front()];
      }
      // First idempotent of J whose L-class lies in a flagged component.
      std::size_t idempotent_l(std::vector<bool> const& in_a) const {
        for (auto a : gs.j_members[g.j_class]) {
          if (gs.is_idempotent[a] && in_a[l_comp(a)]) {
            return a;
          }
        }
        throw std::logic_error("no idempotent in the chosen L-classes");
      }
      std::size_t idempotent_r(std::vector<bool> const& in_b) const {
        for (auto a : gs.j_members[g.j_class]) {
          if (gs.is_idempotent[a] && in_b[r_comp(a)]) {
            return a;
          }
        }
        throw std::logic_error("no idempotent in the chosen R-classes");
      }
      std::vector<std::size_t> l_class_ids(std::vector<bool> const& in) const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < in.size(); ++c) {
          if (in[c]) {
            for (auto v : g.gamma_l.components[c]) {
              out.push_back(g.l_classes[v]);
            }
          }
        }
        std::sort(out.begin(), out.end());
        return out;
      }
      std::vector<std::size_t> r_class_ids(std::vector<bool> const& in) const {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < in.size(); ++c) {
          if (in[c]) {
            for (auto v : g.gamma_r.components[c]) {
              out.push_back(g.r_classes[v]);
            }
          }
        }
        std::sort(out.begin(), out.end());
        return out;
      }
      // (S \ J) plus the elements of J in a kept L- or R-class.
      VertexSet members(std::vector<bool> const& in_a,
                        std::vector<bool> const& in_b) const {
        VertexSet out;
        for (std::size_t a = 0; a < gs.j_class.size(); ++a) {
          if (gs.j_class[a] != g.j_class
              || (!in_a.empty() && in_a[l_comp(a)])
              || (!in_b.empty() && in_b[r_comp(a)])) {
            out.push_back(a);
          }
        }
        return out;
      }
    };

    void require_regular_non_maximal(GreensStructure const& gs,
                                     std::size_t            j_class) {
      if (!gs.regular_j[j_class]) {
        throw InputError("J-class " + std::to_string(j_class)
                         + " is not regular");
      }
      if (gs.is_maximal(j_class)) {
        throw InputError("J-class " + std::to_string(j_class)
                         + " is maximal; use the principal-factor branch");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Graphs of a J-class
  ////////////////////////////////////////////////////////////////////////

  VertexSet xprime_closure_in_j(FiniteSemigroup const& s,
                                GreensStructure const& gs,
                                std::size_t            j_class,
                                VertexSet const&       xp) {
    std::vector<bool> up(gs.nr_j_classes(), false);
    up[j_class] = true;
    for (auto c : gs.above(j_class)) {
      up[c] = true;
    }
    std::vector<std::size_t> gen_index;
    for (auto x : xp) {
      auto const& gens = s.generators();
      gen_index.push_back(static_cast<std::size_t>(
          std::find(gens.begin(), gens.end(), x) - gens.begin()));
    }
    std::vector<bool>        seen(s.size(), false);
    std::vector<std::size_t> queue;
    for (auto x : xp) {
      if (!seen[x]) {
        seen[x] = true;
        queue.push_back(x);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto j : gen_index) {
        auto b = s.right(queue[i], j);
        if (!seen[b] && up[gs.j_class[b]]) {
          seen[b] = true;
          queue.push_back(b);
        }
      }
    }
    VertexSet out;
    for (auto a : queue) {
      if (gs.j_class[a] == j_class) {
        out.push_back(a);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  JClassGraphs build_jclass_graphs(FiniteSemigroup const& s,
                                   GreensStructure const& gs,
                                   std::size_t            j_class,
                                   VertexSet const&       xp) {
    if (!gs.regular_j[j_class]) {
      throw InputError("J-class " + std::to_string(j_class)
                       + " is not regular, so Γ_L, Γ_R, Δ and Θ are undefined");
    }
    JClassGraphs g;
    g.j_class     = j_class;
    auto const& J = gs.j_members[j_class];
    for (auto a : J) {
      g.l_classes.push_back(gs.l_class[a]);
      g.r_classes.push_back(gs.r_class[a]);
    }
    for (auto* v : {&g.l_classes, &g.r_classes}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    std::size_t const nl = g.l_classes.size(), nr = g.r_classes.size();

    std::vector<std::size_t> gen_index;
    for (auto x : xp) {
      auto const& gens = s.generators();
      gen_index.push_back(static_cast<std::size_t>(
          std::find(gens.begin(), gens.end(), x) - gens.begin()));
    }
    Digraph gl(nl), gr(nr);
    for (auto a : J) {
      auto la = index_in(g.l_classes, gs.l_class[a]);
      auto ra = index_in(g.r_classes, gs.r_class[a]);
      for (auto j : gen_index) {
        auto b = s.right(a, j);
        if (gs.j_class[b] == j_class && gs.l_class[b] != gs.l_class[a]) {
          gl.add_edge(la, index_in(g.l_classes, gs.l_class[b]));
        }
        auto c = s.left(j, a);
        if (gs.j_class[c] == j_class && gs.r_class[c] != gs.r_class[a]) {
          gr.add_edge(ra, index_in(g.r_classes, gs.r_class[c]));
        }
      }
    }
    g.gamma_l     = strongly_connected_condensation(gl);
    g.gamma_r     = strongly_connected_condensation(gr);
    g.xprime_in_j = xprime_closure_in_j(s, gs, j_class, xp);

    ClassView view{gs, g};
    g.delta = Graph(g.nr_l_components() + g.nr_r_components());
    g.theta = Graph(g.nr_l_components() + g.nr_r_components());
    auto const shift = g.nr_l_components();
    for (auto a : J) {
      if (gs.is_idempotent[a]) {
        g.delta.add_edge(view.l_comp(a), shift + view.r_comp(a));
      }
    }
    for (auto a : g.xprime_in_j) {
      g.theta.add_edge(view.l_comp(a), shift + view.r_comp(a));
      g.gamma_l.colour[view.l_comp(a)] = 1;
      g.gamma_r.colour[view.r_comp(a)] = 1;
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // Types (S1)-(S6)
  ////////////////////////////////////////////////////////////////////////

  std::optional<MaximalSubsemigroup> max_s1(FiniteSemigroup const& s,
                                            GreensStructure const& gs,
                                            std::size_t            j_class,
                                            VertexSet const&       xp) {
    if (gs.regular_j[j_class] || gs.is_maximal(j_class)) {
      throw InputError("type S1 applies only to non-regular, non-maximal "
                       "J-classes");
    }
    if (!xprime_closure_in_j(s, gs, j_class, xp).empty()) {
      return std::nullopt;
    }
    return whole_class_removed(s, gs, j_class, MaxType::S1);
  }

  std::vector<MaximalSubsemigroup> max_s2(FiniteSemigroup const&    s,
                                          GreensStructure const&    gs,
                                          std::size_t               j_class,
                                          VertexSet const&          xp,
                                          PrincipalFactorIso const& pfi,
                                          MaxOptions const&         options) {
    require_regular_non_maximal(gs, j_class);
    // One idempotent from each L-class of J.
    std::vector<std::size_t> e_set;
    for (auto l : pfi.l_classes) {
      auto const& L = gs.l_members[l];
      e_set.push_back(*std::find_if(L.begin(), L.end(), [&gs](std::size_t a) {
        return gs.is_idempotent[a];
      }));
    }
    std::vector<std::size_t> required;
    for (auto e : e_set) {
      for (auto x : xp) {
        auto ex = s.product(e, x);
        if (gs.j_class[ex] == j_class) {
          required.push_back(pfi.forward(ex));
        }
      }
    }
    auto base = base_generators(s, gs, j_class);
    std::vector<MaximalSubsemigroup> out;
    for (auto& r : max_r6(pfi.target,
                          std::move(required),
                          R6Options{options.shuffle_seed, options.limits})) {
      out.push_back(lift(s, gs, pfi, std::move(r), MaxType::S2, base));
    }
    return out;
  }

  std::vector<MaximalSubsemigroup> max_s3(FiniteSemigroup const& s,
                                          GreensStructure const& gs,
                                          std::size_t            j_class,
                                          VertexSet const&       xp,
                                          JClassGraphs const&    graphs,
                                          Limits const&          limits) {
    require_regular_non_maximal(gs, j_class);
    (void) xp;
    ClassView         view{gs, graphs};
    std::size_t const nl = graphs.nr_l_components();
    std::size_t const nr = graphs.nr_r_components();

    Digraph closure(nl + nr);
    for (auto const& [u, v] : graphs.gamma_l.dag.edges()) {
      closure.add_edge(u, v);
    }
    for (auto const& [u, v] : graphs.gamma_r.dag.edges()) {
      closure.add_edge(nl + u, nl + v);
    }

    auto const base  = base_generators(s, gs, j_class);
    auto const theta = graphs.theta.edges();
    std::vector<MaximalSubsemigroup> out;
    for (auto const& set : maximal_independent_sets_closed(
             graphs.delta, closure, limits.clique_vertices)) {
      std::vector<bool> in_a(nl, false), in_b(nr, false);
      for (auto v : set) {
        if (v < nl) {
          in_a[v] = true;
        } else {
          in_b[v - nl] = true;
        }
      }
      bool const both_sides
          = std::find(in_a.begin(), in_a.end(), true) != in_a.end()
            && std::find(in_b.begin(), in_b.end(), true) != in_b.end();
      if (!both_sides) {
        continue;
      }
      auto in_set = [&](std::size_t v) {
        return v < nl ? in_a[v] : in_b[v - nl];
      };
      if (!std::all_of(theta.begin(), theta.end(), [&](auto const& e) {
            return in_set(e.first) || in_set(e.second);
          })) {
        continue;
      }

      MaximalSubsemigroup m{};
      m.type      = MaxType::S3;
      m.j_class   = j_class;
      m.a_classes = view.l_class_ids(in_a);
      m.b_classes = view.r_class_ids(in_b);
      m.members   = view.members(in_a, in_b);

      auto& gens = m.generators;
      gens       = base;
      // H-class with its L-class in A, and the elements reaching round it.
      auto x = view.idempotent_l(in_a);
      for (auto y : group_generators(s, gs, x)) {
        gens.push_back(y);
      }
      for (auto c : induced_sources(graphs.gamma_l, in_a)) {
        gens.push_back(element_in(gs, view.l_class_of(c), gs.r_class[x]));
      }
      for (auto c : induced_sources(graphs.gamma_r, negate(in_b))) {
        gens.push_back(element_in(gs, gs.l_class[x], view.r_class_of(c)));
      }
      // The same from an H-class with its R-class in B.
      auto xr = view.idempotent_r(in_b);
      for (auto y : group_generators(s, gs, xr)) {
        gens.push_back(y);
      }
      for (auto c : induced_sources(graphs.gamma_r, in_b)) {
        gens.push_back(element_in(gs, gs.l_class[xr], view.r_class_of(c)));
      }
      for (auto c : induced_sources(graphs.gamma_l, negate(in_a))) {
        gens.push_back(element_in(gs, view.l_class_of(c), gs.r_class[xr]));
      }
      // Sources of Γ_L inside A joined to some R-class of B.
      auto const some_b
          = view.r_class_of(static_cast<std::size_t>(
              std::find(in_b.begin(), in_b.end(), true) - in_b.begin()));
      for (auto c : sources(graphs.gamma_l)) {
        if (in_a[c]) {
          gens.push_back(element_in(gs, view.l_class_of(c), some_b));
        }
      }
      settle(s, m);
      out.push_back(std::move(m));
    }
    return out;
  }

  std::vector<MaximalSubsemigroup>
  max_s4_s5(FiniteSemigroup const&                  s,
            GreensStructure const&                  gs,
            std::size_t                             j_class,
            VertexSet const&                        xp,
            JClassGraphs const&                     graphs,
            std::vector<MaximalSubsemigroup> const& s3_results) {
    require_regular_non_maximal(gs, j_class);
    (void) xp;
    ClassView         view{gs, graphs};
    std::size_t const nl   = graphs.nr_l_components();
    std::size_t const nr   = graphs.nr_r_components();
    auto const        base = base_generators(s, gs, j_class);
    std::vector<MaximalSubsemigroup> out;

    for (auto u : sources(graphs.gamma_l)) {
      if (graphs.gamma_l.colour[u] != 0 || nl == 1) {
        continue;
      }
      std::vector<bool> in_a(nl, true);
      in_a[u]     = false;
      auto a_ids  = view.l_class_ids(in_a);
      if (std::any_of(s3_results.begin(), s3_results.end(), [&](auto const& m) {
            return m.a_classes == a_ids;
          })) {
        continue;
      }
      MaximalSubsemigroup m{};
      m.type      = MaxType::S4;
      m.j_class   = j_class;
      m.a_classes = std::move(a_ids);
      m.members   = view.members(in_a, {});
      m.generators = base;
      auto x       = view.idempotent_l(in_a);
      for (auto y : group_generators(s, gs, x)) {
        m.generators.push_back(y);
      }
      for (auto c : induced_sources(graphs.gamma_l, in_a)) {
        m.generators.push_back(
            element_in(gs, view.l_class_of(c), gs.r_class[x]));
      }
      for (auto c : sources(graphs.gamma_r)) {
        m.generators.push_back(
            element_in(gs, gs.l_class[x], view.r_class_of(c)));
      }
      settle(s, m);
      out.push_back(std::move(m));
    }

    for (auto u : sources(graphs.gamma_r)) {
      if (graphs.gamma_r.colour[u] != 0 || nr == 1) {
        continue;
      }
      std::vector<bool> in_b(nr, true);
      in_b[u]    = false;
      auto b_ids = view.r_class_ids(in_b);
      if (std::any_of(s3_results.begin(), s3_results.end(), [&](auto const& m) {
            return m.b_classes == b_ids;
          })) {
        continue;
      }
      MaximalSubsemigroup m{};
      m.type       = MaxType::S5;
      m.j_class    = j_class;
      m.b_classes  = std::move(b_ids);
      m.members    = view.members({}, in_b);
      m.generators = base;
      auto x       = view.idempotent_r(in_b);
      for (auto y : group_generators(s, gs, x)) {
        m.generators.push_back(y);
      }
      for (auto c : induced_sources(graphs.gamma_r, in_b)) {
        m.generators.push_back(
            element_in(gs, gs.l_class[x], view.r_class_of(c)));
      }
      for (auto c : sources(graphs.gamma_l)) {
        m.generators.push_back(
            element_in(gs, view.l_class_of(c), gs.r_class[x]));
      }
      settle(s, m);
      out.push_back(std::move(m));
    }
    return out;
  }

  std::optional<MaximalSubsemigroup> max_s6(FiniteSemigroup const& s,
                                            GreensStructure const& gs,
                                            std::size_t            j_class,
                                            VertexSet const&       xp,
                                            JClassGraphs const&    graphs,
                                            bool                   found_any) {
    require_regular_non_maximal(gs, j_class);
    (void) xp;
    if (found_any || graphs.theta.edge_count() != 0) {
      return std::nullopt;
    }
    return whole_class_removed(s, gs, j_class, MaxType::S6);
  }

  ////////////////////////////////////////////////////////////////////////
  // The whole search
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void from_j_class(FiniteSemigroup const&            s,
                      GreensStructure const&            gs,
                      std::size_t                       j,
                      MaxOptions const&                 options,
                      std::vector<MaximalSubsemigroup>& out) {
      auto const& J = gs.j_members[j];
      if (gs.is_maximal(j)) {
        if (J.size() == 1) {
          if (s.size() > 1) {
            out.push_back(whole_class_removed(s, gs, j, MaxType::MaxTrivial));
          }
          return;
        }
        auto       pfi  = principal_factor_iso(s, gs, j);
        auto const base = base_generators(s, gs, j);
        for (auto& r : max_r3_r4(pfi.target)) {
          auto type = r.type == RzmsType::R3 ? MaxType::MaxR3 : MaxType::MaxR4;
          out.push_back(lift(s, gs, pfi, std::move(r), type, base));
        }
        for (auto& r : max_r5(pfi.target, options.limits)) {
          out.push_back(lift(s, gs, pfi, std::move(r), MaxType::MaxR5, base));
        }
        for (auto& r : max_r6(pfi.target,
                              std::nullopt,
                              R6Options{options.shuffle_seed, options.limits})) {
          out.push_back(lift(s, gs, pfi, std::move(r), MaxType::MaxR6, base));
        }
        return;
      }

      auto xp = x_prime(s, gs, j);
      auto up = xprime_closure_in_j(s, gs, j, xp);
      if (!gs.regular_j[j]) {
        if (auto m = max_s1(s, gs, j, xp)) {
          out.push_back(std::move(*m));
        }
        return;
      }
      bool generator_outside = false;
      for (auto x : s.generator_elements()) {
        if (gs.j_class[x] == j && !std::binary_search(up.begin(), up.end(), x)) {
          generator_outside = true;
        }
      }
      if (!generator_outside) {
        return;
      }
      auto graphs = build_jclass_graphs(s, gs, j, xp);
      auto pfi    = principal_factor_iso(s, gs, j);
      auto s2     = max_s2(s, gs, j, xp, pfi, options);
      auto s3     = max_s3(s, gs, j, xp, graphs, options.limits);
      auto s45    = max_s4_s5(s, gs, j, xp, graphs, s3);
      bool found  = !s2.empty() || !s3.empty() || !s45.empty();
      for (auto* part : {&s2, &s3, &s45}) {
        for (auto& m : *part) {
          out.push_back(std::move(m));
        }
      }
      if (auto m = max_s6(s, gs, j, xp, graphs, found)) {
        out.push_back(std::move(*m));
      }
    }
  }  // namespace

  std::vector<MaximalSubsemigroup> max_subsemigroups(FiniteSemigroup const& s,
                                                     MaxOptions const& options) {
    return max_subsemigroups(s, greens_structure(s), options);
  }

  std::vector<MaximalSubsemigroup> max_subsemigroups(FiniteSemigroup const& s,
                                                     GreensStructure const& gs,
                                                     MaxOptions const& options) {
    std::vector<bool> meets_x(gs.nr_j_classes(), false);
    for (auto x : s.generator_elements()) {
      meets_x[gs.j_class[x]] = true;
    }
    std::vector<MaximalSubsemigroup> out;
    for (std::size_t j = 0; j < gs.nr_j_classes(); ++j) {
      if (!meets_x[j]) {
        continue;
      }
      try {
        from_j_class(s, gs, j, options, out);
      } catch (CapacityError const& e) {
        throw e.in_context("J-class " + std::to_string(j + 1) + ": ");
      }
    }
    if (!options.types.empty()) {
      std::erase_if(out, [&options](auto const& m) {
        return std::find(options.types.begin(), options.types.end(), m.type)
               == options.types.end();
      });
    }
    std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      if (a.j_class != b.j_class) {
        return a.j_class < b.j_class;
      }
      if (a.type != b.type) {
        return a.type < b.type;
      }
      return a.members < b.members;
    });
    std::vector<MaximalSubsemigroup> unique;
    std::vector<VertexSet const*>    seen;
    unique.reserve(out.size());
    for (auto& m : out) {
      if (std::none_of(seen.begin(), seen.end(), [&m](VertexSet const* v) {
            return *v == m.members;
          })) {
        unique.push_back(std::move(m));
        seen.push_back(&unique.back().members);
      }
    }
    return unique;
  }

}  // namespace maxsub
