#include <algorithm>
#include <map>
#include <set>

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "maxsub/max_subsemigroups.hpp"
#include "maxsub/oracle.hpp"

using namespace maxsub;

namespace {

  struct WClasses {
    FiniteSemigroup s = fixtures::w_semigroup();
    GreensStructure gs = greens_structure(s);
    std::size_t     j  = gs.j_class[0];
    VertexSet       xp = x_prime(s, gs, j);
    JClassGraphs    g  = build_jclass_graphs(s, gs, j, xp);

    // x1 .. x8 are elements 0 .. 7.
    std::size_t x(std::size_t k) const {
      return s.generator(k - 1);
    }
    std::size_t xy(std::size_t a, std::size_t b) const {
      return s.product(x(a), x(b));
    }
    // Vertex of Δ holding the L-class of a.
    std::size_t l_vertex(std::size_t a) const {
      auto it = std::find(g.l_classes.begin(), g.l_classes.end(), gs.l_class[a]);
      return g.gamma_l.component_of[static_cast<std::size_t>(it - g.l_classes.begin())];
    }
    std::size_t r_vertex(std::size_t a) const {
      auto it = std::find(g.r_classes.begin(), g.r_classes.end(), gs.r_class[a]);
      return g.nr_l_components()
             + g.gamma_r.component_of[static_cast<std::size_t>(it - g.r_classes.begin())];
    }
    std::size_t colour(std::size_t vertex) const {
      auto nl = g.nr_l_components();
      return static_cast<std::size_t>(vertex < nl ? g.gamma_l.colour[vertex]
                                                  : g.gamma_r.colour[vertex - nl]);
    }
  };

  std::vector<VertexSet> member_sets(std::vector<MaximalSubsemigroup> const& v) {
    std::vector<VertexSet> out;
    for (auto const& m : v) {
      out.push_back(m.members);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<MaximalSubsemigroup> of_type(std::vector<MaximalSubsemigroup> const& v,
                                           MaxType                                 t) {
    std::vector<MaximalSubsemigroup> out;
    std::copy_if(v.begin(), v.end(), std::back_inserter(out),
                 [&](auto const& m) { return m.type == t; });
    return out;
  }

  VertexSet complement(FiniteSemigroup const& s, VertexSet const& m) {
    VertexSet out;
    for (std::size_t a = 0; a < s.size(); ++a) {
      if (!std::binary_search(m.begin(), m.end(), a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  // Element sets as sets of transformations, so that differently numbered
  // enumerations of the same semigroup can be compared.
  std::set<std::set<Transformation>> as_transformations(FiniteSemigroup const& s,
                                                        std::vector<MaximalSubsemigroup> const& v) {
    std::set<std::set<Transformation>> out;
    for (auto const& m : v) {
      std::set<Transformation> t;
      for (auto a : m.members) {
        t.insert(s.transformations()[a]);
      }
      out.insert(t);
    }
    return out;
  }

  void require_valid(FiniteSemigroup const& s, std::vector<MaximalSubsemigroup> const& all) {
    auto gs = greens_structure(s);
    for (auto const& m : all) {
      INFO(to_string(m.type) << " from J-class " << m.j_class);
      auto verdict = verify_maximal(s, m.members);
      INFO(verdict.diagnostic);
      REQUIRE(verdict.ok);
      REQUIRE(closure_in(s, m.generators) == m.members);
      REQUIRE_FALSE(m.fallback_generators);
      for (auto a : complement(s, m.members)) {
        REQUIRE(gs.j_class[a] == m.j_class);
      }
    }
    auto sets = member_sets(all);
    REQUIRE(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
  }

}  // namespace

TEST_CASE("graphs of a regular J-class", "[max_subsemigroups]") {
  WClasses w;
  auto const& g = w.g;
  REQUIRE(w.xp == VertexSet{4, 5, 6, 7});
  REQUIRE(g.l_classes.size() == 4);
  REQUIRE(g.r_classes.size() == 6);

  // Γ_L: four singletons and four arcs; Γ_R: sizes 1, 1, 2, 2 and two arcs.
  REQUIRE(g.nr_l_components() == 4);
  REQUIRE(g.gamma_l.base.edge_count() == 4);
  REQUIRE(g.gamma_l.dag.edge_count() == 4);
  REQUIRE(g.nr_r_components() == 4);
  std::multiset<std::size_t> sizes;
  for (auto const& c : g.gamma_r.components) {
    sizes.insert(c.size());
  }
  REQUIRE(sizes == std::multiset<std::size_t>{1, 1, 2, 2});
  REQUIRE(g.gamma_r.dag.edge_count() == 2);
  REQUIRE(w.r_vertex(w.x(3)) == w.r_vertex(w.xy(7, 3)));
  REQUIRE(w.r_vertex(w.xy(6, 2)) == w.r_vertex(w.xy(8, 2)));

  REQUIRE(g.delta.edge_count() == 10);
  REQUIRE(maximal_independent_sets(g.delta).size() == 7);
  REQUIRE(g.theta.edge_count() == 2);

  // Closed under Γ_L ∪ Γ_R: four sets, two of them one-sided; the two-sided
  // ones are the S3 witnesses.
  auto    nl0 = g.nr_l_components();
  Digraph closure(g.delta.vertex_count());
  for (auto const& [u, v] : g.gamma_l.dag.edges()) {
    closure.add_edge(u, v);
  }
  for (auto const& [u, v] : g.gamma_r.dag.edges()) {
    closure.add_edge(nl0 + u, nl0 + v);
  }
  auto closed = maximal_independent_sets_closed(g.delta, closure);
  REQUIRE(closed.size() == 4);
  std::set<VertexSet> two_sided;
  for (auto const& k : closed) {
    if (k.front() < nl0 && k.back() >= nl0) {
      two_sided.insert(k);
    }
  }
  std::set<VertexSet> expected_sets;
  for (VertexSet k : {VertexSet{w.l_vertex(w.x(1)), w.l_vertex(w.xy(1, 6)), w.r_vertex(w.x(1))},
                      VertexSet{w.l_vertex(w.xy(1, 6)), w.r_vertex(w.x(1)), w.r_vertex(w.x(3))}}) {
    std::sort(k.begin(), k.end());
    expected_sets.insert(k);
  }
  REQUIRE(two_sided == expected_sets);

  REQUIRE(g.theta.has_edge(w.l_vertex(w.x(1)), w.r_vertex(w.x(3))));
  REQUIRE(g.theta.has_edge(w.l_vertex(w.xy(1, 6)), w.r_vertex(w.x(3))));

  std::set<std::size_t> coloured;
  for (std::size_t v = 0; v < g.delta.vertex_count(); ++v) {
    if (w.colour(v) == 1) {
      coloured.insert(v);
    }
  }
  REQUIRE(coloured
          == std::set<std::size_t>{w.l_vertex(w.x(1)), w.l_vertex(w.xy(1, 6)),
                                   w.r_vertex(w.x(3))});

  auto l_sources = sources(g.gamma_l);
  REQUIRE(l_sources.size() == 2);
  REQUIRE(std::count(l_sources.begin(), l_sources.end(), w.l_vertex(w.x(3))) == 1);
  REQUIRE(std::count(l_sources.begin(), l_sources.end(), w.l_vertex(w.x(4))) == 1);
  auto nl        = g.nr_l_components();
  auto r_sources = sources(g.gamma_r);
  REQUIRE(r_sources.size() == 2);
  REQUIRE(std::count(r_sources.begin(), r_sources.end(), w.r_vertex(w.x(1)) - nl) == 1);
  REQUIRE(std::count(r_sources.begin(), r_sources.end(), w.r_vertex(w.x(2)) - nl) == 1);

  auto from_x4 = reachable_set(g.gamma_l, w.l_vertex(w.x(4)));
  VertexSet expected{w.l_vertex(w.x(4)), w.l_vertex(w.x(1)), w.l_vertex(w.xy(1, 6))};
  std::sort(expected.begin(), expected.end());
  REQUIRE(from_x4 == expected);

  // <X'> ∩ J against the full closure of X'.
  auto in_j = xprime_closure_in_j(w.s, w.gs, w.j, w.xp);
  REQUIRE(in_j == g.xprime_in_j);
  VertexSet reference;
  for (auto a : closure_in(w.s, w.xp)) {
    if (w.gs.j_class[a] == w.j) {
      reference.push_back(a);
    }
  }
  REQUIRE(in_j == reference);
}

TEST_CASE("graphs with nothing above", "[max_subsemigroups]") {
  auto s  = FiniteSemigroup::from_rzms(fixtures::brandt_c2(2));
  auto gs = greens_structure(s);
  auto g  = build_jclass_graphs(s, gs, gs.j_class[1], {});
  REQUIRE(g.theta.edge_count() == 0);
  for (auto c : g.gamma_l.colour) {
    REQUIRE(c == 0);
  }
  for (auto c : g.gamma_r.colour) {
    REQUIRE(c == 0);
  }
  auto m = fixtures::monogenic(3, 1);
  auto mg = greens_structure(m);
  REQUIRE_THROWS_AS(build_jclass_graphs(m, mg, 1, {0}), InputError);
}

TEST_CASE("the types found in W", "[max_subsemigroups]") {
  WClasses w;
  auto     all = max_subsemigroups(w.s);
  require_valid(w.s, all);

  std::vector<MaximalSubsemigroup> from_j;
  for (auto const& m : all) {
    if (m.j_class == w.j) {
      from_j.push_back(m);
    }
  }
  auto s3 = of_type(from_j, MaxType::S3);
  auto s4 = of_type(from_j, MaxType::S4);
  auto s5 = of_type(from_j, MaxType::S5);
  REQUIRE(s3.size() == 2);
  REQUIRE(s4.size() == 2);
  REQUIRE(s5.size() == 2);
  REQUIRE(of_type(from_j, MaxType::S6).empty());

  auto L = [&](std::size_t a) { return w.gs.l_class[a]; };
  auto R = [&](std::size_t a) { return w.gs.r_class[a]; };
  auto sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::set<std::pair<VertexSet, VertexSet>> witnesses;
  for (auto const& m : s3) {
    witnesses.emplace(sorted(m.a_classes), sorted(m.b_classes));
  }
  std::set<std::pair<VertexSet, VertexSet>> expected{
      {sorted({L(w.x(1)), L(w.xy(1, 6))}), sorted({R(w.x(1))})},
      {sorted({L(w.xy(1, 6))}), sorted({R(w.x(1)), R(w.x(3)), R(w.xy(7, 3))})}};
  REQUIRE(witnesses == expected);

  // Type S4 removes the complement of a colour-0 source of Γ_L.
  std::set<VertexSet> removed_l;
  for (auto const& m : s4) {
    std::set<std::size_t> gone;
    for (auto a : complement(w.s, m.members)) {
      gone.insert(w.gs.l_class[a]);
    }
    removed_l.insert(VertexSet(gone.begin(), gone.end()));
  }
  REQUIRE(removed_l == std::set<VertexSet>{{L(w.x(3))}, {L(w.x(4))}});

  // Type S5 gives W \ R_x1 and W \ R_x2.
  std::set<VertexSet> removed;
  for (auto const& m : s5) {
    removed.insert(complement(w.s, m.members));
  }
  REQUIRE(removed
          == std::set<VertexSet>{w.gs.r_members[R(w.x(1))], w.gs.r_members[R(w.x(2))]});

  MaxOptions only;
  only.types = {MaxType::S3};
  auto filtered = max_subsemigroups(w.s, only);
  REQUIRE(filtered.size() == 2);
}

TEST_CASE("type S1", "[max_subsemigroups]") {
  // <a | a^4 = a^3>: a^2 is generated by a, so no S1 from J = {a^2}.
  auto m  = fixtures::monogenic(3, 1);
  auto gs = greens_structure(m);
  REQUIRE_FALSE(max_s1(m, gs, 1, x_prime(m, gs, 1)));
  auto all = max_subsemigroups(m);
  REQUIRE(member_sets(all) == std::vector<VertexSet>{{1, 2}});
  REQUIRE(all[0].type == MaxType::MaxTrivial);

  // With an irredundant generating set, S \ J is maximal for a non-regular
  // J exactly when J meets the generators.
  auto six = fixtures::monogenic(5, 2);
  REQUIRE(six.size() == 6);
  auto sg     = greens_structure(six);
  auto oracle = brute_force_maximal(six).maximal;
  for (std::size_t j = 0; j < sg.nr_j_classes(); ++j) {
    if (sg.regular_j[j]) {
      continue;
    }
    auto rest = complement(six, sg.j_members[j]);
    bool meets = std::any_of(sg.j_members[j].begin(), sg.j_members[j].end(),
                             [](std::size_t a) { return a == 0; });
    REQUIRE((std::count(oracle.begin(), oracle.end(), rest) == 1) == meets);
  }
  REQUIRE(member_sets(max_subsemigroups(six)) == oracle);

  // Two generators at the top and a null class below.
  auto t = FiniteSemigroup::from_transformations(
      {fixtures::w_generators()[0], fixtures::w_generators()[4]});
  auto tg = greens_structure(t);
  for (std::size_t j = 0; j < tg.nr_j_classes(); ++j) {
    if (!tg.regular_j[j] && !tg.is_maximal(j)) {
      auto xp = x_prime(t, tg, j);
      auto r  = max_s1(t, tg, j, xp);
      REQUIRE(r.has_value() == xprime_closure_in_j(t, tg, j, xp).empty());
    }
  }
}

TEST_CASE("type S2 filters by the required elements", "[max_subsemigroups]") {
  bool shrank = false;
  for (auto const& named : fixtures::oracle_corpus()) {
    auto const& s  = named.semigroup;
    auto        gs = greens_structure(s);
    for (std::size_t j = 0; j < gs.nr_j_classes(); ++j) {
      if (!gs.regular_j[j] || gs.is_maximal(j)) {
        continue;
      }
      auto pfi = principal_factor_iso(s, gs, j);
      auto xp  = x_prime(s, gs, j);
      auto s2  = max_s2(s, gs, j, xp, pfi);
      auto all = max_r6(pfi.target);
      REQUIRE(s2.size() <= all.size());
      shrank |= s2.size() < all.size();
      for (auto const& m : s2) {
        REQUIRE(m.type == MaxType::S2);
        REQUIRE(verify_maximal(s, m.members));
      }
    }
  }
  REQUIRE(shrank);

  auto c = fixtures::c3_times_semilattice();
  auto gs = greens_structure(c);
  auto low = gs.j_class[c.generator(1)];
  auto pfi = principal_factor_iso(c, gs, low);
  REQUIRE(max_r6(pfi.target).size() == 1);
  REQUIRE(max_s2(c, gs, low, x_prime(c, gs, low), pfi).empty());
}

TEST_CASE("type S6", "[max_subsemigroups]") {
  auto c   = fixtures::c3_times_semilattice();
  auto all = max_subsemigroups(c);
  REQUIRE(all.size() == 2);
  REQUIRE(of_type(all, MaxType::S6).size() == 1);
  REQUIRE(of_type(all, MaxType::MaxR6).size() == 1);
  auto gs  = greens_structure(c);
  auto low = gs.j_class[c.generator(1)];
  REQUIRE(of_type(all, MaxType::S6)[0].members == complement(c, gs.j_members[low]));
  REQUIRE(member_sets(all) == brute_force_maximal(c).maximal);
}

TEST_CASE("a Rees 0-matrix semigroup through the general pipeline",
          "[max_subsemigroups]") {
  auto s   = FiniteSemigroup::from_rzms(fixtures::s4_example());
  auto all = max_subsemigroups(s);
  REQUIRE(all.size() == 32);
  std::map<MaxType, std::size_t> counts;
  for (auto const& m : all) {
    ++counts[m.type];
  }
  REQUIRE(counts[MaxType::MaxR3] + counts[MaxType::MaxR4] == 9);
  REQUIRE(counts[MaxType::MaxR5] == 14);
  REQUIRE(counts[MaxType::MaxR6] == 9);
}

TEST_CASE("edge cases", "[max_subsemigroups]") {
  auto one = FiniteSemigroup::from_transformations({parse_image_row("1 1")});
  REQUIRE(max_subsemigroups(one).empty());

  Limits tight;
  tight.clique_vertices = 3;
  MaxOptions opts;
  opts.limits = tight;
  REQUIRE_THROWS_WITH(max_subsemigroups(fixtures::w_semigroup(), opts),
                      Catch::Matchers::ContainsSubstring("J-class"));
}

TEST_CASE("agrees with the brute-force oracle", "[max_subsemigroups]") {
  std::size_t checked = 0;
  for (auto const& named : fixtures::oracle_corpus()) {
    INFO(named.name);
    auto const& s   = named.semigroup;
    auto        all = max_subsemigroups(s);
    REQUIRE(member_sets(all) == brute_force_maximal(s).maximal);
    require_valid(s, all);
    ++checked;
  }
  REQUIRE(checked > 150);
}

TEST_CASE("properties on larger semigroups", "[max_subsemigroups]") {
  for (auto const& named : fixtures::property_corpus()) {
    INFO(named.name);
    require_valid(named.semigroup, max_subsemigroups(named.semigroup));
  }
}

TEST_CASE("generator order does not matter", "[max_subsemigroups]") {
  std::vector<std::vector<Transformation>> families{
      fixtures::w_generators(),
      {parse_image_row("2 1 3 4"), parse_image_row("2 3 4 1"), parse_image_row("1 1 3 4")},
      {parse_image_row("2 3 1 4 5"), parse_image_row("1 1 3 4 4"),
       parse_image_row("5 4 3 2 1")}};
  for (auto gens : families) {
    auto a   = FiniteSemigroup::from_transformations(gens);
    auto ref = as_transformations(a, max_subsemigroups(a));
    std::reverse(gens.begin(), gens.end());
    auto b = FiniteSemigroup::from_transformations(gens);
    REQUIRE(as_transformations(b, max_subsemigroups(b)) == ref);
    std::rotate(gens.begin(), gens.begin() + 1, gens.end());
    auto c = FiniteSemigroup::from_transformations(gens);
    REQUIRE(as_transformations(c, max_subsemigroups(c)) == ref);
  }
}

TEST_CASE("shuffled normalization does not change results", "[max_subsemigroups]") {
  for (auto const& named : fixtures::property_corpus()) {
    auto const& s   = named.semigroup;
    auto        ref = member_sets(max_subsemigroups(s));
    MaxOptions  opts;
    opts.shuffle_seed = 17;
    REQUIRE(member_sets(max_subsemigroups(s, opts)) == ref);
  }
}
