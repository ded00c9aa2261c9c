#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"

#include "fixtures.hpp"
#include "maxsub/oracle.hpp"
#include "maxsub/rees_matrix.hpp"
#include "maxsub/semigroup.hpp"

using namespace maxsub;

namespace {

  using Rzms = ReesZeroMatrixSemigroup;

  PermGroup cyclic(std::size_t n) {
    if (n == 1) {
      return PermGroup(1, {Permutation::identity(1)});
    }
    std::vector<point_type> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<point_type>((i + 1) % n);
    }
    return PermGroup(n, {Permutation(c)});
  }

  // Every Rees 0-matrix semigroup over C1, C2, C3 with at most 16 elements,
  // every k-th one when there are many.
  std::vector<Rzms> small_rzms(bool regular_only) {
    std::vector<Rzms> out;
    for (std::size_t order : {1, 2, 3}) {
      auto g = cyclic(order);
      for (std::size_t ni = 1; ni <= 3; ++ni) {
        for (std::size_t nl = 1; nl <= 3; ++nl) {
          if (1 + ni * nl * order > 16) {
            continue;
          }
          std::size_t cells = ni * nl, total = 1;
          for (std::size_t c = 0; c < cells; ++c) {
            total *= order + 1;
          }
          std::size_t step = total > 200 ? 7 : 1;
          for (std::size_t code = 0; code < total; code += step) {
            Rzms::Matrix p(nl, std::vector<Rzms::Entry>(ni));
            auto         rest = code;
            for (std::size_t c = 0; c < cells; ++c) {
              auto v = rest % (order + 1);
              rest /= order + 1;
              if (v != 0) {
                p[c / ni][c % ni] = v - 1;
              }
            }
            Rzms r(ni, nl, g, p);
            if (!regular_only || r.is_regular()) {
              out.push_back(std::move(r));
            }
          }
        }
      }
    }
    return out;
  }

  std::vector<VertexSet> member_sets(std::vector<RzmsMaxSubsemigroup> const& v) {
    std::vector<VertexSet> out;
    for (auto const& m : v) {
      out.push_back(m.members);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t count_type(std::vector<RzmsMaxSubsemigroup> const& v, RzmsType t) {
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [&](auto const& m) { return m.type == t; }));
  }

  // Product from the definition, on permutations.
  std::size_t reference_product(Rzms const& r, std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) {
      return 0;
    }
    auto x = r.triple(a), y = r.triple(b);
    auto p = r.entry(x.lambda, y.i);
    if (!p) {
      return 0;
    }
    auto const& G   = r.group().elements();
    auto        prd = G[x.g] * G[*p] * G[y.g];
    return r.element(x.i, *r.group().index_of(prd), y.lambda);
  }

  void require_isomorphism(NormalizationData const& nd, Rzms const& r) {
    auto const& n = nd.normalized;
    REQUIRE(n.size() == r.size());
    std::vector<bool> hit(r.size(), false);
    for (std::size_t a = 0; a < r.size(); ++a) {
      auto fa = nd.to_normalized(a);
      REQUIRE(nd.from_normalized(fa) == a);
      REQUIRE_FALSE(hit[fa]);
      hit[fa] = true;
      for (std::size_t b = 0; b < r.size(); ++b) {
        REQUIRE(nd.to_normalized(r.multiply(a, b))
                == n.multiply(fa, nd.to_normalized(b)));
      }
    }
  }

  void require_normalized(NormalizationData const& nd, Rzms const& r) {
    auto const& n  = nd.normalized;
    auto        gh = connected_components(graham_houghton(r));
    REQUIRE(nd.components.size() == gh.size());
    for (auto const& c : nd.components) {
      VertexSet verts = c.i_indices;
      for (auto l : c.lambda_indices) {
        verts.push_back(r.i_size() + l);
      }
      std::sort(verts.begin(), verts.end());
      REQUIRE(std::count(gh.begin(), gh.end(), verts) == 1);
      REQUIRE(n.entry(c.anchor_lambda, c.anchor_i) == std::optional<std::size_t>(0));
      std::vector<Permutation> block;
      for (auto l : c.lambda_indices) {
        for (auto i : c.i_indices) {
          if (auto e = n.entry(l, i)) {
            REQUIRE(c.group.contains(n.group().elements()[*e]));
            block.push_back(n.group().elements()[*e]);
          }
        }
      }
      REQUIRE(generate_group(n.group().degree(), block) == c.group);
    }
  }

  // ⟨gens⟩ inside the enumerated semigroup; ids agree with r.
  VertexSet generated(FiniteSemigroup const& s, std::vector<std::size_t> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return closure_in(s, gens);
  }

}  // namespace

TEST_CASE("rzms multiplication", "[rees_matrix]") {
  auto b  = fixtures::brandt_c2(2);
  auto x  = *b.group().index_of(parse_cycles("(1 2)", 2));
  auto id = *b.group().index_of(Permutation::identity(2));
  REQUIRE(b.size() == 9);
  REQUIRE(b.multiply(0, b.element(0, x, 0)) == 0);
  REQUIRE(b.multiply(b.element(1, x, 1), 0) == 0);
  REQUIRE(b.multiply(b.element(0, x, 0), b.element(0, x, 1)) == b.element(0, id, 1));
  REQUIRE(b.multiply(b.element(0, x, 1), b.element(0, x, 1)) == 0);
  REQUIRE(b.to_string(b.element(0, x, 1)) == "(1,(1 2),-2)");
  REQUIRE(b.to_string(0) == "0");

  auto rs = small_rzms(false);
  rs.push_back(fixtures::brandt_symmetric(3, 2));
  rs.push_back(fixtures::s4_example());
  for (auto const& r : rs) {
    auto step = r.size() > 100 ? 7 : 1;
    for (std::size_t a = 0; a < r.size(); a += step) {
      if (a != 0) {
        auto t = r.triple(a);
        REQUIRE(r.element(t.i, t.g, t.lambda) == a);
      }
      for (std::size_t c = 0; c < r.size(); c += step) {
        REQUIRE(r.multiply(a, c) == reference_product(r, a, c));
      }
    }
  }
}

TEST_CASE("graham_houghton", "[rees_matrix]") {
  auto gh = graham_houghton(fixtures::s4_example());
  REQUIRE(gh.vertex_count() == 12);
  REQUIRE(gh.edge_count() == 11);
  auto b = graham_houghton(fixtures::brandt_symmetric(3, 4));
  REQUIRE(b.edge_count() == 4);
  REQUIRE(connected_components(b).size() == 4);
  auto k = graham_houghton(fixtures::c2_full_block());
  REQUIRE(k.edge_count() == 4);
  REQUIRE(connected_components(k).size() == 1);
}

TEST_CASE("normalize", "[rees_matrix]") {
  SECTION("the S4 example") {
    auto r  = fixtures::s4_example();
    auto nd = normalize(r);
    require_normalized(nd, r);
    require_isomorphism(nd, r);
    // Up to the choice of forest, G1 is generated by a double transposition,
    // G2 by a 4-cycle, and G3 is trivial.
    REQUIRE(nd.components.size() == 3);
    auto const& c = nd.components;
    REQUIRE(c[0].i_indices == std::vector<std::size_t>{0, 1, 2});
    REQUIRE(c[0].group.order() == 2);
    auto g1 = c[0].group.elements()[1];
    REQUIRE(to_cycle_string(g1).size() == std::string("(1 2)(3 4)").size());
    REQUIRE(c[1].group.order() == 4);
    bool four_cycle = false;
    for (auto const& g : c[1].group.elements()) {
      four_cycle |= to_cycle_string(g).size() == std::string("(1 2 3 4)").size();
    }
    REQUIRE(four_cycle);
    REQUIRE(c[2].group.order() == 1);
    // Normalizing keeps the zero pattern of P.
    std::size_t nonzero = 0;
    for (auto const& row : nd.normalized.matrix()) {
      nonzero += std::count_if(row.begin(), row.end(), [](auto const& e) {
        return e.has_value();
      });
    }
    REQUIRE(nonzero == 11);
  }

  SECTION("shuffled forests are valid too") {
    auto r = fixtures::s4_example();
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      auto nd = normalize(r, seed);
      require_normalized(nd, r);
    }
  }

  SECTION("Brandt semigroups are already normalized") {
    auto r  = fixtures::brandt_symmetric(3, 3);
    auto nd = normalize(r);
    REQUIRE(nd.normalized.matrix() == r.matrix());
    for (auto const& c : nd.components) {
      REQUIRE(c.group.order() == 1);
    }
  }

  SECTION("[[1,1],[1,x]] over C2") {
    auto r  = fixtures::c2_full_block();
    auto nd = normalize(r);
    REQUIRE(nd.components.size() == 1);
    REQUIRE(nd.components[0].group == r.group());
  }

  SECTION("small semigroups") {
    for (auto const& r : small_rzms(true)) {
      auto nd = normalize(r);
      require_normalized(nd, r);
      require_isomorphism(nd, r);
    }
  }

  SECTION("non-regular input") {
    Rzms::Matrix p{{0, std::nullopt}, {std::nullopt, std::nullopt}};
    REQUIRE_THROWS_AS(normalize(Rzms(2, 2, cyclic(2), p)), InputError);
  }
}

TEST_CASE("max_r1_r2", "[rees_matrix]") {
  auto s4 = fixtures::s4_example();
  REQUIRE(s4.size() == 865);
  REQUIRE(max_r1_r2(s4).empty());

  Rzms one(1, 1, cyclic(1), Rzms::Matrix{{0}});
  auto r = max_r1_r2(one);
  REQUIRE(r.size() == 2);
  REQUIRE(r[0].type == RzmsType::R1);
  REQUIRE(r[0].members == VertexSet{0});
  REQUIRE(r[1].type == RzmsType::R2);
  REQUIRE(r[1].members == VertexSet{1});

  auto full = max_r1_r2(fixtures::c2_full_block());
  REQUIRE(full.size() == 1);
  REQUIRE(full[0].type == RzmsType::R2);
  REQUIRE(full[0].size() == 8);
}

TEST_CASE("max_r3_r4", "[rees_matrix]") {
  auto r = max_r3_r4(fixtures::s4_example());
  REQUIRE(r.size() == 9);
  std::set<std::size_t> lambdas, is;
  for (auto const& m : r) {
    (m.type == RzmsType::R3 ? lambdas : is).insert(*m.removed);
  }
  REQUIRE(lambdas == std::set<std::size_t>{0, 1, 2, 3, 4});
  REQUIRE(is == std::set<std::size_t>{0, 2, 3, 4});

  REQUIRE(max_r3_r4(fixtures::brandt_c2(2)).empty());

  PermGroup c2 = cyclic(2);
  Rzms      kb(2, 3, c2, Rzms::Matrix(3, std::vector<Rzms::Entry>(2, 0)));
  REQUIRE(max_r3_r4(kb).size() == 5);
}

TEST_CASE("max_r5", "[rees_matrix]") {
  REQUIRE(max_r5(fixtures::s4_example()).size() == 14);

  auto b = max_r5(fixtures::brandt_c2(2));
  REQUIRE(b.size() == 2);
  std::set<std::pair<VertexSet, VertexSet>> sides;
  for (auto const& m : b) {
    sides.emplace(m.x_indices, m.y_indices);
  }
  // {1, -2} and {2, -1}.
  REQUIRE(sides == std::set<std::pair<VertexSet, VertexSet>>{{{0}, {1}}, {{1}, {0}}});

  Rzms kb(2, 2, cyclic(3), Rzms::Matrix(2, std::vector<Rzms::Entry>(2, 0)));
  REQUIRE(max_r5(kb).empty());
}

TEST_CASE("max_r6", "[rees_matrix]") {
  SECTION("the S4 example") {
    auto r       = fixtures::s4_example();
    auto result  = max_r6(r);
    auto classes = maximal_subgroup_classes(r.group());
    REQUIRE(result.size() == 9);
    for (auto const& m : result) {
      REQUIRE(classes[m.subgroup_class].representative.order() == 8);
      REQUIRE(m.coset_tuple.size() == 3);
    }
  }

  SECTION("Brandt semigroups over S3") {
    for (std::size_t m : {2, 3}) {
      auto r       = fixtures::brandt_symmetric(3, m);
      auto result  = max_r6(r);
      auto classes = maximal_subgroup_classes(r.group());
      std::size_t from_a3 = 0, from_c2 = 0;
      for (auto const& x : result) {
        auto order = classes[x.subgroup_class].representative.order();
        (order == 3 ? from_a3 : from_c2) += 1;
      }
      std::size_t pow2 = 1, pow3 = 1;
      for (std::size_t k = 0; k < m; ++k) {
        pow3 *= 3;
        pow2 *= k == 0 ? 1 : 2;
      }
      REQUIRE(from_a3 == pow2);
      REQUIRE(from_c2 == pow3);
      REQUIRE(result.size() == (m == 2 ? 11 : 31));
    }
  }

  SECTION("[[1,1],[1,x]] over C2") {
    REQUIRE(max_r6(fixtures::c2_full_block()).empty());
  }

  SECTION("transversal and forest choices do not matter") {
    for (auto const& r : {fixtures::s4_example(), fixtures::brandt_symmetric(3, 3),
                          fixtures::brandt_c2(3)}) {
      auto base = member_sets(max_r6(r));
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        REQUIRE(member_sets(max_r6(r, {}, R6Options{seed, {}})) == base);
      }
    }
  }

  SECTION("required elements") {
    auto r   = fixtures::s4_example();
    auto all = max_r6(r);
    auto a   = all.front().members[1];
    auto kept = max_r6(r, std::vector<std::size_t>{a});
    std::size_t expected = std::count_if(all.begin(), all.end(), [&](auto const& m) {
      return std::binary_search(m.members.begin(), m.members.end(), a);
    });
    REQUIRE(kept.size() == expected);
    REQUIRE(expected < all.size());
  }
}

TEST_CASE("max_subsemigroups_rzms", "[rees_matrix]") {
  SECTION("the S4 example") {
    auto r   = fixtures::s4_example();
    auto all = max_subsemigroups_rzms(r);
    REQUIRE(all.size() == 32);
    REQUIRE(count_type(all, RzmsType::R1) == 0);
    REQUIRE(count_type(all, RzmsType::R2) == 0);
    REQUIRE(count_type(all, RzmsType::R3) + count_type(all, RzmsType::R4) == 9);
    REQUIRE(count_type(all, RzmsType::R5) == 14);
    REQUIRE(count_type(all, RzmsType::R6) == 9);
    auto s = FiniteSemigroup::from_rzms(r);
    for (auto const& m : all) {
      REQUIRE(generated(s, m.generators) == m.members);
      REQUIRE(verify_maximal(s, m.members));
    }
    auto sets = member_sets(all);
    REQUIRE(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
  }

  SECTION("B(C2,2)") {
    auto r   = fixtures::brandt_c2(2);
    auto all = max_subsemigroups_rzms(r);
    REQUIRE(all.size() == 4);
    REQUIRE(count_type(all, RzmsType::R5) == 2);
    REQUIRE(count_type(all, RzmsType::R6) == 2);
  }

  SECTION("|R| = 2") {
    Rzms one(1, 1, cyclic(1), Rzms::Matrix{{0}});
    auto all = max_subsemigroups_rzms(one);
    REQUIRE(member_sets(all) == std::vector<VertexSet>{{0}, {1}});
  }

  SECTION("agrees with the brute-force oracle") {
    std::size_t checked = 0;
    for (auto const& r : small_rzms(true)) {
      auto s = FiniteSemigroup::from_rzms(r);
      auto all = max_subsemigroups_rzms(r);
      for (auto const& m : all) {
        REQUIRE(generated(s, m.generators) == m.members);
      }
      REQUIRE(member_sets(all) == brute_force_maximal(s).maximal);
      ++checked;
    }
    REQUIRE(checked > 100);
  }
}
