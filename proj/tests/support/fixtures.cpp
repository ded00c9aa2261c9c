#include "fixtures.hpp"

#include <random>

namespace fixtures {

  using maxsub::Permutation;
  using maxsub::PermGroup;
  using maxsub::Transformation;

  std::vector<Transformation> w_generators() {
    std::vector<Transformation> out;
    for (auto row : {"1 3 4 1 5 5 5",
                     "1 4 1 3 5 5 5",
                     "3 3 1 2 5 5 5",
                     "4 4 2 3 5 5 5",
                     "1 1 3 4 5 5 6",
                     "1 2 2 4 5 6 7",
                     "1 4 3 4 5 6 7",
                     "1 2 4 4 5 6 7"}) {
      out.push_back(maxsub::parse_image_row(row));
    }
    return out;
  }

  FiniteSemigroup w_semigroup() {
    return FiniteSemigroup::from_transformations(w_generators());
  }

  ReesZeroMatrixSemigroup s4_example() {
    PermGroup s4(4,
                 {maxsub::parse_cycles("(1 2 3 4)", 4),
                  maxsub::parse_cycles("(1 2)", 4)});
    char const* rows[6][6] = {
        {"(3 4)", "(1 3 2 4)", "(1 4)(2 3)", "0", "0", "0"},
        {"(2 4)", "0", "(1 3 2)", "0", "0", "0"},
        {"0", "(3 4)", "0", "0", "0", "0"},
        {"0", "0", "0", "(1 4 3)", "(1 3)(2 4)", "0"},
        {"0", "0", "0", "(1 4)", "(1 4 2)", "0"},
        {"0", "0", "0", "0", "0", "(1 4 2)"},
    };
    std::vector<std::vector<std::optional<Permutation>>> matrix(6);
    for (std::size_t l = 0; l < 6; ++l) {
      for (std::size_t i = 0; i < 6; ++i) {
        std::string entry = rows[l][i];
        if (entry == "0") {
          matrix[l].emplace_back();
        } else {
          matrix[l].emplace_back(maxsub::parse_cycles(entry, 4));
        }
      }
    }
    return ReesZeroMatrixSemigroup::from_permutations(6, 6, s4, matrix);
  }

  namespace {
    ReesZeroMatrixSemigroup brandt(PermGroup const& g, std::size_t m) {
      auto const                      id = g.index_of(Permutation::identity(g.degree()));
      ReesZeroMatrixSemigroup::Matrix p(m, std::vector<std::optional<std::size_t>>(m));
      for (std::size_t k = 0; k < m; ++k) {
        p[k][k] = *id;
      }
      return ReesZeroMatrixSemigroup(m, m, g, p);
    }
  }  // namespace

  ReesZeroMatrixSemigroup brandt_symmetric(std::size_t degree, std::size_t m) {
    std::vector<maxsub::point_type> c(degree), t(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      c[i] = static_cast<maxsub::point_type>((i + 1) % degree);
      t[i] = static_cast<maxsub::point_type>(i);
    }
    if (degree > 1) {
      std::swap(t[0], t[1]);
    }
    return brandt(PermGroup(degree, {Permutation(c), Permutation(t)}), m);
  }

  ReesZeroMatrixSemigroup brandt_c2(std::size_t m) {
    return brandt(PermGroup(2, {maxsub::parse_cycles("(1 2)", 2)}), m);
  }

  ReesZeroMatrixSemigroup c2_full_block() {
    PermGroup c2(2, {maxsub::parse_cycles("(1 2)", 2)});
    auto      one = *c2.index_of(Permutation::identity(2));
    auto      x   = 1 - one;
    ReesZeroMatrixSemigroup::Matrix p{{one, one}, {one, x}};
    return ReesZeroMatrixSemigroup(2, 2, c2, p);
  }

  FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
    // Element k stands for a^(k + 1).
    std::size_t const n = index + period - 1;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t k = a + b + 2;
        if (k > n) {
          k = index + (k - index) % period;
        }
        table[a][b] = k - 1;
      }
    }
    return FiniteSemigroup::from_table(table, std::vector<std::size_t>{0});
  }

  namespace {
    template <typename F>
    FiniteSemigroup tabled(std::size_t n, F&& f) {
      std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          table[a][b] = f(a, b);
        }
      }
      return FiniteSemigroup::from_table(table);
    }
  }  // namespace

  FiniteSemigroup zero_semigroup(std::size_t n) {
    return tabled(n, [](std::size_t, std::size_t) { return std::size_t(0); });
  }

  FiniteSemigroup left_zero_semigroup(std::size_t n) {
    return tabled(n, [](std::size_t a, std::size_t) { return a; });
  }

  FiniteSemigroup right_zero_semigroup(std::size_t n) {
    return tabled(n, [](std::size_t, std::size_t b) { return b; });
  }

  std::vector<std::vector<std::size_t>> table_of(FiniteSemigroup const& s) {
    std::vector<std::vector<std::size_t>> table(s.size(),
                                                std::vector<std::size_t>(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a) {
      for (std::size_t b = 0; b < s.size(); ++b) {
        table[a][b] = s.product(a, b);
      }
    }
    return table;
  }

  FiniteSemigroup with_identity(FiniteSemigroup const& s) {
    auto const n = s.size();
    auto       t = table_of(s);
    return tabled(n + 1, [&](std::size_t a, std::size_t b) {
      return a == n ? b : b == n ? a : t[a][b];
    });
  }

  FiniteSemigroup c3_times_semilattice() {
    // (g, e) with g in Z/3 and e in {1, 0}, encoded as g + 3 * (e == 0).
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        table[a][b] = (a % 3 + b % 3) % 3 + 3 * ((a >= 3) || (b >= 3));
      }
    }
    return FiniteSemigroup::from_table(table, std::vector<std::size_t>{1, 3});
  }

  namespace {
    Transformation random_transformation(std::mt19937_64& rng, std::size_t n) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      std::vector<maxsub::point_type>            images(n);
      for (auto& x : images) {
        x = static_cast<maxsub::point_type>(pick(rng));
      }
      return Transformation(images);
    }

    void random_transformation_semigroups(std::vector<Named>& out,
                                          std::size_t         degree,
                                          std::size_t         count,
                                          std::size_t         max_size,
                                          std::uint64_t       seed) {
      std::mt19937_64                            rng(seed);
      std::uniform_int_distribution<std::size_t> nr_gens(1, 3);
      maxsub::Limits                             limits;
      limits.semigroup_size = max_size;
      std::size_t found = 0;
      for (std::size_t attempt = 0; found < count && attempt < 100 * count;
           ++attempt) {
        std::vector<Transformation> gens;
        auto                        k = nr_gens(rng);
        for (std::size_t j = 0; j < k; ++j) {
          gens.push_back(random_transformation(rng, degree));
        }
        try {
          auto s = FiniteSemigroup::from_transformations(gens, limits);
          out.push_back({"T" + std::to_string(degree) + " random #"
                             + std::to_string(attempt),
                         std::move(s)});
          ++found;
        } catch (maxsub::CapacityError const&) {
        }
      }
    }

    void all_small_rzms(std::vector<Named>& out) {
      std::vector<PermGroup> groups{PermGroup(1, {}),
                                    PermGroup(2, {maxsub::parse_cycles("(1 2)", 2)})};
      for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        auto const&       g      = groups[gi];
        std::size_t const values = g.order() + 1;  // 0 then each element
        for (std::size_t ni = 1; ni <= 2; ++ni) {
          for (std::size_t nl = 1; nl <= 2; ++nl) {
            std::size_t cells = ni * nl, total = 1;
            for (std::size_t c = 0; c < cells; ++c) {
              total *= values;
            }
            for (std::size_t code = 0; code < total; ++code) {
              ReesZeroMatrixSemigroup::Matrix p(nl,
                                                std::vector<std::optional<std::size_t>>(ni));
              std::size_t rest = code;
              for (std::size_t l = 0; l < nl; ++l) {
                for (std::size_t i = 0; i < ni; ++i) {
                  auto v = rest % values;
                  rest /= values;
                  if (v > 0) {
                    p[l][i] = v - 1;
                  }
                }
              }
              ReesZeroMatrixSemigroup r(ni, nl, g, p);
              out.push_back({"RZMS over C" + std::to_string(g.order()) + " "
                                 + std::to_string(ni) + "x"
                                 + std::to_string(nl) + " #"
                                 + std::to_string(code),
                             FiniteSemigroup::from_rzms(r)});
            }
          }
        }
      }
    }
  }  // namespace

  std::vector<Named> oracle_corpus() {
    std::vector<Named> out;
    for (std::size_t index = 1; index < 8; ++index) {
      for (std::size_t period = 1; index + period <= 8; ++period) {
        out.push_back({"monogenic index " + std::to_string(index) + " period "
                           + std::to_string(period),
                       monogenic(index, period)});
      }
    }
    all_small_rzms(out);
    random_transformation_semigroups(out, 3, 40, 16, 3);
    random_transformation_semigroups(out, 4, 40, 16, 4);
    for (std::size_t n = 1; n <= 6; ++n) {
      out.push_back({"zero semigroup " + std::to_string(n), zero_semigroup(n)});
      out.push_back({"left zero semigroup " + std::to_string(n),
                     left_zero_semigroup(n)});
      out.push_back({"right zero semigroup " + std::to_string(n),
                     right_zero_semigroup(n)});
    }
    out.push_back({"B(C2,2) with identity", with_identity(FiniteSemigroup::from_rzms(brandt_c2(2)))});
    out.push_back({"C3 x {1,0}", c3_times_semilattice()});
    return out;
  }

  std::vector<Named> property_corpus() {
    std::vector<Named> out;
    out.push_back({"W", w_semigroup()});
    out.push_back({"B(S3,2)", FiniteSemigroup::from_rzms(brandt_symmetric(3, 2))});
    out.push_back({"B(S3,3)", FiniteSemigroup::from_rzms(brandt_symmetric(3, 3))});
    out.push_back({"6x6 over S4", FiniteSemigroup::from_rzms(s4_example())});
    out.push_back({"T4",
                   FiniteSemigroup::from_transformations(
                       {maxsub::parse_image_row("2 1 3 4"),
                        maxsub::parse_image_row("2 3 4 1"),
                        maxsub::parse_image_row("1 1 3 4")})});
    out.push_back({"T3",
                   FiniteSemigroup::from_transformations(
                       {maxsub::parse_image_row("2 1 3"),
                        maxsub::parse_image_row("2 3 1"),
                        maxsub::parse_image_row("1 1 3")})});
    random_transformation_semigroups(out, 5, 8, 2000, 5);
    random_transformation_semigroups(out, 6, 4, 2000, 6);
    return out;
  }

}  // namespace fixtures
