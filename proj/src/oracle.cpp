#include "maxsub/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

#include "maxsub/closure.hpp"

namespace maxsub {

  OracleReport brute_force_maximal(FiniteSemigroup const& s) {
    auto const        start = std::chrono::steady_clock::now();
    std::size_t const n     = s.size();
    if (n > oracle_subset_bound) {
      throw CapacityError("brute force needs at most "
                              + std::to_string(oracle_subset_bound)
                              + " elements, got " + std::to_string(n)
                              + "; use verify_maximal on candidate sets",
                          oracle_subset_bound);
    }
    using mask_t      = std::uint32_t;
    mask_t const full = (mask_t(1) << n) - 1;

    // row[a][B] would be too big; product bits per pair suffice.
    std::vector<mask_t> prod_bit(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        prod_bit[a * n + b] = mask_t(1) << s.product(a, b);
      }
    }
    auto closed = [&](mask_t m) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!(m >> a & 1)) {
          continue;
        }
        mask_t image = 0;
        for (std::size_t b = 0; b < n; ++b) {
          if (m >> b & 1) {
            image |= prod_bit[a * n + b];
          }
        }
        if ((image & ~m) != 0) {
          return false;
        }
      }
      return true;
    };

    // covered[m]: some proper closed set contains m.
    std::vector<bool> is_closed(full + 1, false), covered(full + 1, false);
    for (mask_t m = 0; m < full; ++m) {
      is_closed[m] = closed(m);
      covered[m]   = is_closed[m];
    }
    for (std::size_t bit = 0; bit < n; ++bit) {
      for (mask_t m = full; m-- > 0;) {
        if (!(m >> bit & 1) && covered[m | (mask_t(1) << bit)]
            && (m | (mask_t(1) << bit)) != full) {
          covered[m] = true;
        }
      }
    }

    OracleReport report;
    report.semigroup_size = n;
    for (mask_t m = 1; m < full; ++m) {
      if (!is_closed[m]) {
        continue;
      }
      bool maximal = true;
      for (std::size_t bit = 0; bit < n && maximal; ++bit) {
        mask_t bigger = m | (mask_t(1) << bit);
        if (bigger != m && bigger != full && covered[bigger]) {
          maximal = false;
        }
      }
      if (maximal) {
        VertexSet set;
        for (std::size_t a = 0; a < n; ++a) {
          if (m >> a & 1) {
            set.push_back(a);
          }
        }
        report.maximal.push_back(std::move(set));
      }
    }
    std::sort(report.maximal.begin(), report.maximal.end());
    report.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
  }

  Verdict verify_maximal(FiniteSemigroup const& s, VertexSet const& members) {
    std::size_t const n = s.size();
    std::vector<bool> in(n, false);
    for (auto a : members) {
      if (a >= n) {
        return {false, "element " + std::to_string(a) + " is out of range"};
      }
      in[a] = true;
    }
    if (members.empty()) {
      return {false, "the set is empty"};
    }
    if (members.size() == n
        || static_cast<std::size_t>(std::count(in.begin(), in.end(), true))
               == n) {
      return {false, "not proper: the set is the whole semigroup"};
    }
    for (auto a : members) {
      for (auto b : members) {
        auto ab = s.product(a, b);
        if (!in[ab]) {
          return {false,
                  "not closed: " + std::to_string(a) + " * "
                      + std::to_string(b) + " = " + std::to_string(ab)
                      + " is missing"};
        }
      }
    }
    auto mul  = [&s](std::size_t a, std::size_t b) { return s.product(a, b); };
    IncrementalClosure<decltype(mul)> base(n, mul);
    for (auto a : members) {
      base.add(a);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (in[x]) {
        continue;
      }
      auto c = base;
      c.add(x);
      if (c.size() != n) {
        return {false,
                "not maximal: adding " + std::to_string(x) + " generates only "
                    + std::to_string(c.size()) + " of "
                    + std::to_string(n) + " elements"};
      }
    }
    return {true, {}};
  }

}  // namespace maxsub
