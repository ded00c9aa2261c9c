#include "maxsub/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "maxsub/closure.hpp"

namespace maxsub {

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<point_type> images)
      : _images(std::move(images)) {
    for (auto x : _images) {
      if (x >= _images.size()) {
        throw InputError("transformation image " + std::to_string(x + 1)
                         + " exceeds the degree "
                         + std::to_string(_images.size()));
      }
    }
  }

  Transformation Transformation::operator*(Transformation const& that) const {
    if (that.degree() != degree()) {
      throw InputError("cannot compose transformations of different degrees");
    }
    Transformation result;
    result._images.resize(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      result._images[i] = that._images[_images[i]];
    }
    return result;
  }

  std::size_t
  TransformationHash::operator()(Transformation const& t) const noexcept {
    std::size_t seed = t.degree();
    for (auto x : t.images()) {
      seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    }
    return seed;
  }

  Transformation parse_image_row(std::string_view text) {
    std::vector<point_type> images;
    std::size_t             pos = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InputError("malformed image row \"" + std::string(text)
                         + "\" at position " + std::to_string(pos + 1)
                         + ": expected a point");
      }
      std::size_t start = pos, value = 0;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = std::min<std::size_t>(value * 10 + (text[pos] - '0'), 1u << 30);
        ++pos;
      }
      if (value == 0) {
        throw InputError("malformed image row \"" + std::string(text)
                         + "\" at position " + std::to_string(start + 1)
                         + ": points are numbered from 1");
      }
      images.push_back(static_cast<point_type>(value - 1));
    }
    if (images.empty()) {
      throw InputError("empty image row");
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] >= images.size()) {
        throw InputError("malformed image row \"" + std::string(text)
                         + "\": image " + std::to_string(images[i] + 1)
                         + " exceeds the degree "
                         + std::to_string(images.size()));
      }
    }
    return Transformation(std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup
  FiniteSemigroup::from_transformations(std::vector<Transformation> const& gens,
                                        Limits const& limits) {
    for (auto const& g : gens) {
      if (g.degree() != gens.front().degree()) {
        throw InputError("generators have different degrees ("
                         + std::to_string(gens.front().degree()) + " and "
                         + std::to_string(g.degree()) + ")");
      }
    }
    std::vector<Transformation> elements;
    auto s = closure<Transformation,
                     std::multiplies<Transformation>,
                     TransformationHash>(
        gens, std::multiplies<Transformation>(), limits, &elements);
    s._transformations = std::move(elements);
    return s;
  }

  FiniteSemigroup FiniteSemigroup::from_table(
      std::vector<std::vector<std::size_t>> const& table,
      std::optional<std::vector<std::size_t>>      generators,
      Limits const&                                limits) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw InputError("empty Cayley table");
    }
    if (n > limits.semigroup_size) {
      throw CapacityError("Cayley table has " + std::to_string(n) + " rows",
                          limits.semigroup_size);
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        throw InputError("Cayley table row " + std::to_string(a + 1) + " has "
                         + std::to_string(table[a].size())
                         + " entries, expected " + std::to_string(n));
      }
      for (auto x : table[a]) {
        if (x >= n) {
          throw InputError("Cayley table row " + std::to_string(a + 1)
                           + " has an entry out of range");
        }
      }
    }
    auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
      if (table[table[a][b]][c] != table[a][table[b][c]]) {
        throw InputError("Cayley table is not associative: (ab)c != a(bc) for "
                         "a = "
                         + std::to_string(a + 1) + ", b = "
                         + std::to_string(b + 1) + ", c = "
                         + std::to_string(c + 1) + " (1-based)");
      }
    };
    if (n <= 200) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            check(a, b, c);
          }
        }
      }
    } else {
      std::mt19937_64                            rng(0);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int trial = 0; trial < 10'000; ++trial) {
        auto a = pick(rng), b = pick(rng), c = pick(rng);
        check(a, b, c);
      }
    }
    std::vector<std::size_t> gens;
    if (generators) {
      gens = *generators;
      for (auto g : gens) {
        if (g >= n) {
          throw InputError("generator " + std::to_string(g + 1)
                           + " is not an element of the table");
        }
      }
    } else {
      gens.resize(n);
      for (std::size_t a = 0; a < n; ++a) {
        gens[a] = a;
      }
    }
    std::vector<std::size_t> elements;
    auto                     mul = [&table](std::size_t a, std::size_t b) {
      return table[a][b];
    };
    auto s    = closure(gens, mul, limits, &elements);
    s._source = std::move(elements);
    return s;
  }

  FiniteSemigroup FiniteSemigroup::from_rzms(ReesZeroMatrixSemigroup const& r,
                                             Limits const& limits) {
    if (r.size() > limits.semigroup_size) {
      throw CapacityError("Rees 0-matrix semigroup has "
                              + std::to_string(r.size()) + " elements",
                          limits.semigroup_size);
    }
    std::vector<std::size_t> gens(r.size());
    for (std::size_t a = 0; a < gens.size(); ++a) {
      gens[a] = a;
    }
    auto mul = [&r](std::size_t a, std::size_t b) { return r.multiply(a, b); };
    return closure(gens, mul, limits);
  }

  void FiniteSemigroup::finish(Limits const& limits) {
    std::size_t const n = size(), k = _gens.size();
    std::size_t const npos = static_cast<std::size_t>(-1);
    _left.resize(n * k);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t const prefix
            = _parent[a] == npos ? _gens[j] : _left[_parent[a] * k + j];
        _left[a * k + j] = _right[prefix * k + _last[a]];
      }
    }
    if (n <= limits.table_elements) {
      _table.resize(n * n);
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t a = 0; a < n; ++a) {
          std::size_t const prefix
              = _parent[b] == npos ? a : _table[a * n + _parent[b]];
          _table[a * n + b] = _right[prefix * k + _last[b]];
        }
      }
    }
  }

  std::vector<std::size_t> FiniteSemigroup::generator_elements() const {
    std::vector<std::size_t> out = _gens;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::size_t FiniteSemigroup::product(std::size_t a, std::size_t b) const {
    if (!_table.empty()) {
      return _table[a * size() + b];
    }
    std::size_t x = a;
    for (auto j : word(b)) {
      x = right(x, j);
    }
    return x;
  }

  std::vector<std::size_t> FiniteSemigroup::word(std::size_t a) const {
    std::size_t const        npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> w;
    while (true) {
      w.push_back(_last[a]);
      if (_parent[a] == npos) {
        break;
      }
      a = _parent[a];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  std::size_t
  FiniteSemigroup::product_of_word(std::vector<std::size_t> const& w) const {
    if (w.empty()) {
      throw InputError("empty word");
    }
    std::size_t x = generator(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
      x = right(x, w[i]);
    }
    return x;
  }

  std::string FiniteSemigroup::label(std::size_t a) const {
    std::string out;
    for (auto j : word(a)) {
      out += "x" + std::to_string(j + 1);
    }
    return out;
  }

  VertexSet closure_in(FiniteSemigroup const& s, VertexSet const& gens) {
    auto mul = [&s](std::size_t a, std::size_t b) { return s.product(a, b); };
    return closure_of(s.size(), mul, gens);
  }

}  // namespace maxsub
