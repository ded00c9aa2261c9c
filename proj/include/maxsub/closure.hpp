#ifndef MAXSUB_CLOSURE_HPP_
#define MAXSUB_CLOSURE_HPP_

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace maxsub {

  //! Subsemigroup closure over elements 0, ..., n - 1 of a semigroup with
  //! multiplication \p Mul, grown one generator at a time.
  //!
  //! Adding x to a closed set M generated by Y only needs the new words
  //! u x v with u in M or empty: seed with x and every m x, then multiply new
  //! elements on the right by Y and x.
  template <typename Mul>
  class IncrementalClosure {
   public:
    IncrementalClosure(std::size_t n, Mul mul)
        : _mul(std::move(mul)), _in(n, false) {}

    bool contains(std::size_t x) const {
      return _in[x];
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    //! Unsorted, in discovery order.
    std::vector<std::size_t> const& members() const noexcept {
      return _members;
    }

    std::vector<std::size_t> const& generators() const noexcept {
      return _gens;
    }

    //! Adds \p x as a generator and closes.  A no-op if x is already present.
    void add(std::size_t x) {
      if (_in[x]) {
        return;
      }
      _gens.push_back(x);
      std::size_t const old_size = _members.size();
      push(x);
      for (std::size_t i = 0; i < old_size; ++i) {
        push(_mul(_members[i], x));
      }
      for (std::size_t i = old_size; i < _members.size(); ++i) {
        for (auto y : _gens) {
          push(_mul(_members[i], y));
        }
      }
    }

   private:
    void push(std::size_t y) {
      if (!_in[y]) {
        _in[y] = true;
        _members.push_back(y);
      }
    }

    Mul                      _mul;
    std::vector<bool>        _in;
    std::vector<std::size_t> _members;
    std::vector<std::size_t> _gens;
  };

  //! Sorted closure of \p gens.
  template <typename Mul>
  std::vector<std::size_t> closure_of(std::size_t                  n,
                                      Mul const&                   mul,
                                      std::span<std::size_t const> gens) {
    std::vector<bool>        in(n, false);
    std::vector<std::size_t> out;
    for (auto g : gens) {
      if (!in[g]) {
        in[g] = true;
        out.push_back(g);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto g : gens) {
        auto y = mul(out[i], g);
        if (!in[y]) {
          in[y] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! Walks \p members in order and keeps each one not yet generated by the
  //! earlier picks.  The result generates \p members provided it is closed.
  template <typename Mul>
  std::vector<std::size_t>
  greedy_generators(std::size_t                  n,
                    Mul const&                   mul,
                    std::span<std::size_t const> members) {
    IncrementalClosure<Mul const&> c(n, mul);
    for (auto x : members) {
      c.add(x);
    }
    return c.generators();
  }

}  // namespace maxsub

#endif  // MAXSUB_CLOSURE_HPP_
