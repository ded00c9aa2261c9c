#ifndef MAXSUB_ERRORS_HPP_
#define MAXSUB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxsub {

  //! Malformed or inconsistent input: degree mismatch, non-associative table,
  //! non-regular J-class passed where a regular one is required, etc.
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A configured size bound was exceeded.
  class CapacityError : public std::runtime_error {
   public:
    CapacityError(std::string const& what, std::size_t bound)
        : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"),
          _message(what),
          _bound(bound) {}

    std::size_t bound() const noexcept {
      return _bound;
    }

    //! The same error with \p prefix prepended to the message.
    CapacityError in_context(std::string const& prefix) const {
      return CapacityError(prefix + _message, _bound);
    }

   private:
    std::string _message;
    std::size_t _bound;
  };

  //! Capacity bounds shared by the whole pipeline.  Every public entry point
  //! that can blow up takes one of these.
  struct Limits {
    std::size_t semigroup_size  = 100'000;
    std::size_t group_order     = 100'000;
    std::size_t subgroup_parent = 400;
    std::size_t clique_vertices = 64;
    std::size_t table_elements  = 10'000;
  };

}  // namespace maxsub

#endif  // MAXSUB_ERRORS_HPP_
