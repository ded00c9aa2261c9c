#ifndef MAXSUB_CLI_HPP_
#define MAXSUB_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "max_subsemigroups.hpp"
#include "rees_matrix.hpp"
#include "semigroup.hpp"

namespace maxsub::cli {

  //! A parsed input file.  For kind "rzms" both the Rees 0-matrix semigroup
  //! and its enumeration are kept; element ids agree between the two.
  struct LoadedInput {
    std::string                              kind;
    nlohmann::json                           echo;
    std::shared_ptr<FiniteSemigroup>         semigroup;
    std::shared_ptr<ReesZeroMatrixSemigroup> rzms;

    //! Human-facing name of an element.
    std::string label(std::size_t a) const;
  };

  //! Parses the JSON text of an input file.  JSON syntax errors are reported
  //! as InputError with line and column.
  LoadedInput load_input(std::string const& text, Limits const& limits = {});

  struct JClassSummary {
    std::size_t              id = 0;  // 1-based
    std::size_t              size = 0;
    std::size_t              nr_l_classes = 0;
    std::size_t              nr_r_classes = 0;
    std::size_t              h_class_size = 0;
    std::size_t              nr_idempotents = 0;
    bool                     regular = false;
    bool                     maximal = false;
    bool                     meets_generators = false;
    std::string              representative;
    std::vector<std::size_t> covers;  // J-classes immediately below, 1-based

    bool operator==(JClassSummary const&) const = default;
  };

  struct ResultEntry {
    std::string              type;
    std::size_t              j_class = 0;  // 1-based
    std::size_t              size = 0;
    std::vector<std::size_t> generators;  // 1-based element ids
    std::vector<std::string> generator_labels;
    nlohmann::json           witness = nlohmann::json::object();
    std::optional<bool>        verified;
    std::optional<std::string> diagnostic;

    bool operator==(ResultEntry const&) const = default;
  };

  struct ResultDocument {
    int                                       schema = 1;
    std::string                               command;
    nlohmann::json                            input;
    std::size_t                               size = 0;
    std::vector<JClassSummary>                j_classes;
    std::optional<std::vector<ResultEntry>>   maximal_subsemigroups;
    std::map<std::string, std::size_t>        counts;
    std::optional<std::map<std::string, double>> timings;

    bool operator==(ResultDocument const&) const = default;
  };

  void to_json(nlohmann::json& j, JClassSummary const& s);
  void from_json(nlohmann::json const& j, JClassSummary& s);
  void to_json(nlohmann::json& j, ResultEntry const& e);
  void from_json(nlohmann::json const& j, ResultEntry& e);
  void to_json(nlohmann::json& j, ResultDocument const& d);
  void from_json(nlohmann::json const& j, ResultDocument& d);

  struct MaximalFlags {
    Limits                       limits;
    std::vector<std::string>     types;  // empty means all
    bool                         verify  = false;
    bool                         timings = false;
    std::optional<std::uint64_t> shuffle_seed;
  };

  ResultDocument cmd_maximal(LoadedInput const& input, MaximalFlags const& flags);
  ResultDocument cmd_analyze(LoadedInput const& input);

  //! \p graph is one of gh, gamma-l, gamma-r, delta, theta; \p j_class is
  //! 1-based.  Throws InputError when the graph does not apply.
  std::string cmd_dot(LoadedInput const&         input,
                      std::string const&         graph,
                      std::optional<std::size_t> j_class);

  //! Runs the command line; returns the exit code (0 ok, 1 input error,
  //! 2 capacity exceeded).
  int run(int argc, char const* const* argv, std::istream& in,
          std::ostream& out, std::ostream& err);

}  // namespace maxsub::cli

#endif  // MAXSUB_CLI_HPP_
