#ifndef MAXSUB_MAX_SUBSEMIGROUPS_HPP_
#define MAXSUB_MAX_SUBSEMIGROUPS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graphs.hpp"
#include "rees_matrix.hpp"
#include "semigroup.hpp"

namespace maxsub {

  //! The digraphs Γ_L, Γ_R and graphs Δ, Θ attached to a regular J-class.
  //!
  //! Vertex k of gamma_l.base is the L-class l_classes[k], and likewise for
  //! gamma_r.  Δ and Θ have the components of Γ_L as vertices 0..nL-1 and
  //! those of Γ_R as nL..nL+nR-1.
  struct JClassGraphs {
    std::size_t              j_class;
    std::vector<std::size_t> l_classes;
    std::vector<std::size_t> r_classes;
    CondensedDigraph         gamma_l;
    CondensedDigraph         gamma_r;
    Graph                    delta;
    Graph                    theta;
    VertexSet                xprime_in_j;  // <X'> ∩ J, sorted

    std::size_t nr_l_components() const noexcept {
      return gamma_l.size();
    }
    std::size_t nr_r_components() const noexcept {
      return gamma_r.size();
    }
  };

  enum class MaxType {
    MaxTrivial,
    MaxR3,
    MaxR4,
    MaxR5,
    MaxR6,
    S1,
    S2,
    S3,
    S4,
    S5,
    S6
  };

  std::string              to_string(MaxType t);
  std::optional<MaxType>   max_type_from_string(std::string const& s);

  struct MaximalSubsemigroup {
    MaxType     type;
    std::size_t j_class;
    VertexSet   generators;
    VertexSet   members;  // sorted
    // S3-S5: the L- and R-classes of J kept in M.
    std::vector<std::size_t> a_classes;
    std::vector<std::size_t> b_classes;
    // Lifted principal-factor result for MaxR3-MaxR6 and S2.
    std::optional<RzmsMaxSubsemigroup> lifted;
    //! The constructed generating set failed to regenerate the members, so
    //! the members themselves are used as generators.
    bool fallback_generators = false;

    std::size_t size() const noexcept {
      return members.size();
    }
  };

  struct MaxOptions {
    Limits                       limits;
    std::vector<MaxType>         types;  // empty means all
    std::optional<std::uint64_t> shuffle_seed;
  };

  //! <X'> ∩ J, computed by closing X' under right multiplication while
  //! discarding anything that drops below or beside J.
  VertexSet xprime_closure_in_j(FiniteSemigroup const& s,
                                GreensStructure const& gs,
                                std::size_t            j_class,
                                VertexSet const&       xp);

  //! Throws InputError if J is not regular.
  JClassGraphs build_jclass_graphs(FiniteSemigroup const& s,
                                   GreensStructure const& gs,
                                   std::size_t            j_class,
                                   VertexSet const&       xp);

  std::optional<MaximalSubsemigroup> max_s1(FiniteSemigroup const& s,
                                            GreensStructure const& gs,
                                            std::size_t            j_class,
                                            VertexSet const&       xp);

  std::vector<MaximalSubsemigroup> max_s2(FiniteSemigroup const&    s,
                                          GreensStructure const&    gs,
                                          std::size_t               j_class,
                                          VertexSet const&          xp,
                                          PrincipalFactorIso const& pfi,
                                          MaxOptions const&         options = {});

  std::vector<MaximalSubsemigroup> max_s3(FiniteSemigroup const& s,
                                          GreensStructure const& gs,
                                          std::size_t            j_class,
                                          VertexSet const&       xp,
                                          JClassGraphs const&    graphs,
                                          Limits const&          limits = {});

  std::vector<MaximalSubsemigroup>
  max_s4_s5(FiniteSemigroup const&                  s,
            GreensStructure const&                  gs,
            std::size_t                             j_class,
            VertexSet const&                        xp,
            JClassGraphs const&                     graphs,
            std::vector<MaximalSubsemigroup> const& s3_results);

  std::optional<MaximalSubsemigroup> max_s6(FiniteSemigroup const& s,
                                            GreensStructure const& gs,
                                            std::size_t            j_class,
                                            VertexSet const&       xp,
                                            JClassGraphs const&    graphs,
                                            bool                   found_any);

  //! Every maximal subsemigroup of \p s, sorted by J-class, type and member
  //! set, without duplicates.
  std::vector<MaximalSubsemigroup> max_subsemigroups(FiniteSemigroup const& s,
                                                     MaxOptions const& options
                                                     = {});

  //! Same, reusing an existing Green's structure.
  std::vector<MaximalSubsemigroup> max_subsemigroups(FiniteSemigroup const& s,
                                                     GreensStructure const& gs,
                                                     MaxOptions const& options);

}  // namespace maxsub

#endif  // MAXSUB_MAX_SUBSEMIGROUPS_HPP_
