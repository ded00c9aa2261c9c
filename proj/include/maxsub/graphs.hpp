#ifndef MAXSUB_GRAPHS_HPP_
#define MAXSUB_GRAPHS_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace maxsub {

  using VertexSet = std::vector<std::size_t>;

  //! Undirected simple graph on vertices 0, ..., n - 1.
  class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : _adj(n) {}

    std::size_t vertex_count() const noexcept {
      return _adj.size();
    }
    std::size_t edge_count() const noexcept {
      return _edges;
    }

    //! Adds {u, v}; a repeated edge is ignored.  Loops are rejected.
    void add_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    //! Sorted.
    std::vector<std::size_t> const& neighbours(std::size_t v) const {
      return _adj[v];
    }

    //! Every edge once as (u, v) with u < v, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

   private:
    std::vector<std::vector<std::size_t>> _adj;
    std::size_t                           _edges = 0;
  };

  //! Directed graph without loops on vertices 0, ..., n - 1.
  class Digraph {
   public:
    Digraph() = default;
    explicit Digraph(std::size_t n) : _out(n), _in(n) {}

    std::size_t vertex_count() const noexcept {
      return _out.size();
    }
    std::size_t edge_count() const noexcept {
      return _edges;
    }

    void add_edge(std::size_t from, std::size_t to);
    bool has_edge(std::size_t from, std::size_t to) const;

    std::vector<std::size_t> const& out_neighbours(std::size_t v) const {
      return _out[v];
    }
    std::vector<std::size_t> const& in_neighbours(std::size_t v) const {
      return _in[v];
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

   private:
    std::vector<std::vector<std::size_t>> _out;
    std::vector<std::vector<std::size_t>> _in;
    std::size_t                           _edges = 0;
  };

  //! Quotient of a digraph by its strongly connected components.
  //!
  //! Components are numbered by their smallest vertex, so the numbering does
  //! not depend on traversal order.
  struct CondensedDigraph {
    Digraph                  base;
    std::vector<VertexSet>   components;    // each sorted
    std::vector<std::size_t> component_of;  // base vertex -> component
    Digraph                  dag;
    std::vector<int>         colour;  // per component, 0 unless set later

    std::size_t size() const noexcept {
      return components.size();
    }
  };

  //! Parts sorted internally and ordered by smallest vertex.
  std::vector<VertexSet> connected_components(Graph const& g);

  CondensedDigraph strongly_connected_condensation(Digraph const& d);

  //! Every maximal independent set of \p g, each sorted, in lexicographic
  //! order.  Throws CapacityError if g has more than \p bound vertices.
  std::vector<VertexSet> maximal_independent_sets(Graph const& g,
                                                  std::size_t  bound = 64);

  //! The maximal independent sets K of \p g that are closed under \p closure:
  //! u in K and u -> v imply v in K.  Branches that cannot end closed are cut
  //! during the search.
  std::vector<VertexSet>
  maximal_independent_sets_closed(Graph const&   g,
                                  Digraph const& closure,
                                  std::size_t    bound = 64);

  //! Components with no incoming edge, ascending.
  std::vector<std::size_t> sources(CondensedDigraph const& d);

  //! Components reachable from \p from, including itself, ascending.
  std::vector<std::size_t> reachable_set(CondensedDigraph const& d,
                                         std::size_t             from);

  //! Vertices reachable from \p from in \p d, including itself, ascending.
  std::vector<std::size_t> reachable_set(Digraph const& d, std::size_t from);

  //! DOT text with vertices and edges in sorted order.  Missing labels default
  //! to the vertex number; vertices flagged in \p filled are shaded.
  std::string to_dot(Graph const&                 g,
                     std::span<std::string const> labels = {},
                     std::vector<bool> const&     filled = {});
  std::string to_dot(Digraph const&               d,
                     std::span<std::string const> labels = {},
                     std::vector<bool> const&     filled = {});
  //! One node per component; components of colour 1 are shaded.
  std::string to_dot(CondensedDigraph const&      d,
                     std::span<std::string const> labels = {});

}  // namespace maxsub

#endif  // MAXSUB_GRAPHS_HPP_
