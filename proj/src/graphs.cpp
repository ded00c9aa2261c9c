#include "maxsub/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

namespace maxsub {

  namespace {
    using Bits = boost::dynamic_bitset<>;

    void insert_sorted(std::vector<std::size_t>& v, std::size_t x) {
      v.insert(std::lower_bound(v.begin(), v.end(), x), x);
    }

    bool contains_sorted(std::vector<std::size_t> const& v, std::size_t x) {
      return std::binary_search(v.begin(), v.end(), x);
    }

    void check_vertex(std::size_t v, std::size_t n) {
      if (v >= n) {
        throw InputError("vertex " + std::to_string(v) + " out of range [0, "
                         + std::to_string(n) + ")");
      }
    }

    VertexSet to_set(Bits const& b) {
      VertexSet out;
      for (auto v = b.find_first(); v != Bits::npos; v = b.find_next(v)) {
        out.push_back(v);
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Graph, Digraph
  ////////////////////////////////////////////////////////////////////////

  void Graph::add_edge(std::size_t u, std::size_t v) {
    check_vertex(u, _adj.size());
    check_vertex(v, _adj.size());
    if (u == v) {
      throw InputError("loops are not allowed (vertex " + std::to_string(u)
                       + ")");
    }
    if (contains_sorted(_adj[u], v)) {
      return;
    }
    insert_sorted(_adj[u], v);
    insert_sorted(_adj[v], u);
    ++_edges;
  }

  bool Graph::has_edge(std::size_t u, std::size_t v) const {
    return u < _adj.size() && contains_sorted(_adj[u], v);
  }

  std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < _adj.size(); ++u) {
      for (auto v : _adj[u]) {
        if (u < v) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  void Digraph::add_edge(std::size_t from, std::size_t to) {
    check_vertex(from, _out.size());
    check_vertex(to, _out.size());
    if (from == to) {
      throw InputError("loops are not allowed (vertex " + std::to_string(from)
                       + ")");
    }
    if (contains_sorted(_out[from], to)) {
      return;
    }
    insert_sorted(_out[from], to);
    insert_sorted(_in[to], from);
    ++_edges;
  }

  bool Digraph::has_edge(std::size_t from, std::size_t to) const {
    return from < _out.size() && contains_sorted(_out[from], to);
  }

  std::vector<std::pair<std::size_t, std::size_t>> Digraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < _out.size(); ++u) {
      for (auto v : _out[u]) {
        out.emplace_back(u, v);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Components
  ////////////////////////////////////////////////////////////////////////

  std::vector<VertexSet> connected_components(Graph const& g) {
    std::size_t const      n = g.vertex_count();
    std::vector<bool>      seen(n, false);
    std::vector<VertexSet> result;
    for (std::size_t s = 0; s < n; ++s) {
      if (seen[s]) {
        continue;
      }
      VertexSet               part;
      std::deque<std::size_t> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        part.push_back(u);
        for (auto v : g.neighbours(u)) {
          if (!seen[v]) {
            seen[v] = true;
            queue.push_back(v);
          }
        }
      }
      std::sort(part.begin(), part.end());
      result.push_back(std::move(part));
    }
    return result;
  }

  CondensedDigraph strongly_connected_condensation(Digraph const& d) {
    // Iterative Tarjan.
    std::size_t const        n         = d.vertex_count();
    std::size_t const        undefined = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, undefined), low(n, 0), scc(n, undefined);
    std::vector<bool>        on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::pair<std::size_t, std::size_t>> call;  // vertex, next edge
    std::size_t counter = 0, nr_scc = 0;

    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != undefined) {
        continue;
      }
      call.emplace_back(root, 0);
      while (!call.empty()) {
        auto& [v, next] = call.back();
        if (next == 0 && index[v] == undefined) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
        }
        auto const& out = d.out_neighbours(v);
        if (next < out.size()) {
          auto w = out[next++];
          if (index[w] == undefined) {
            call.emplace_back(w, 0);
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], index[w]);
          }
          continue;
        }
        if (low[v] == index[v]) {
          std::size_t w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            scc[w]      = nr_scc;
          } while (w != v);
          ++nr_scc;
        }
        auto finished = v;
        call.pop_back();
        if (!call.empty()) {
          auto parent = call.back().first;
          low[parent] = std::min(low[parent], low[finished]);
        }
      }
    }

    // Renumber by smallest vertex.
    std::vector<std::size_t> renumber(nr_scc, undefined);
    std::size_t              next_id = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (renumber[scc[v]] == undefined) {
        renumber[scc[v]] = next_id++;
      }
    }

    CondensedDigraph result;
    result.base = d;
    result.components.resize(nr_scc);
    result.component_of.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto c                 = renumber[scc[v]];
      result.component_of[v] = c;
      result.components[c].push_back(v);
    }
    result.dag = Digraph(nr_scc);
    for (auto const& [u, v] : d.edges()) {
      auto cu = result.component_of[u], cv = result.component_of[v];
      if (cu != cv) {
        result.dag.add_edge(cu, cv);
      }
    }
    result.colour.assign(nr_scc, 0);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bron–Kerbosch on the complement
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class IndependentSets {
     public:
      IndependentSets(Graph const& g, Digraph const* closure)
          : _n(g.vertex_count()), _nbr(_n, Bits(_n)), _desc() {
        // _nbr is adjacency in the complement of g.
        for (std::size_t u = 0; u < _n; ++u) {
          _nbr[u].set();
          _nbr[u].reset(u);
          for (auto v : g.neighbours(u)) {
            _nbr[u].reset(v);
          }
        }
        if (closure != nullptr) {
          if (closure->vertex_count() != _n) {
            throw InputError("closure digraph has "
                             + std::to_string(closure->vertex_count())
                             + " vertices, graph has " + std::to_string(_n));
          }
          _desc.assign(_n, Bits(_n));
          for (std::size_t u = 0; u < _n; ++u) {
            for (auto v : reachable_set(*closure, u)) {
              _desc[u].set(v);
            }
          }
        }
      }

      std::vector<VertexSet> run() {
        // Degeneracy order of the complement graph.
        std::vector<std::size_t> order;
        std::vector<std::size_t> degree(_n);
        Bits                     removed(_n);
        for (std::size_t u = 0; u < _n; ++u) {
          degree[u] = _nbr[u].count();
        }
        for (std::size_t step = 0; step < _n; ++step) {
          std::size_t best = _n;
          for (std::size_t u = 0; u < _n; ++u) {
            if (!removed[u] && (best == _n || degree[u] < degree[best])) {
              best = u;
            }
          }
          removed.set(best);
          order.push_back(best);
          for (auto v = _nbr[best].find_first(); v != Bits::npos;
               v      = _nbr[best].find_next(v)) {
            if (!removed[v]) {
              --degree[v];
            }
          }
        }

        Bits later(_n), earlier(_n);
        later.set();
        for (auto v : order) {
          later.reset(v);
          Bits r(_n);
          r.set(v);
          Bits need = _desc.empty() ? Bits(_n) : _desc[v];
          expand(r, _nbr[v] & later, _nbr[v] & earlier, need);
          earlier.set(v);
        }
        std::sort(_found.begin(), _found.end());
        return std::move(_found);
      }

     private:
      void expand(Bits const& r, Bits p, Bits x, Bits const& need) {
        if (!_desc.empty() && !need.is_subset_of(r | p)) {
          return;
        }
        if (p.none()) {
          if (x.none() && (_desc.empty() || need.is_subset_of(r))) {
            _found.push_back(to_set(r));
          }
          return;
        }
        // Tomita pivot: maximise |P ∩ N(u)| over u in P ∪ X.
        Bits        px    = p | x;
        std::size_t pivot = px.find_first();
        std::size_t best  = 0;
        for (auto u = pivot; u != Bits::npos; u = px.find_next(u)) {
          auto c = (p & _nbr[u]).count();
          if (c >= best) {
            best  = c;
            pivot = u;
          }
        }
        Bits candidates = p - _nbr[pivot];
        for (auto v = candidates.find_first(); v != Bits::npos;
             v      = candidates.find_next(v)) {
          Bits r2 = r;
          r2.set(v);
          expand(r2,
                 p & _nbr[v],
                 x & _nbr[v],
                 _desc.empty() ? need : (need | _desc[v]));
          p.reset(v);
          x.set(v);
        }
      }

      std::size_t            _n;
      std::vector<Bits>      _nbr;
      std::vector<Bits>      _desc;
      std::vector<VertexSet> _found;
    };

    void check_bound(Graph const& g, std::size_t bound) {
      if (g.vertex_count() > bound) {
        throw CapacityError("independent-set search on "
                                + std::to_string(g.vertex_count())
                                + " vertices",
                            bound);
      }
    }
  }  // namespace

  std::vector<VertexSet> maximal_independent_sets(Graph const& g,
                                                  std::size_t  bound) {
    check_bound(g, bound);
    if (g.vertex_count() == 0) {
      return {VertexSet{}};
    }
    return IndependentSets(g, nullptr).run();
  }

  std::vector<VertexSet>
  maximal_independent_sets_closed(Graph const&   g,
                                  Digraph const& closure,
                                  std::size_t    bound) {
    check_bound(g, bound);
    if (g.vertex_count() == 0) {
      return {VertexSet{}};
    }
    return IndependentSets(g, &closure).run();
  }

  ////////////////////////////////////////////////////////////////////////
  // Sources and reachability
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> sources(CondensedDigraph const& d) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < d.size(); ++c) {
      if (d.dag.in_neighbours(c).empty()) {
        out.push_back(c);
      }
    }
    return out;
  }

  std::vector<std::size_t> reachable_set(Digraph const& d, std::size_t from) {
    check_vertex(from, d.vertex_count());
    std::vector<bool>        seen(d.vertex_count(), false);
    std::vector<std::size_t> stack{from}, out;
    seen[from] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      out.push_back(u);
      for (auto v : d.out_neighbours(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> reachable_set(CondensedDigraph const& d,
                                         std::size_t             from) {
    return reachable_set(d.dag, from);
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string quoted(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }

    template <typename Edges>
    std::string dot(char const*                  header,
                    char const*                  arrow,
                    std::size_t                  n,
                    Edges const&                 edges,
                    std::span<std::string const> labels,
                    std::vector<bool> const&     filled) {
      std::ostringstream out;
      out << header << " {\n";
      for (std::size_t v = 0; v < n; ++v) {
        out << "  " << v << " [label="
            << quoted(v < labels.size() ? labels[v] : std::to_string(v));
        if (v < filled.size() && filled[v]) {
          out << ", style=filled, fillcolor=lightgrey";
        }
        out << "];\n";
      }
      for (auto const& [u, v] : edges) {
        out << "  " << u << ' ' << arrow << ' ' << v << ";\n";
      }
      out << "}\n";
      return out.str();
    }
  }  // namespace

  std::string to_dot(Graph const&                 g,
                     std::span<std::string const> labels,
                     std::vector<bool> const&     filled) {
    return dot("graph", "--", g.vertex_count(), g.edges(), labels, filled);
  }

  std::string to_dot(Digraph const&               d,
                     std::span<std::string const> labels,
                     std::vector<bool> const&     filled) {
    return dot("digraph", "->", d.vertex_count(), d.edges(), labels, filled);
  }

  std::string to_dot(CondensedDigraph const&      d,
                     std::span<std::string const> labels) {
    std::vector<bool> filled(d.size());
    for (std::size_t c = 0; c < d.size(); ++c) {
      filled[c] = d.colour[c] == 1;
    }
    return to_dot(d.dag, labels, filled);
  }

}  // namespace maxsub
