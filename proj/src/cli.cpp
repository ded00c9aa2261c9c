#include "maxsub/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "maxsub/oracle.hpp"

namespace maxsub::cli {

  using nlohmann::json;

  ////////////////////////////////////////////////////////////////////////
  // Input
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string line_column(std::string const& text, std::size_t byte) {
      std::size_t line = 1, column = 1;
      for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      return "line " + std::to_string(line) + ", column "
             + std::to_string(column);
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw InputError(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    std::size_t positive(json const& j, std::string const& where) {
      if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw InputError(where + ": expected a positive integer");
      }
      return j.get<std::size_t>();
    }

    std::string text_of(json const& j, std::string const& where) {
      if (!j.is_string()) {
        throw InputError(where + ": expected a string");
      }
      return j.get<std::string>();
    }

    // Re-raises an InputError with the JSON location in front.
    template <typename F>
    auto at(std::string const& where, F&& f) {
      try {
        return f();
      } catch (InputError const& e) {
        throw InputError(where + ": " + e.what());
      }
    }

    Transformation transformation_of(json const& j, std::string const& where) {
      if (j.is_string()) {
        return at(where, [&] { return parse_image_row(j.get<std::string>()); });
      }
      if (!j.is_array() || j.empty()) {
        throw InputError(where
                         + ": expected an image row string or an array of "
                           "points");
      }
      std::vector<point_type> images;
      for (std::size_t k = 0; k < j.size(); ++k) {
        auto p = positive(j[k], where + "[" + std::to_string(k) + "]");
        if (p > j.size()) {
          throw InputError(where + "[" + std::to_string(k) + "]: image "
                           + std::to_string(p) + " exceeds the degree "
                           + std::to_string(j.size()));
        }
        images.push_back(static_cast<point_type>(p - 1));
      }
      return Transformation(std::move(images));
    }

    LoadedInput load_transformations(json const& doc, Limits const& limits) {
      auto const& gens = field(doc, "generators");
      if (!gens.is_array() || gens.empty()) {
        throw InputError("generators: expected a non-empty array");
      }
      std::vector<Transformation> ts;
      for (std::size_t k = 0; k < gens.size(); ++k) {
        ts.push_back(
            transformation_of(gens[k], "generators[" + std::to_string(k) + "]"));
      }
      LoadedInput in;
      in.semigroup = std::make_shared<FiniteSemigroup>(
          FiniteSemigroup::from_transformations(ts, limits));
      return in;
    }

    LoadedInput load_table(json const& doc, Limits const& limits) {
      auto const& rows = field(doc, "table");
      if (!rows.is_array() || rows.empty()) {
        throw InputError("table: expected a non-empty array of rows");
      }
      std::vector<std::vector<std::size_t>> table;
      for (std::size_t a = 0; a < rows.size(); ++a) {
        std::string where = "table[" + std::to_string(a) + "]";
        if (!rows[a].is_array()) {
          throw InputError(where + ": expected an array");
        }
        table.emplace_back();
        for (std::size_t b = 0; b < rows[a].size(); ++b) {
          auto x = positive(rows[a][b], where + "[" + std::to_string(b) + "]");
          table.back().push_back(x - 1);
        }
      }
      std::optional<std::vector<std::size_t>> gens;
      if (doc.contains("generators")) {
        gens.emplace();
        auto const& g = doc.at("generators");
        if (!g.is_array() || g.empty()) {
          throw InputError("generators: expected a non-empty array");
        }
        for (std::size_t k = 0; k < g.size(); ++k) {
          gens->push_back(
              positive(g[k], "generators[" + std::to_string(k) + "]") - 1);
        }
      }
      LoadedInput in;
      in.semigroup = std::make_shared<FiniteSemigroup>(
          FiniteSemigroup::from_table(table, gens, limits));
      return in;
    }

    LoadedInput load_rzms(json const& doc, Limits const& limits) {
      auto i_size      = positive(field(doc, "i_size"), "i_size");
      auto lambda_size = positive(field(doc, "lambda_size"), "lambda_size");
      auto degree      = positive(field(doc, "degree"), "degree");
      auto const& group_j = field(doc, "group");
      if (!group_j.is_array() || group_j.empty()) {
        throw InputError("group: expected a non-empty array of permutations");
      }
      std::vector<Permutation> gens;
      for (std::size_t k = 0; k < group_j.size(); ++k) {
        std::string where = "group[" + std::to_string(k) + "]";
        auto        s     = text_of(group_j[k], where);
        gens.push_back(at(where, [&] { return parse_cycles(s, degree); }));
      }
      PermGroup group = at("group", [&] {
        return PermGroup(degree, std::move(gens));
      });
      if (group.order() > limits.group_order) {
        throw CapacityError("group has " + std::to_string(group.order())
                                + " elements",
                            limits.group_order);
      }

      auto const& rows = field(doc, "matrix");
      if (!rows.is_array() || rows.size() != lambda_size) {
        throw InputError("matrix: expected " + std::to_string(lambda_size)
                         + " rows, one per element of Λ");
      }
      std::vector<std::vector<std::optional<Permutation>>> matrix;
      for (std::size_t l = 0; l < lambda_size; ++l) {
        std::string where = "matrix[" + std::to_string(l) + "]";
        if (!rows[l].is_array() || rows[l].size() != i_size) {
          throw InputError(where + ": expected " + std::to_string(i_size)
                           + " entries, one per element of I");
        }
        matrix.emplace_back();
        for (std::size_t i = 0; i < i_size; ++i) {
          std::string w = where + "[" + std::to_string(i) + "]";
          auto        s = text_of(rows[l][i], w);
          if (s == "0") {
            matrix.back().emplace_back();
          } else {
            matrix.back().emplace_back(
                at(w, [&] { return parse_cycles(s, degree); }));
          }
        }
      }
      auto r = at("matrix", [&] {
        return ReesZeroMatrixSemigroup::from_permutations(
            i_size, lambda_size, group, matrix);
      });
      if (!r.is_regular()) {
        throw InputError("matrix: every row and column needs a non-zero entry");
      }
      if (r.size() > limits.semigroup_size) {
        throw CapacityError("Rees 0-matrix semigroup has "
                                + std::to_string(r.size()) + " elements",
                            limits.semigroup_size);
      }
      LoadedInput in;
      in.rzms      = std::make_shared<ReesZeroMatrixSemigroup>(std::move(r));
      in.semigroup = std::make_shared<FiniteSemigroup>(
          FiniteSemigroup::from_rzms(*in.rzms, limits));
      return in;
    }

  }  // namespace

  LoadedInput load_input(std::string const& text, Limits const& limits) {
    json doc;
    try {
      doc = json::parse(text);
    } catch (json::parse_error const& e) {
      std::string what = e.what();
      auto        pos  = what.find("syntax error");
      throw InputError("JSON syntax error at " + line_column(text, e.byte - 1)
                       + (pos == std::string::npos ? ""
                                                   : ": " + what.substr(pos)));
    }
    auto kind = text_of(field(doc, "kind"), "kind");
    LoadedInput in;
    if (kind == "transformations") {
      in = load_transformations(doc, limits);
    } else if (kind == "cayley_table") {
      in = load_table(doc, limits);
    } else if (kind == "rzms") {
      in = load_rzms(doc, limits);
    } else {
      throw InputError("kind: unknown kind \"" + kind
                       + "\"; expected transformations, cayley_table or rzms");
    }
    in.kind = kind;
    in.echo = std::move(doc);
    return in;
  }

  std::string LoadedInput::label(std::size_t a) const {
    if (rzms) {
      return rzms->to_string(a);
    }
    if (kind == "cayley_table") {
      return std::to_string(semigroup->source_id(a) + 1);
    }
    return semigroup->label(a);
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON conversion
  ////////////////////////////////////////////////////////////////////////

  void to_json(json& j, JClassSummary const& s) {
    j = json{{"id", s.id},
             {"size", s.size},
             {"nr_l_classes", s.nr_l_classes},
             {"nr_r_classes", s.nr_r_classes},
             {"h_class_size", s.h_class_size},
             {"nr_idempotents", s.nr_idempotents},
             {"regular", s.regular},
             {"maximal", s.maximal},
             {"meets_generators", s.meets_generators},
             {"representative", s.representative},
             {"covers", s.covers}};
  }

  void from_json(json const& j, JClassSummary& s) {
    j.at("id").get_to(s.id);
    j.at("size").get_to(s.size);
    j.at("nr_l_classes").get_to(s.nr_l_classes);
    j.at("nr_r_classes").get_to(s.nr_r_classes);
    j.at("h_class_size").get_to(s.h_class_size);
    j.at("nr_idempotents").get_to(s.nr_idempotents);
    j.at("regular").get_to(s.regular);
    j.at("maximal").get_to(s.maximal);
    j.at("meets_generators").get_to(s.meets_generators);
    j.at("representative").get_to(s.representative);
    j.at("covers").get_to(s.covers);
  }

  void to_json(json& j, ResultEntry const& e) {
    j = json{{"type", e.type},
             {"j_class", e.j_class},
             {"size", e.size},
             {"generators", e.generators},
             {"generator_labels", e.generator_labels},
             {"witness", e.witness}};
    if (e.verified) {
      j["verified"] = *e.verified;
    }
    if (e.diagnostic) {
      j["diagnostic"] = *e.diagnostic;
    }
  }

  void from_json(json const& j, ResultEntry& e) {
    j.at("type").get_to(e.type);
    j.at("j_class").get_to(e.j_class);
    j.at("size").get_to(e.size);
    j.at("generators").get_to(e.generators);
    j.at("generator_labels").get_to(e.generator_labels);
    e.witness = j.at("witness");
    e.verified.reset();
    e.diagnostic.reset();
    if (j.contains("verified")) {
      e.verified = j.at("verified").get<bool>();
    }
    if (j.contains("diagnostic")) {
      e.diagnostic = j.at("diagnostic").get<std::string>();
    }
  }

  void to_json(json& j, ResultDocument const& d) {
    j = json{{"schema", d.schema},
             {"command", d.command},
             {"input", d.input},
             {"size", d.size},
             {"j_classes", d.j_classes}};
    if (d.maximal_subsemigroups) {
      j["maximal_subsemigroups"] = *d.maximal_subsemigroups;
      j["counts"]                = d.counts;
    }
    if (d.timings) {
      j["timings"] = *d.timings;
    }
  }

  void from_json(json const& j, ResultDocument& d) {
    j.at("schema").get_to(d.schema);
    if (d.schema != 1) {
      throw InputError("unsupported schema " + std::to_string(d.schema));
    }
    j.at("command").get_to(d.command);
    d.input = j.at("input");
    j.at("size").get_to(d.size);
    j.at("j_classes").get_to(d.j_classes);
    d.maximal_subsemigroups.reset();
    d.counts.clear();
    d.timings.reset();
    if (j.contains("maximal_subsemigroups")) {
      d.maximal_subsemigroups
          = j.at("maximal_subsemigroups").get<std::vector<ResultEntry>>();
      j.at("counts").get_to(d.counts);
    }
    if (j.contains("timings")) {
      d.timings = j.at("timings").get<std::map<std::string, double>>();
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Clock = std::chrono::steady_clock;

    double since(Clock::time_point t) {
      return std::chrono::duration<double>(Clock::now() - t).count();
    }

    std::vector<JClassSummary> summarise(LoadedInput const&     input,
                                         GreensStructure const& gs) {
      auto const& s = *input.semigroup;
      std::vector<bool> meets(gs.nr_j_classes(), false);
      for (auto x : s.generator_elements()) {
        meets[gs.j_class[x]] = true;
      }
      std::vector<JClassSummary> out;
      for (std::size_t j = 0; j < gs.nr_j_classes(); ++j) {
        auto const&   J = gs.j_members[j];
        JClassSummary c;
        c.id   = j + 1;
        c.size = J.size();
        std::vector<std::size_t> ls, rs;
        for (auto a : J) {
          ls.push_back(gs.l_class[a]);
          rs.push_back(gs.r_class[a]);
          c.nr_idempotents += gs.is_idempotent[a] ? 1 : 0;
        }
        std::sort(ls.begin(), ls.end());
        std::sort(rs.begin(), rs.end());
        c.nr_l_classes = static_cast<std::size_t>(
            std::unique(ls.begin(), ls.end()) - ls.begin());
        c.nr_r_classes = static_cast<std::size_t>(
            std::unique(rs.begin(), rs.end()) - rs.begin());
        c.h_class_size     = gs.h_members[gs.h_class[J.front()]].size();
        c.regular          = gs.regular_j[j];
        c.maximal          = gs.is_maximal(j);
        c.meets_generators = meets[j];
        c.representative   = input.label(J.front());
        // Hasse covers: successors not reachable through another successor.
        auto const& succ = gs.j_order.out_neighbours(j);
        for (auto d : succ) {
          bool indirect = false;
          for (auto e : succ) {
            if (e != d) {
              auto r = reachable_set(gs.j_order, e);
              if (std::binary_search(r.begin(), r.end(), d)) {
                indirect = true;
                break;
              }
            }
          }
          if (!indirect) {
            c.covers.push_back(d + 1);
          }
        }
        std::sort(c.covers.begin(), c.covers.end());
        out.push_back(std::move(c));
      }
      return out;
    }

    std::string lambda_label(std::size_t l) {
      return "-" + std::to_string(l + 1);
    }

    json rzms_witness(RzmsMaxSubsemigroup const& m, PermGroup const& group) {
      json w = json::object();
      switch (m.type) {
        case RzmsType::R1:
        case RzmsType::R2:
          if (m.removed) {
            w["removed"] = *m.removed + 1;
          }
          break;
        case RzmsType::R3:
          w["removed_lambda"] = lambda_label(*m.removed);
          break;
        case RzmsType::R4:
          w["removed_i"] = std::to_string(*m.removed + 1);
          break;
        case RzmsType::R5: {
          std::vector<std::string> is, ls;
          for (auto i : m.x_indices) {
            is.push_back(std::to_string(i + 1));
          }
          for (auto l : m.y_indices) {
            ls.push_back(lambda_label(l));
          }
          w["i"]      = is;
          w["lambda"] = ls;
          break;
        }
        case RzmsType::R6: {
          auto classes = maximal_subgroup_classes(group);
          auto const& V = classes.at(m.subgroup_class).representative;
          std::vector<std::string> gens, tuple;
          for (auto const& g : V.generators()) {
            gens.push_back(to_cycle_string(g));
          }
          for (auto const& t : m.coset_tuple) {
            tuple.push_back(to_cycle_string(t));
          }
          w["subgroup_class"]      = m.subgroup_class + 1;
          w["subgroup_order"]      = V.order();
          w["subgroup_generators"] = gens;
          w["coset_tuple"]         = tuple;
          break;
        }
      }
      return w;
    }

    std::string class_label(LoadedInput const&           input,
                            std::vector<VertexSet> const& members,
                            char                          letter,
                            std::size_t                   id) {
      return std::string(1, letter) + "_" + input.label(members[id].front());
    }

    json s_witness(LoadedInput const&         input,
                   GreensStructure const&     gs,
                   MaximalSubsemigroup const& m) {
      json w = json::object();
      if (m.type == MaxType::S3 || m.type == MaxType::S4) {
        std::vector<std::string> a;
        for (auto id : m.a_classes) {
          a.push_back(class_label(input, gs.l_members, 'L', id));
        }
        w["l_classes"] = a;
      }
      if (m.type == MaxType::S3 || m.type == MaxType::S5) {
        std::vector<std::string> b;
        for (auto id : m.b_classes) {
          b.push_back(class_label(input, gs.r_members, 'R', id));
        }
        w["r_classes"] = b;
      }
      if (m.lifted) {
        auto pfi = principal_factor_iso(*input.semigroup, gs, m.j_class);
        w["principal_factor"] = rzms_witness(*m.lifted, pfi.target.group());
      }
      if (m.fallback_generators) {
        w["fallback_generators"] = true;
      }
      return w;
    }

    bool type_selected(std::vector<std::string> const& types,
                       std::string const&              t) {
      return types.empty()
             || std::find(types.begin(), types.end(), t) != types.end();
    }

    void check_types(std::vector<std::string> const& types, bool rzms) {
      for (auto const& t : types) {
        bool ok = false;
        if (rzms) {
          for (auto r : {RzmsType::R1,
                         RzmsType::R2,
                         RzmsType::R3,
                         RzmsType::R4,
                         RzmsType::R5,
                         RzmsType::R6}) {
            ok = ok || to_string(r) == t;
          }
        } else {
          ok = max_type_from_string(t).has_value();
        }
        if (!ok) {
          throw InputError("--types: unknown type \"" + t + "\" for this input");
        }
      }
    }

    ResultEntry entry_for(LoadedInput const&              input,
                          std::string                     type,
                          std::size_t                     j_class,
                          VertexSet const&                members,
                          std::vector<std::size_t> const& generators,
                          json                            witness) {
      ResultEntry e;
      e.type    = std::move(type);
      e.j_class = j_class + 1;
      e.size    = members.size();
      for (auto g : generators) {
        e.generators.push_back(g + 1);
        e.generator_labels.push_back(input.label(g));
      }
      e.witness = std::move(witness);
      return e;
    }

    void verify_entry(FiniteSemigroup const& s,
                      VertexSet const&       members,
                      ResultEntry&           e) {
      auto verdict = verify_maximal(s, members);
      if (verdict) {
        std::vector<std::size_t> gens;
        for (auto g : e.generators) {
          gens.push_back(g - 1);
        }
        if (closure_in(s, gens) != members) {
          verdict = {false, "generators do not regenerate the stated set"};
        }
      }
      e.verified = verdict.ok;
      if (!verdict.ok) {
        e.diagnostic = verdict.diagnostic;
      }
    }

  }  // namespace

  ResultDocument cmd_maximal(LoadedInput const& input, MaximalFlags const& flags) {
    check_types(flags.types, input.rzms != nullptr);
    ResultDocument doc;
    doc.command = "maximal";
    doc.input   = input.echo;
    doc.size    = input.semigroup->size();

    auto t  = Clock::now();
    auto gs = greens_structure(*input.semigroup);
    std::map<std::string, double> timings{{"greens", since(t)}};
    doc.j_classes = summarise(input, gs);

    t = Clock::now();
    std::vector<ResultEntry> entries;
    std::vector<VertexSet>   member_sets;
    if (input.rzms) {
      auto const& r = *input.rzms;
      // The non-zero elements form a single J-class.
      std::size_t const j = gs.j_class[r.size() > 1 ? 1 : 0];
      for (auto& m : max_subsemigroups_rzms(
               r, R6Options{flags.shuffle_seed, flags.limits})) {
        auto type = to_string(m.type);
        if (!type_selected(flags.types, type)) {
          continue;
        }
        entries.push_back(entry_for(
            input, type, j, m.members, m.generators, rzms_witness(m, r.group())));
        member_sets.push_back(std::move(m.members));
      }
    } else {
      MaxOptions options;
      options.limits       = flags.limits;
      options.shuffle_seed = flags.shuffle_seed;
      for (auto const& t : flags.types) {
        options.types.push_back(*max_type_from_string(t));
      }
      for (auto& m : max_subsemigroups(*input.semigroup, gs, options)) {
        entries.push_back(entry_for(input,
                                    to_string(m.type),
                                    m.j_class,
                                    m.members,
                                    m.generators,
                                    s_witness(input, gs, m)));
        member_sets.push_back(std::move(m.members));
      }
    }
    timings["maximal"] = since(t);

    if (flags.verify) {
      t = Clock::now();
      for (std::size_t k = 0; k < entries.size(); ++k) {
        verify_entry(*input.semigroup, member_sets[k], entries[k]);
      }
      timings["verify"] = since(t);
    }
    for (auto const& e : entries) {
      ++doc.counts[e.type];
    }
    doc.maximal_subsemigroups = std::move(entries);
    if (flags.timings) {
      doc.timings = std::move(timings);
    }
    return doc;
  }

  ResultDocument cmd_analyze(LoadedInput const& input) {
    ResultDocument doc;
    doc.command   = "analyze";
    doc.input     = input.echo;
    doc.size      = input.semigroup->size();
    doc.j_classes = summarise(input, greens_structure(*input.semigroup));
    return doc;
  }

  std::string cmd_dot(LoadedInput const&         input,
                      std::string const&         graph,
                      std::optional<std::size_t> j_class) {
    static std::vector<std::string> const families{
        "gh", "gamma-l", "gamma-r", "delta", "theta"};
    if (std::find(families.begin(), families.end(), graph) == families.end()) {
      throw InputError("--graph: unknown graph \"" + graph
                       + "\"; expected gh, gamma-l, gamma-r, delta or theta");
    }
    auto const& s = *input.semigroup;
    if (graph == "gh" && input.rzms && !j_class) {
      auto const&              r = *input.rzms;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < r.i_size(); ++i) {
        labels.push_back(std::to_string(i + 1));
      }
      for (std::size_t l = 0; l < r.lambda_size(); ++l) {
        labels.push_back(lambda_label(l));
      }
      return to_dot(graham_houghton(r), labels);
    }
    if (!j_class) {
      throw InputError("--jclass is required for graph \"" + graph + "\"");
    }
    auto gs = greens_structure(s);
    if (*j_class == 0 || *j_class > gs.nr_j_classes()) {
      throw InputError("--jclass: no J-class " + std::to_string(*j_class)
                       + "; there are " + std::to_string(gs.nr_j_classes()));
    }
    std::size_t const j = *j_class - 1;
    if (!gs.regular_j[j]) {
      throw InputError("--jclass: J-class " + std::to_string(*j_class)
                       + " is not regular");
    }
    if (graph == "gh") {
      auto                     pfi = principal_factor_iso(s, gs, j);
      std::vector<std::string> labels;
      for (auto r : pfi.r_classes) {
        labels.push_back(class_label(input, gs.r_members, 'R', r));
      }
      for (auto l : pfi.l_classes) {
        labels.push_back(class_label(input, gs.l_members, 'L', l));
      }
      return to_dot(graham_houghton(pfi.target), labels);
    }

    auto g = build_jclass_graphs(s, gs, j, x_prime(s, gs, j));
    auto component_labels = [&](CondensedDigraph const&         d,
                                std::vector<std::size_t> const& ids,
                                std::vector<VertexSet> const&   members,
                                char                            letter) {
      std::vector<std::string> out;
      for (auto const& comp : d.components) {
        std::string text = "{";
        for (std::size_t k = 0; k < comp.size(); ++k) {
          text += (k == 0 ? "" : ", ")
                  + class_label(input, members, letter, ids[comp[k]]);
        }
        out.push_back(text + "}");
      }
      return out;
    };
    auto ll = component_labels(g.gamma_l, g.l_classes, gs.l_members, 'L');
    auto rl = component_labels(g.gamma_r, g.r_classes, gs.r_members, 'R');
    if (graph == "gamma-l") {
      return to_dot(g.gamma_l, ll);
    }
    if (graph == "gamma-r") {
      return to_dot(g.gamma_r, rl);
    }
    std::vector<std::string> labels = ll;
    labels.insert(labels.end(), rl.begin(), rl.end());
    std::vector<bool> filled;
    for (auto c : g.gamma_l.colour) {
      filled.push_back(c == 1);
    }
    for (auto c : g.gamma_r.colour) {
      filled.push_back(c == 1);
    }
    return to_dot(graph == "delta" ? g.delta : g.theta, labels, filled);
  }

  ////////////////////////////////////////////////////////////////////////
  // Command line
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string read_all(std::string const& path, std::istream& in) {
      std::ostringstream buffer;
      if (path.empty() || path == "-") {
        buffer << in.rdbuf();
      } else {
        std::ifstream file(path);
        if (!file) {
          throw InputError("cannot open \"" + path + "\"");
        }
        buffer << file.rdbuf();
      }
      return buffer.str();
    }

    std::vector<std::string> split_types(std::string const& text) {
      std::vector<std::string> out;
      std::string              item;
      std::istringstream       stream(text);
      while (std::getline(stream, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace),
                   item.end());
        if (!item.empty()) {
          out.push_back(item);
        }
      }
      return out;
    }
  }  // namespace

  int run(int                argc,
          char const* const* argv,
          std::istream&      in,
          std::ostream&      out,
          std::ostream&      err) {
    CLI::App app{"Maximal subsemigroups of finite semigroups"};
    app.require_subcommand(1);

    std::string  path;
    Limits       limits;
    MaximalFlags flags;
    std::string  types;
    std::string  graph;
    std::size_t  j_class = 0;
    std::uint64_t seed   = 0;

    auto add_common = [&](CLI::App* sub) {
      sub->add_option("input", path, "JSON input file; stdin if absent or -");
      sub->add_option("--bound-semigroup",
                      limits.semigroup_size,
                      "Largest semigroup to enumerate");
      sub->add_option(
          "--bound-group", limits.group_order, "Largest group to enumerate");
      sub->add_option("--bound-subgroup-parent",
                      limits.subgroup_parent,
                      "Largest group whose subgroup lattice is computed");
      sub->add_option("--bound-clique",
                      limits.clique_vertices,
                      "Most vertices for independent-set enumeration");
      sub->add_option("--bound-table",
                      limits.table_elements,
                      "Largest semigroup given a full multiplication table");
    };

    auto* maximal = app.add_subcommand("maximal", "List maximal subsemigroups");
    add_common(maximal);
    maximal->add_option("--types", types, "Comma separated types to keep");
    maximal->add_flag("--verify", flags.verify, "Check every result");
    maximal->add_flag("--timings", flags.timings, "Report timings");
    auto* seed_opt = maximal->add_option(
        "--seed", seed, "Shuffle spanning trees and transversals");

    auto* analyze = app.add_subcommand("analyze", "Summarise Green's structure");
    add_common(analyze);

    auto* dot = app.add_subcommand("dot", "Print a graph in DOT format");
    add_common(dot);
    dot->add_option("--graph", graph, "gh, gamma-l, gamma-r, delta or theta")
        ->required();
    auto* jclass_opt
        = dot->add_option("--jclass", j_class, "J-class id (1-based)");

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 1;
    }

    try {
      auto input = load_input(read_all(path, in), limits);
      if (maximal->parsed()) {
        flags.limits = limits;
        flags.types  = split_types(types);
        if (seed_opt->count() > 0) {
          flags.shuffle_seed = seed;
        }
        out << json(cmd_maximal(input, flags)).dump(2) << '\n';
      } else if (analyze->parsed()) {
        out << json(cmd_analyze(input)).dump(2) << '\n';
      } else {
        std::optional<std::size_t> j;
        if (jclass_opt->count() > 0) {
          j = j_class;
        }
        out << cmd_dot(input, graph, j);
      }
    } catch (InputError const& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (CapacityError const& e) {
      err << "capacity exceeded: " << e.what() << '\n';
      return 2;
    }
    return 0;
  }

}  // namespace maxsub::cli
