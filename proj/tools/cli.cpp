#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lcord/constructors.hpp"
#include "lcord/error.hpp"
#include "lcord/graph_io.hpp"
#include "lcord/labeling.hpp"
#include "lcord/numtheory.hpp"
#include "lcord/products.hpp"
#include "lcord/search.hpp"

namespace lcord::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.emplace_back(text.substr(start, at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return parts;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::optional<Graph> family_graph(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 2) return std::nullopt;
  const std::string& kind = parts[0];
  auto arg = [&](std::size_t i) { return parse_int(parts.at(i), kind + " parameter"); };
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      throw UsageError("family '" + kind + "' takes " + std::to_string(n) + " parameter(s)");
    }
  };
  try {
    if (kind == "path") {
      arity(1);
      return make_path(arg(1));
    }
    if (kind == "cycle") {
      arity(1);
      return make_cycle(arg(1));
    }
    if (kind == "complete") {
      arity(1);
      return make_complete(arg(1));
    }
    if (kind == "star") {
      arity(1);
      return make_star(arg(1));
    }
    if (kind == "bipartite") {
      arity(2);
      return make_complete_bipartite(arg(1), arg(2));
    }
    if (kind == "edges") {
      if (parts.size() != 3) throw UsageError("edges spec is edges:<order>:<u-v,...>");
      std::vector<Edge> edges;
      if (!parts[2].empty()) {
        for (const std::string& item : split(parts[2], ',')) {
          const auto ends = split(item, '-');
          if (ends.size() != 2) throw UsageError("bad edge '" + item + "'");
          edges.emplace_back(static_cast<Vertex>(parse_int(ends[0], "vertex")),
                             static_cast<Vertex>(parse_int(ends[1], "vertex")));
        }
      }
      return Graph(arg(1), std::move(edges));
    }
  } catch (const InvalidArgument& e) {
    throw UsageError("bad family spec '" + std::string(spec) + "': " + e.what());
  }
  return std::nullopt;
}

Graph graph_from_value(const json& value) {
  if (value.is_string()) return resolve_graph(value.get<std::string>());
  return graph_from_json(value);
}

// Inline "2,1,3" or a labeling JSON file.
LabelingDocument resolve_labeling(const std::string& spec) {
  const bool inline_list =
      !spec.empty() && std::all_of(spec.begin(), spec.end(), [](char c) {
        return (c >= '0' && c <= '9') || c == ',' || c == ' ';
      });
  if (inline_list) {
    std::vector<std::int64_t> values;
    for (const std::string& item : split(spec, ',')) {
      std::string trimmed = item;
      std::erase(trimmed, ' ');
      values.push_back(parse_int(trimmed, "label"));
    }
    return {std::nullopt, Labeling(std::move(values))};
  }
  return labeling_from_json(read_json_file(spec));
}

std::int64_t checked_prime(std::int64_t p) {
  if (!is_odd_prime(p)) throw UsageError(std::to_string(p) + " is not an odd prime");
  if (p > kMaxPrime) {
    throw UsageError("prime " + std::to_string(p) + " exceeds " + std::to_string(kMaxPrime));
  }
  return p;
}

// p from the flag and/or a document; they must agree when both are present.
std::int64_t merge_prime(std::optional<std::int64_t> flag, std::optional<std::int64_t> doc) {
  if (flag && doc && *flag != *doc) {
    throw UsageError("--p " + std::to_string(*flag) + " disagrees with p = " +
                     std::to_string(*doc) + " in the input");
  }
  if (flag) return checked_prime(*flag);
  if (doc) return checked_prime(*doc);
  throw UsageError("a prime is required (--p)");
}

Objective parse_objective(const std::string& text) {
  if (text == "cordial") return Objective::cordial();
  const auto parts = split(text, ':');
  if (parts.size() == 2 && parts[0] == "diff") return Objective::exact(parse_int(parts[1], "difference"));
  if (parts.size() == 2 && parts[0] == "around") {
    return Objective::around(parse_int(parts[1], "difference"));
  }
  if (parts.size() == 3 && parts[0] == "window") {
    return Objective{parse_int(parts[1], "window bound"), parse_int(parts[2], "window bound")};
  }
  throw UsageError("objective must be cordial, diff:D, around:D or window:LO:HI");
}

SearchMode parse_mode(const std::string& text) {
  if (text == "find") return SearchMode::FindFirst;
  if (text == "count") return SearchMode::CountAll;
  if (text == "none") return SearchMode::ProveNone;
  throw UsageError("mode must be find, count or none");
}

Budget default_budget() {
  Budget budget;
  if (const char* nodes = std::getenv("LCORD_BUDGET_NODES")) {
    budget.max_nodes = static_cast<std::uint64_t>(parse_int(nodes, "LCORD_BUDGET_NODES"));
  }
  if (const char* seconds = std::getenv("LCORD_BUDGET_SECONDS")) {
    try {
      budget.max_seconds = std::stod(seconds);
    } catch (const std::exception&) {
      throw UsageError("invalid LCORD_BUDGET_SECONDS");
    }
  }
  return budget;
}

json checks_to_json(const std::vector<HypothesisCheck>& checks) {
  json out = json::array();
  for (const HypothesisCheck& c : checks) {
    json item{{"condition", c.condition}, {"satisfied", c.satisfied}};
    if (c.lhs) item["lhs"] = *c.lhs;
    if (c.rhs) item["rhs"] = *c.rhs;
    out.push_back(std::move(item));
  }
  return out;
}

std::string graph_table(const Graph& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\nsize  " << g.size() << "\nedges";
  for (const Edge& e : g.edges()) out << ' ' << e.u << '-' << e.v;
  out << '\n';
  return out.str();
}

struct Common {
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "table"}));
  cmd->add_option("--out", common.out_path, "Write the result to this file");
}

void emit(const Common& common, std::ostream& out, const std::string& text) {
  if (common.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + common.out_path + "'");
  file << text;
}

std::string dump(const json& doc) { return doc.dump() + "\n"; }

void error_json(std::ostream& err, std::string_view kind, std::string_view message,
                json extra = json::object()) {
  json doc{{"error", kind}, {"message", message}};
  doc.update(extra);
  err << doc.dump() << '\n';
}

}  // namespace

Graph resolve_graph(std::string_view spec) {
  if (auto g = family_graph(spec)) return std::move(*g);
  const std::string path(spec);
  if (!std::filesystem::exists(path)) {
    throw IoError("no such graph file or family spec: '" + path + "'");
  }
  return graph_from_json(read_json_file(path));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendre cordial labelings: graphs, products, constructions, search",
               "lcord"};
  app.require_subcommand(1);

  Common common;
  std::optional<std::int64_t> p_flag;
  Budget budget;
  bool nodes_set = false;
  bool seconds_set = false;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option_function<std::uint64_t>(
        "--budget-nodes", [&](const std::uint64_t& v) { budget.max_nodes = v; nodes_set = true; },
        "Search node limit");
    cmd->add_option_function<double>(
        "--budget-seconds", [&](const double& v) { budget.max_seconds = v; seconds_set = true; },
        "Search wall-time limit");
  };

  auto* gen = app.add_subcommand("gen", "Generate a graph from a family spec");
  std::string gen_spec;
  gen->add_option("family", gen_spec, "path:N | cycle:N | complete:N | star:N | ...")
      ->required();
  add_common(gen, common);

  auto* op = app.add_subcommand("op", "Apply a binary graph operation");
  std::string op_name;
  std::string op_g1;
  std::string op_g2;
  op->add_option("operation", op_name, "join | corona | lex | cart | tensor | strong")
      ->required();
  op->add_option("g1", op_g1, "First factor (spec or file)")->required();
  op->add_option("g2", op_g2, "Second factor (spec or file)")->required();
  add_common(op, common);

  auto* construct_cmd = app.add_subcommand("construct", "Run an explicit construction");
  std::string theorem_text;
  std::string g1_spec;
  std::string g2_spec;
  std::string lab1_spec;
  std::string lab2_spec;
  std::string recipe_path;
  std::int64_t ceiling = kDefaultOrderCeiling;
  construct_cmd->add_option("theorem", theorem_text,
                            "corona-path | kp-tensor | join | corona | lexicographic | "
                            "cartesian | tensor | strong");
  construct_cmd->add_option("--g,--g1", g1_spec, "First (or only) factor");
  construct_cmd->add_option("--g2", g2_spec, "Second factor");
  construct_cmd->add_option("--lab-g1", lab1_spec, "Base labeling of g1 (a,b,c or file)");
  construct_cmd->add_option("--lab-g2", lab2_spec, "Base labeling of g2 (a,b,c or file)");
  construct_cmd->add_option("--recipe", recipe_path, "Recipe JSON file");
  construct_cmd->add_option("--p", p_flag, "Odd prime");
  construct_cmd->add_option("--ceiling", ceiling, "Order ceiling for base-labeling search");
  add_budget(construct_cmd);
  add_common(construct_cmd, common);

  auto* verify = app.add_subcommand("verify", "Tally a labeling and check cordiality");
  std::string verify_graph;
  std::string verify_lab;
  verify->add_option("graph", verify_graph, "Graph (spec or file)")->required();
  verify->add_option("labeling", verify_lab, "Labeling (a,b,c or file)")->required();
  verify->add_option("--p", p_flag, "Odd prime");
  add_common(verify, common);

  auto* search = app.add_subcommand("search", "Backtracking search for labelings");
  std::string search_graph;
  std::string objective_text = "cordial";
  std::string mode_text = "find";
  int jobs = 1;
  search->add_option("graph", search_graph, "Graph (spec or file)")->required();
  search->add_option("--p", p_flag, "Odd prime");
  search->add_option("--objective", objective_text,
                     "cordial | diff:D | around:D | window:LO:HI (on |rho|-|eta|)");
  search->add_option("--mode", mode_text, "find | count | none");
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--ceiling", ceiling, "Maximum graph order");
  add_budget(search);
  add_common(search, common);

  auto* legendre = app.add_subcommand("legendre", "Legendre symbol (a/p)");
  std::string legendre_a;
  std::string legendre_p;
  legendre->add_option("a", legendre_a, "Integer")->required();
  legendre->add_option("p", legendre_p, "Odd prime")->required();
  add_common(legendre, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    const auto* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    error_json(err, "usage", e.what());
    err << failed->help();
    return kUsage;
  }

  try {
    const Budget defaults = default_budget();
    if (!nodes_set) budget.max_nodes = defaults.max_nodes;
    if (!seconds_set) budget.max_seconds = defaults.max_seconds;

    if (*gen) {
      const Graph g = resolve_graph(gen_spec);
      if (common.format == "dot") {
        emit(common, out, graph_to_dot(g));
      } else if (common.format == "table") {
        emit(common, out, graph_table(g));
      } else {
        emit(common, out, dump(graph_to_json(g)));
      }
      return kOk;
    }

    if (*op) {
      const auto kind = parse_product_kind(op_name);
      if (!kind) throw UsageError("unknown operation '" + op_name + "'");
      const Graph g1 = resolve_graph(op_g1);
      const Graph g2 = resolve_graph(op_g2);
      const Graph g = apply_product(*kind, g1, g2);
      const bool connected = is_connected(g);
      if (common.format == "dot") {
        emit(common, out, graph_to_dot(g));
      } else if (common.format == "table") {
        emit(common, out,
             "operation " + std::string(product_name(*kind)) + "\n" + graph_table(g) +
                 "connected " + (connected ? "yes" : "no") + "\n");
      } else {
        json doc = graph_to_json(g);
        doc["operation"] = product_name(*kind);
        doc["vertex_map"] = vertex_map_convention(*kind);
        doc["connected"] = connected;
        doc["warnings"] = connected ? json::array() : json::array({"disconnected"});
        emit(common, out, dump(doc));
      }
      return kOk;
    }

    if (*construct_cmd) {
      ConstructionRecipe recipe;
      std::optional<std::int64_t> doc_p;
      std::optional<std::string> doc_theorem;
      std::optional<Graph> g1;
      std::optional<Graph> g2;
      std::optional<LabelingDocument> lab1;
      std::optional<LabelingDocument> lab2;
      if (!recipe_path.empty()) {
        const json doc = read_json_file(recipe_path);
        try {
          if (doc.contains("theorem")) doc_theorem = doc.at("theorem").get<std::string>();
          if (doc.contains("p")) doc_p = doc.at("p").get<std::int64_t>();
          if (doc.contains("g1")) g1 = graph_from_value(doc.at("g1"));
          if (doc.contains("g")) g1 = graph_from_value(doc.at("g"));
          if (doc.contains("g2")) g2 = graph_from_value(doc.at("g2"));
          if (doc.contains("lab_g1")) lab1 = labeling_from_json(doc.at("lab_g1"));
          if (doc.contains("lab_g2")) lab2 = labeling_from_json(doc.at("lab_g2"));
        } catch (const json::exception& e) {
          throw UsageError(std::string("malformed recipe: ") + e.what());
        }
      }
      if (!theorem_text.empty()) doc_theorem = theorem_text;
      if (!doc_theorem) throw UsageError("a theorem is required");
      const auto theorem = parse_theorem(*doc_theorem);
      if (!theorem) throw UsageError("unknown theorem '" + *doc_theorem + "'");
      if (!g1_spec.empty()) g1 = resolve_graph(g1_spec);
      if (!g2_spec.empty()) g2 = resolve_graph(g2_spec);
      if (!lab1_spec.empty()) lab1 = resolve_labeling(lab1_spec);
      if (!lab2_spec.empty()) lab2 = resolve_labeling(lab2_spec);
      if (!g1) throw UsageError("missing factor --g1 (or --g)");
      if (theorem_uses_g2(*theorem) && !g2) throw UsageError("missing factor --g2");
      const std::int64_t p = merge_prime(p_flag, doc_p);

      recipe.theorem = *theorem;
      recipe.p = p;
      recipe.g1 = std::move(*g1);
      recipe.g2 = std::move(g2);
      if (lab1) recipe.lab_g1 = std::move(lab1->labeling);
      if (lab2) recipe.lab_g2 = std::move(lab2->labeling);

      json search_info;
      const bool missing1 = theorem_needs_lab_g1(*theorem) && !recipe.lab_g1;
      const bool missing2 = theorem_needs_lab_g2(*theorem) && !recipe.lab_g2;
      if (missing1 || missing2) {
        // Base labelings not given: let the oracle find a pair.
        BaseSearchResult found =
            find_base_labelings(*theorem, recipe.g1, recipe.g2, p, budget, ceiling);
        search_info = {{"nodes", found.nodes}};
        if (found.outcome != BaseSearchOutcome::Found) {
          const bool none = found.outcome == BaseSearchOutcome::None;
          error_json(err, none ? "search-none" : "budget-exhausted",
                     none ? "no base labelings satisfy the hypothesis"
                          : "budget exhausted before base labelings were found",
                     {{"nodes", found.nodes}});
          return none ? kSearchNone : kBudgetExhausted;
        }
        if (!recipe.lab_g1) recipe.lab_g1 = std::move(found.recipe->lab_g1);
        if (!recipe.lab_g2) recipe.lab_g2 = std::move(found.recipe->lab_g2);
        search_info["found"] = true;
      }

      const Construction c = construct(recipe);
      const LegendreContext ctx(p);
      if (common.format == "dot") {
        emit(common, out, graph_to_dot(c.graph, &c.labeling, &ctx));
      } else if (common.format == "table") {
        std::ostringstream text;
        text << "theorem   " << theorem_name(c.theorem) << "\np         " << c.p
             << "\norder     " << c.graph.order() << "\nsize      " << c.graph.size()
             << "\npredicted e0=" << c.predicted.e0 << " e1=" << c.predicted.e1
             << "\nverified  e0=" << c.verified.e0 << " e1=" << c.verified.e1
             << "\ncordial   " << (c.verified.cordial() ? "yes" : "no") << '\n';
        emit(common, out, text.str());
      } else {
        json doc{{"theorem", theorem_name(c.theorem)},
                 {"p", c.p},
                 {"graph", graph_to_json(c.graph)},
                 {"labeling", labeling_to_json(c.labeling, c.p)},
                 {"predicted", {{"e0", c.predicted.e0}, {"e1", c.predicted.e1}}},
                 {"verified", tally_to_json(c.verified)},
                 {"hypotheses", checks_to_json(c.hypotheses)}};
        if (recipe.lab_g1) doc["lab_g1"] = labeling_to_json(*recipe.lab_g1, p);
        if (recipe.lab_g2) doc["lab_g2"] = labeling_to_json(*recipe.lab_g2, p);
        if (!search_info.is_null()) doc["base_search"] = search_info;
        emit(common, out, dump(doc));
      }
      return kOk;
    }

    if (*verify) {
      const Graph g = resolve_graph(verify_graph);
      LabelingDocument lab = resolve_labeling(verify_lab);
      const std::int64_t p = merge_prime(p_flag, lab.p);
      const LegendreContext ctx(p);
      const Labeling labeling(g, std::vector<std::int64_t>(lab.labeling.values().begin(),
                                                           lab.labeling.values().end()));
      const bool cordial = is_cordial(g, labeling, ctx);
      const EdgeTally tally = induced_tally(g, labeling, ctx);
      if (common.format == "dot") {
        emit(common, out, graph_to_dot(g, &labeling, &ctx));
      } else if (common.format == "table") {
        emit(common, out,
             "e0 " + std::to_string(tally.e0) + "\ne1 " + std::to_string(tally.e1) +
                 "\ncordial " + (cordial ? "yes" : "no") + "\n");
      } else {
        emit(common, out, tally_to_json(tally).dump() + "\n");
      }
      return kOk;
    }

    if (*search) {
      SearchSpec spec{resolve_graph(search_graph),
                      merge_prime(p_flag, std::nullopt),
                      parse_objective(objective_text),
                      parse_mode(mode_text),
                      budget,
                      jobs,
                      ceiling};
      const SearchResult r = search_labeling(spec);
      json doc{{"outcome", outcome_name(r.outcome)}, {"nodes", r.nodes}};
      if (r.labeling) {
        doc["labeling"] = std::vector<std::int64_t>(r.labeling->values().begin(),
                                                    r.labeling->values().end());
      }
      if (r.count) doc["count"] = *r.count;
      if (common.format == "table") {
        std::ostringstream text;
        text << "outcome " << outcome_name(r.outcome) << "\nnodes   " << r.nodes << '\n';
        if (r.count) text << "count   " << *r.count << '\n';
        if (r.labeling) {
          text << "labeling";
          for (std::int64_t v : r.labeling->values()) text << ' ' << v;
          text << '\n';
        }
        emit(common, out, text.str());
      } else if (common.format == "dot" && r.labeling) {
        const LegendreContext ctx(spec.p);
        emit(common, out, graph_to_dot(spec.graph, &*r.labeling, &ctx));
      } else {
        emit(common, out, dump(doc));
      }
      if (r.outcome == SearchOutcome::None) return kSearchNone;
      if (r.outcome == SearchOutcome::Exhausted) return kBudgetExhausted;
      return kOk;
    }

    if (*legendre) {
      const std::int64_t a = parse_int(legendre_a, "integer a");
      const std::int64_t p = checked_prime(parse_int(legendre_p, "prime p"));
      const LegendreContext ctx(p);
      const int symbol = legendre_symbol(a, ctx);
      if (common.format == "json") {
        emit(common, out, json{{"a", a}, {"p", p}, {"symbol", symbol}}.dump() + "\n");
      } else {
        emit(common, out, std::to_string(symbol) + "\n");
      }
      return kOk;
    }
  } catch (const IoError& e) {
    error_json(err, "io", e.what());
    return kIoError;
  } catch (const UsageError& e) {
    error_json(err, "usage", e.what());
    return kUsage;
  } catch (const ConnectivityViolation& e) {
    error_json(err, "connectivity-violation", e.what(), {{"condition", e.condition()}});
    return kHypothesis;
  } catch (const HypothesisViolation& e) {
    json extra{{"condition", e.condition()}};
    if (e.lhs()) extra["lhs"] = *e.lhs();
    if (e.rhs()) extra["rhs"] = *e.rhs();
    error_json(err, "hypothesis-violation", e.what(), std::move(extra));
    return kHypothesis;
  } catch (const AdmissionError& e) {
    error_json(err, "admission", e.what());
    return kHypothesis;
  } catch (const InvalidArgument& e) {
    error_json(err, "invalid-input", e.what());
    return kUsage;
  }
  return kUsage;
}

}  // namespace lcord::cli
