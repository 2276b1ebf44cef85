#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rubbling/format.hpp"
#include "rubbling/reductions.hpp"
#include "rubbling/solver.hpp"

namespace {

using nlohmann::json;
using namespace rubbling;

// Exit codes: 0 success (and "yes" decisions), 1 usage or input errors,
// 2 negative reach decision, 3 solver cap exceeded, 4 verification mismatch.
constexpr int kExitUsage = 1;
constexpr int kExitUnreachable = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitMismatch = 4;

json stats_json(const SolveStats& s) {
  return json{{"distributions", s.distributions_examined},
              {"states", s.states_expanded},
              {"cache_hits", s.cache_hits}};
}

std::vector<RubblingMove> read_moves_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open moves file '" + path + "'");
  return parse_moves(in);
}

// "cycle:3..8" -> cycle:3, ..., cycle:8; ranges combine per parameter.
std::vector<FamilySpec> expand_family_range(const std::string& token) {
  std::string name = token;
  std::string args;
  if (size_t colon = token.find(':'); colon != std::string::npos) {
    name = token.substr(0, colon);
    args = token.substr(colon + 1);
  }

  std::vector<std::pair<int, int>> ranges;
  size_t pos = 0;
  while (!args.empty() && pos <= args.size()) {
    size_t comma = args.find(',', pos);
    std::string piece =
        args.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t dots = piece.find("..");
      if (dots == std::string::npos) {
        size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size()) throw std::invalid_argument(piece);
        ranges.push_back({v, v});
      } else {
        size_t used = 0;
        std::string lo_text = piece.substr(0, dots), hi_text = piece.substr(dots + 2);
        int lo = std::stoi(lo_text, &used);
        if (used != lo_text.size()) throw std::invalid_argument(piece);
        int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument(piece);
        if (lo > hi) throw std::invalid_argument(piece);
        ranges.push_back({lo, hi});
      }
    } catch (const std::exception&) {
      throw ParseError("bad range piece '" + piece + "' in '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }

  std::vector<std::vector<int>> combos{{}};
  for (auto [lo, hi] : ranges) {
    std::vector<std::vector<int>> next;
    for (const auto& c : combos)
      for (int v = lo; v <= hi; ++v) {
        auto grown = c;
        grown.push_back(v);
        next.push_back(std::move(grown));
      }
    combos = std::move(next);
  }

  std::vector<FamilySpec> out;
  for (const auto& params : combos) {
    std::string flat = name;
    for (size_t i = 0; i < params.size(); ++i)
      flat += (i == 0 ? ':' : ',') + std::to_string(params[i]);
    out.push_back(FamilySpec::parse(flat));  // validates the family name
  }
  return out;
}

struct ReachArgs {
  std::string graph_spec, distribution;
  int target = 0;
  bool certificate = false;
};

int run_reach(const ReachArgs& args, bool as_json) {
  Graph g = load_graph_spec(args.graph_spec);
  auto p = parse_distribution(args.distribution, g.vertex_count());
  if (args.target < 0 || args.target >= g.vertex_count())
    throw InvalidArgumentError("target vertex " + std::to_string(args.target) + " out of range");

  ReachabilitySearch search(g, args.target);
  auto cert = search.certify(p);

  if (as_json) {
    json witness;
    if (cert) {
      json moves = json::array();
      for (const auto& m : cert->moves) moves.push_back(m.str());
      witness = json{{"target", args.target}, {"moves", moves}};
    }
    SolveStats stats{1, search.stats().states_expanded, search.stats().cache_hits};
    std::cout << json{{"command", "reach"},
                      {"value", cert.has_value()},
                      {"witness", witness},
                      {"stats", stats_json(stats)}}
              << "\n";
  } else {
    std::cout << "reachable=" << (cert ? "true" : "false") << "\n";
    if (cert && args.certificate)
      for (const auto& m : cert->moves) std::cout << m.str() << "\n";
  }
  return cert ? 0 : kExitUnreachable;
}

struct SolveArgs {
  std::string graph_spec;
  std::string mode = "rubbling";
  std::optional<Count> cap;
  bool no_squish = false;
  int workers = 0;
};

SolveOptions solve_options(const SolveArgs& args) {
  SolveOptions opts;
  opts.move_set = args.mode == "pebbling" ? MoveSet::pebbling : MoveSet::rubbling;
  opts.cap = args.cap;
  opts.squish = !args.no_squish;
  opts.workers = args.workers;
  return opts;
}

int run_rho(const SolveArgs& args, bool as_json) {
  Graph g = load_graph_spec(args.graph_spec);
  SolveResult res = rubbling_number(g, solve_options(args));
  bool pebbling = args.mode == "pebbling";

  if (as_json) {
    json witness;
    if (res.failing_witness)
      witness = json{{"target", res.failing_witness->target},
                     {"distribution", format_distribution(res.failing_witness->distribution)}};
    std::cout << json{{"command", "rho"},
                      {"value", res.value},
                      {"witness", witness},
                      {"stats", stats_json(res.stats)}}
              << "\n";
  } else {
    std::cout << (pebbling ? "pi=" : "rho=") << res.value << "\n";
    if (res.failing_witness) {
      std::cout << "witness_target=" << res.failing_witness->target << "\n";
      std::cout << "witness_dist=" << format_distribution(res.failing_witness->distribution)
                << "\n";
    }
  }
  return 0;
}

int run_rho_opt(const SolveArgs& args, bool as_json) {
  Graph g = load_graph_spec(args.graph_spec);
  SolveResult res = optimal_rubbling_number(g, solve_options(args));

  if (as_json) {
    json witness;
    if (res.covering_witness)
      witness = json{{"distribution", format_distribution(*res.covering_witness)}};
    std::cout << json{{"command", "rho-opt"},
                      {"value", res.value},
                      {"witness", witness},
                      {"stats", stats_json(res.stats)}}
              << "\n";
  } else {
    std::cout << "rho_opt=" << res.value << "\n";
    if (res.covering_witness)
      std::cout << "witness_dist=" << format_distribution(*res.covering_witness) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string range;
  std::string which = "rho";
  int workers = 0;
};

int run_verify(const VerifyArgs& args, bool as_json) {
  auto specs = expand_family_range(args.range);
  Invariant which = args.which == "rho-opt" ? Invariant::rho_opt : Invariant::rho;
  SolveOptions opts;
  opts.workers = args.workers;

  bool all_ok = true;
  for (const auto& spec : specs) {
    auto items = verify_family({&spec, 1}, which, opts);
    const auto& item = items.front();
    all_ok = all_ok && item.ok;
    if (as_json) {
      std::cout << json{{"command", "verify"},
                        {"value", item.computed},
                        {"witness", json{{"spec", item.spec.str()},
                                         {"expected", item.expected},
                                         {"ok", item.ok}}},
                        {"stats", json::object()}}
                << "\n";
    } else {
      std::cout << item.spec.str() << " computed=" << item.computed
                << " expected=" << item.expected << (item.ok ? " ok" : " MISMATCH") << "\n";
    }
  }
  return all_ok ? 0 : kExitMismatch;
}

int run_roll(const std::string& graph_spec, const std::string& distribution, bool as_json) {
  Graph g = load_graph_spec(graph_spec);
  auto p = parse_distribution(distribution, g.vertex_count());
  auto q = normalize_by_rolling(g, p);
  if (as_json) {
    std::cout << json{{"command", "roll"},
                      {"value", format_distribution(q)},
                      {"witness", nullptr},
                      {"stats", json::object()}}
              << "\n";
  } else {
    std::cout << format_distribution(q) << "\n";
  }
  return 0;
}

int run_untangle(const std::string& graph_spec, const std::string& moves_path, bool as_json) {
  Graph g = load_graph_spec(graph_spec);
  auto moves = read_moves_file(moves_path);
  for (size_t i = 0; i < moves.size(); ++i)
    if (!moves[i].valid_for(g))
      throw InvalidArgumentError("move " + moves[i].str() + " does not fit the graph");
  auto trimmed = untangle(MoveMultiset::of(moves), g.vertex_count());
  auto lines = trimmed.expand();
  if (as_json) {
    json arr = json::array();
    for (const auto& m : lines) arr.push_back(m.str());
    std::cout << json{{"command", "untangle"},
                      {"value", static_cast<Count>(lines.size())},
                      {"witness", arr},
                      {"stats", json::object()}}
              << "\n";
  } else {
    for (const auto& m : lines) std::cout << m.str() << "\n";
  }
  return 0;
}

int run_export_dot(const std::string& graph_spec, const std::string& moves_path) {
  Graph g = load_graph_spec(graph_spec);
  auto moves = read_moves_file(moves_path);
  for (size_t i = 0; i < moves.size(); ++i)
    if (!moves[i].valid_for(g))
      throw InvalidArgumentError("move " + moves[i].str() + " does not fit the graph");
  std::cout << export_dot(g, MoveMultiset::of(moves));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive solver for pebble rubbling numbers on small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "one JSON object per result line");

  ReachArgs reach_args;
  auto* reach = app.add_subcommand("reach", "decide whether a target vertex is coverable");
  reach->add_option("graph", reach_args.graph_spec, "family token or @edge-list-file")->required();
  reach->add_option("distribution", reach_args.distribution, "comma-separated counts")->required();
  reach->add_option("target", reach_args.target, "target vertex")->required();
  reach->add_flag("--certificate", reach_args.certificate, "print the move sequence");

  SolveArgs rho_args;
  auto* rho = app.add_subcommand("rho", "compute the rubbling number");
  rho->add_option("graph", rho_args.graph_spec, "family token or @edge-list-file")->required();
  rho->add_option("--mode", rho_args.mode, "rubbling|pebbling")
      ->check(CLI::IsMember({"rubbling", "pebbling"}));
  rho->add_option("--cap", rho_args.cap, "largest distribution size to try");
  rho->add_flag("--no-squish", rho_args.no_squish, "enumerate all compositions");
  rho->add_option("--workers", rho_args.workers, "worker threads (default: cores)");

  SolveArgs rho_opt_args;
  auto* rho_opt = app.add_subcommand("rho-opt", "compute the optimal rubbling number");
  rho_opt->add_option("graph", rho_opt_args.graph_spec, "family token or @edge-list-file")
      ->required();
  rho_opt->add_option("--cap", rho_opt_args.cap, "largest distribution size to try");
  rho_opt->add_option("--workers", rho_opt_args.workers, "worker threads (default: cores)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "compare solved values against known formulas");
  verify->add_option("range", verify_args.range, "family range, e.g. cycle:3..8")->required();
  verify->add_option("--which", verify_args.which, "rho|rho-opt")
      ->check(CLI::IsMember({"rho", "rho-opt"}));
  verify->add_option("--workers", verify_args.workers, "worker threads (default: cores)");

  std::string roll_graph, roll_dist;
  auto* roll = app.add_subcommand("roll", "normalize a distribution by rolling moves");
  roll->add_option("graph", roll_graph, "family token or @edge-list-file")->required();
  roll->add_option("distribution", roll_dist, "comma-separated counts")->required();

  std::string untangle_graph, untangle_moves;
  auto* untangle_cmd = app.add_subcommand("untangle", "strip cycles from a move multiset");
  untangle_cmd->add_option("graph", untangle_graph, "family token or @edge-list-file")->required();
  untangle_cmd->add_option("moves", untangle_moves, "file with one (v,w->u) per line")->required();

  std::string dot_graph, dot_moves;
  auto* export_cmd = app.add_subcommand("export-dot", "transition digraph of a move multiset");
  export_cmd->add_option("graph", dot_graph, "family token or @edge-list-file")->required();
  export_cmd->add_option("moves", dot_moves, "file with one (v,w->u) per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(reach)) return run_reach(reach_args, as_json);
    if (app.got_subcommand(rho)) return run_rho(rho_args, as_json);
    if (app.got_subcommand(rho_opt)) return run_rho_opt(rho_opt_args, as_json);
    if (app.got_subcommand(verify)) return run_verify(verify_args, as_json);
    if (app.got_subcommand(roll)) return run_roll(roll_graph, roll_dist, as_json);
    if (app.got_subcommand(untangle_cmd)) return run_untangle(untangle_graph, untangle_moves, as_json);
    if (app.got_subcommand(export_cmd)) return run_export_dot(dot_graph, dot_moves);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.witness_target() && e.witness_distribution()) {
      std::cerr << "witness_target=" << *e.witness_target() << "\n";
      std::cerr << "witness_dist="
                << format_distribution(PebbleDistribution(*e.witness_distribution())) << "\n";
    }
    return kExitCapExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
