// Acceptance suite: one line per criterion, [PASS] or [FAIL], nonzero exit on
// any failure.  Every expected value is a frozen integer; no tolerances.

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rubbling/format.hpp"
#include "rubbling/reductions.hpp"
#include "rubbling/solver.hpp"

using namespace rubbling;

namespace {

int failures = 0;
std::vector<std::string> details;

void detail(const std::string& line) { details.push_back(line); }

bool expect(bool ok, const std::string& what) {
  if (!ok) detail(what);
  return ok;
}

void report(int index, const std::string& label, bool ok) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << label << "\n";
  if (!ok) {
    ++failures;
    for (const auto& line : details) std::cout << "       " << line << "\n";
  }
  details.clear();
}

Graph family(const std::string& token) { return build_family(FamilySpec::parse(token)); }

Count rho(const Graph& g, SolveOptions opts = {}) { return rubbling_number(g, opts).value; }

Count rho_opt(const Graph& g) { return optimal_rubbling_number(g).value; }

Count pi(const Graph& g) {
  SolveOptions opts;
  opts.move_set = MoveSet::pebbling;
  return rubbling_number(g, opts).value;
}

std::string show(const std::vector<Count>& counts) {
  return format_distribution(PebbleDistribution(counts));
}

// The graphs whose rubbling numbers criteria 1 through 4 pin down.
std::vector<std::string> small_corpus() {
  std::vector<std::string> tokens;
  for (int n = 1; n <= 5; ++n) tokens.push_back("path:" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) tokens.push_back("cycle:" + std::to_string(n));
  for (int n = 2; n <= 5; ++n) tokens.push_back("complete:" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) tokens.push_back("wheel:" + std::to_string(n));
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n)
      tokens.push_back("kbipartite:" + std::to_string(m) + "," + std::to_string(n));
  tokens.push_back("hypercube:2");
  tokens.push_back("hypercube:3");
  tokens.push_back("caterpillar:3");
  tokens.push_back("petersen");
  return tokens;
}

bool criterion1() {
  bool ok = true;
  SolveOptions exhaustive;
  exhaustive.squish = false;
  const Count expected[] = {1, 2, 4, 8, 16};
  for (int n = 1; n <= 5; ++n) {
    Count got = rho(family("path:" + std::to_string(n)), exhaustive);
    ok &= expect(got == expected[n - 1], "path:" + std::to_string(n) + " gave " +
                                             std::to_string(got) + ", wanted " +
                                             std::to_string(expected[n - 1]));
  }
  return ok;
}

bool criterion2() {
  bool ok = true;
  const Count expected[] = {2, 4, 5, 8, 9};
  for (int n = 3; n <= 7; ++n) {
    Count got = rho(family("cycle:" + std::to_string(n)));
    ok &= expect(got == expected[n - 3], "cycle:" + std::to_string(n) + " gave " +
                                             std::to_string(got) + ", wanted " +
                                             std::to_string(expected[n - 3]));
  }
  return ok;
}

bool criterion3() {
  bool ok = true;
  auto check = [&](const std::string& token, Count expected) {
    Count got = rho(family(token));
    ok &= expect(got == expected, token + " gave " + std::to_string(got) + ", wanted " +
                                      std::to_string(expected));
  };
  for (int n = 2; n <= 5; ++n) check("complete:" + std::to_string(n), 2);
  for (int n = 4; n <= 6; ++n) check("wheel:" + std::to_string(n), 4);
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n)
      check("kbipartite:" + std::to_string(m) + "," + std::to_string(n), 4);
  check("hypercube:2", 4);
  check("hypercube:3", 8);
  check("caterpillar:3", 4);
  return ok;
}

bool criterion4() {
  bool ok = true;
  Graph g = family("petersen");
  auto res = rubbling_number(g);
  ok &= expect(res.value == 5, "petersen gave " + std::to_string(res.value) + ", wanted 5");
  ok &= expect(res.failing_witness.has_value(), "no failing witness reported");
  if (res.failing_witness) {
    const auto& w = *res.failing_witness;
    ok &= expect(w.distribution.size() == 4,
                 "witness has size " + std::to_string(w.distribution.size()) + ", wanted 4");
    ok &= expect(!is_reachable(g, w.distribution, w.target).reachable,
                 "witness " + show(w.distribution.counts()) + " is actually coverable");
  }
  return ok;
}

bool criterion5() {
  bool ok = true;
  auto check = [&](const std::string& token, Count expected) {
    Count got = rho_opt(family(token));
    ok &= expect(got == expected, token + " gave " + std::to_string(got) + ", wanted " +
                                      std::to_string(expected));
  };
  const Count path_expected[] = {1, 2, 2, 3, 3, 4, 4, 5};
  for (int n = 1; n <= 8; ++n) check("path:" + std::to_string(n), path_expected[n - 1]);
  const Count cycle_expected[] = {2, 2, 3, 3, 4, 4};
  for (int n = 3; n <= 8; ++n) check("cycle:" + std::to_string(n), cycle_expected[n - 3]);
  for (int n = 2; n <= 5; ++n) check("complete:" + std::to_string(n), 2);
  for (int n = 4; n <= 6; ++n) check("wheel:" + std::to_string(n), 2);
  check("kbipartite:3,3", 3);
  check("petersen", 4);
  check("hypercube:2", 2);
  check("hypercube:3", 3);
  check("hypercube:4", 4);
  return ok;
}

bool criterion6() {
  bool ok = true;
  const Count path_expected[] = {1, 2, 4, 8, 16};
  for (int n = 1; n <= 5; ++n) {
    Count got = pi(family("path:" + std::to_string(n)));
    ok &= expect(got == path_expected[n - 1], "pebbling path:" + std::to_string(n) + " gave " +
                                                  std::to_string(got) + ", wanted " +
                                                  std::to_string(path_expected[n - 1]));
  }
  auto frozen = [](const std::string& token) -> Count {
    if (token == "cycle:5") return 5;
    if (token == "cycle:7") return 11;
    if (token == "caterpillar:3") return 5;
    if (token == "petersen") return 10;
    return -1;
  };
  for (const auto& token : small_corpus()) {
    Graph g = family(token);
    Count r = rho(g), p = pi(g);
    ok &= expect(r <= p, token + " has rubbling " + std::to_string(r) +
                             " above pebbling " + std::to_string(p));
    ok &= expect(p >= g.vertex_count(), token + " pebbling " + std::to_string(p) +
                                            " fell below the vertex count");
    Count want = frozen(token);
    if (want >= 0)
      ok &= expect(p == want, token + " pebbling gave " + std::to_string(p) + ", wanted " +
                                  std::to_string(want));
  }
  return ok;
}

bool criterion7() {
  // every labeled connected graph on up to 5 vertices, from raw edge subsets
  const int expected_counts[] = {1, 1, 4, 38, 728};
  bool ok = true;
  long long disagreements = 0, queries = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> all_edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all_edges.push_back({u, v});
    int connected = 0;
    for (unsigned mask = 0; mask < (1u << all_edges.size()); ++mask) {
      std::vector<Edge> edges;
      for (size_t i = 0; i < all_edges.size(); ++i)
        if (mask & (1u << i)) edges.push_back(all_edges[i]);
      std::optional<Graph> built;
      try {
        built.emplace(Graph::from_edges(n, edges));
      } catch (const InvalidArgumentError&) {
        continue;  // disconnected subset
      }
      const Graph& g = *built;
      ++connected;
      ReachabilityOracle oracle(g, 4);
      for (Vertex t = 0; t < n; ++t) {
        ReachabilitySearch search(g, t);
        for (Count m = 0; m <= 4; ++m) {
          for_each_distribution(n, m, [&](const PebbleDistribution& p) {
            ++queries;
            if (search.decide(p) != oracle.reachable(p, t)) {
              ++disagreements;
              if (disagreements == 1)
                detail("first disagreement: n=" + std::to_string(n) + " dist " +
                       show(p.counts()) + " target " + std::to_string(t));
            }
            return true;
          });
        }
      }
    }
    ok &= expect(connected == expected_counts[n - 1],
                 std::to_string(n) + "-vertex connected graph count " +
                     std::to_string(connected) + ", wanted " +
                     std::to_string(expected_counts[n - 1]));
  }
  ok &= expect(disagreements == 0,
               std::to_string(disagreements) + " disagreements over " + std::to_string(queries) +
                   " queries");
  return ok;
}

bool criterion8() {
  bool ok = true;
  std::mt19937 rng(20250817);
  int balanced_cases = 0, nonempty_balanced = 0;

  for (int iter = 0; iter < 1000; ++iter) {
    // random connected graph on 2..6 vertices
    std::uniform_int_distribution<int> pick_n(2, 6);
    int n = pick_n(rng);
    std::optional<Graph> built;
    while (!built) {
      std::vector<Edge> edges;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng() & 1) edges.push_back({u, v});
      try {
        built.emplace(Graph::from_edges(n, edges));
      } catch (const InvalidArgumentError&) {
      }
    }
    const Graph& g = *built;

    std::vector<RubblingMove> legal;
    for (Vertex u = 0; u < n; ++u) {
      auto nbrs = g.neighbors(u);
      for (Vertex v : nbrs) legal.push_back(RubblingMove::pebbling(v, u));
      for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
          legal.push_back(RubblingMove::strict(nbrs[i], nbrs[j], u));
    }

    std::uniform_int_distribution<int> pick_k(0, 10);
    std::uniform_int_distribution<size_t> pick_move(0, legal.size() - 1);
    MoveMultiset s;
    int k = pick_k(rng);
    for (int i = 0; i < k; ++i) s.add(legal[pick_move(rng)]);

    auto u = untangle(s, n);
    ok &= expect(TransitionDigraph::of(u, n).acyclic(), "untangled multiset still cyclic");
    ok &= expect(u.submultiset_of(s), "untangled multiset is not contained in the input");
    PebbleFunction zero(n);
    ok &= expect(effect(zero, u).dominates(effect(zero, s)),
                 "untangling decreased the effect somewhere");

    std::uniform_int_distribution<Count> pick_pebbles(0, 2);
    std::vector<Count> counts(n);
    for (auto& c : counts) c = pick_pebbles(rng);
    PebbleDistribution p(counts);

    if (is_balanced(p.function(), u).balanced) {
      ++balanced_cases;
      if (!u.empty()) ++nonempty_balanced;
      try {
        auto ordered = order_executable(p, u);
        auto replay = execute(g, p, ordered);
        ok &= expect(replay.executable, "ordered sequence does not replay");
        ok &= expect(replay.final == effect(p.function(), u),
                     "replayed final differs from the multiset effect");
      } catch (const Error& e) {
        ok &= expect(false, std::string("ordering failed: ") + e.what());
      }
    }
  }
  ok &= expect(balanced_cases > 0, "no balanced acyclic case was generated");
  ok &= expect(nonempty_balanced > 0, "only empty multisets were balanced");
  return ok;
}

// All simple paths with at least one interior vertex, every interior vertex
// of degree 2, deduplicated by orientation.
std::vector<std::vector<Vertex>> interior_paths(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      std::vector<Vertex> path = {a, b};
      while (true) {
        if (path.size() >= 3 && path.front() < path.back()) out.push_back(path);
        Vertex tip = path.back();
        if (g.degree(tip) != 2) break;
        auto nbrs = g.neighbors(tip);
        Vertex next = nbrs[0] == path[path.size() - 2] ? nbrs[1] : nbrs[0];
        if (std::find(path.begin(), path.end(), next) != path.end()) break;
        path.push_back(next);
      }
    }
  }
  return out;
}

bool criterion9() {
  bool ok = true;
  long long rolls_tested = 0;
  std::vector<std::string> tokens;
  for (int n = 1; n <= 6; ++n) tokens.push_back("path:" + std::to_string(n));
  for (int n = 3; n <= 7; ++n) tokens.push_back("cycle:" + std::to_string(n));

  for (const auto& token : tokens) {
    Graph g = family(token);
    int n = g.vertex_count();
    std::vector<ReachabilitySearch> searchers;
    for (Vertex t = 0; t < n; ++t) searchers.emplace_back(g, t);
    auto arms = find_arms(g);
    auto paths = interior_paths(g);

    auto check_roll = [&](const PebbleDistribution& p, const PebbleDistribution& q) {
      ++rolls_tested;
      for (Vertex t = 0; t < n; ++t) {
        if (searchers[t].decide(p) && !searchers[t].decide(q)) {
          ok &= expect(false, token + ": roll " + show(p.counts()) + " -> " + show(q.counts()) +
                                  " lost target " + std::to_string(t));
          return;
        }
      }
    };

    for (Count m = 0; m <= 6; ++m) {
      for_each_distribution(n, m, [&](const PebbleDistribution& p) {
        for (const auto& arm : arms)
          for (int src = 0; src + 1 < static_cast<int>(arm.vertices.size()); ++src) {
            try {
              check_roll(p, single_roll(g, p, arm, src));
            } catch (const PreconditionError&) {
            }
          }
        for (const auto& path : paths)
          for (int src = 1; src + 1 < static_cast<int>(path.size()); ++src) {
            try {
              check_roll(p, double_roll(g, p, path, src));
            } catch (const PreconditionError&) {
            }
          }
        return true;
      });
    }
  }
  ok &= expect(rolls_tested > 0, "no legal roll was exercised");
  return ok;
}

bool criterion10() {
  bool ok = true;
  SolveOptions full;
  full.squish = false;
  for (const char* token : {"cycle:5", "cycle:7", "path:5"}) {
    Count squished = rho(family(token));
    Count exhaustive = rho(family(token), full);
    ok &= expect(squished == exhaustive, std::string(token) + ": squished " +
                                             std::to_string(squished) + " vs full " +
                                             std::to_string(exhaustive));
  }
  return ok;
}

bool criterion11() {
  bool ok = true;
  for (int k = 1; k <= 4; ++k) {
    auto [a, b] = odd_cycle_extremal_pair(k);
    auto bounds = odd_cycle_bounds(k, a, b);
    ok &= expect(bounds.bound1a, "k=" + std::to_string(k) + " violates the doubled first bound");
    ok &= expect(bounds.bound2a, "k=" + std::to_string(k) + " violates the doubled second bound");
    Count expected_total = floor_div(checked_mul(7, checked_pow2(k - 1)) - 2, 3);
    ok &= expect(a + b == expected_total,
                 "k=" + std::to_string(k) + " pair sums to " + std::to_string(a + b) +
                     ", wanted " + std::to_string(expected_total));
  }
  return ok;
}

}  // namespace

int main() {
  report(1, "path rubbling numbers double per vertex (n=1..5, exhaustive)", criterion1());
  report(2, "cycle rubbling numbers match the even and odd formulas (n=3..7)", criterion2());
  report(3, "dense family rubbling numbers (complete, wheel, bipartite, cube, star)",
         criterion3());
  report(4, "petersen rubbling number is 5 with a failing 4-pebble witness", criterion4());
  report(5, "optimal rubbling numbers across the catalogue", criterion5());
  report(6, "pebbling-only mode reproduces path values and dominates rubbling", criterion6());
  report(7, "search equals the exhaustive oracle on every small connected graph", criterion7());
  report(8, "untangling is acyclic, contained, effect-monotone, and orderable", criterion8());
  report(9, "rolling moves never lose a reachable target", criterion9());
  report(10, "squished and full enumeration find the same rubbling numbers", criterion10());
  report(11, "odd cycle extremal pairs meet the arithmetic bounds exactly", criterion11());

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
