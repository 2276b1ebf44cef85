#include "rubbling/engine.hpp"

#include <algorithm>
#include <functional>

namespace rubbling {

namespace {

// Every move usable on g under the given move set, sorted.
std::vector<RubblingMove> moves_for(const Graph& g, MoveSet move_set) {
  std::vector<RubblingMove> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nbrs = g.neighbors(u);
    for (Vertex v : nbrs) out.push_back(RubblingMove::pebbling(v, u));
    if (move_set == MoveSet::rubbling) {
      for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
          out.push_back(RubblingMove::strict(nbrs[i], nbrs[j], u));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Count PebbleFunction::total() const {
  Count sum = 0;
  for (Count c : counts_) sum = checked_add(sum, c);
  return sum;
}

bool PebbleFunction::nonnegative() const {
  return std::all_of(counts_.begin(), counts_.end(), [](Count c) { return c >= 0; });
}

bool PebbleFunction::dominates(const PebbleFunction& other) const {
  if (counts_.size() != other.counts_.size()) return false;
  for (size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] < other.counts_[i]) return false;
  return true;
}

PebbleDistribution::PebbleDistribution(std::vector<Count> counts) : f_(std::move(counts)) {
  for (Vertex v = 0; v < f_.vertex_count(); ++v)
    if (f_[v] < 0)
      throw InvalidArgumentError("negative pebble count " + std::to_string(f_[v]) + " at vertex " +
                                 std::to_string(v));
}

PebbleDistribution PebbleDistribution::from_function(const PebbleFunction& f) {
  return PebbleDistribution(f.counts());
}

void PebbleDistribution::set(Vertex v, Count c) {
  if (c < 0) throw InvalidArgumentError("negative pebble count at vertex " + std::to_string(v));
  f_[v] = c;
}

RubblingMove RubblingMove::strict(Vertex v, Vertex w, Vertex u) {
  if (v == w) throw InvalidArgumentError("strict move needs two distinct sources");
  if (v > w) std::swap(v, w);
  return RubblingMove(v, w, u);
}

RubblingMove RubblingMove::make(Vertex v, Vertex w, Vertex u) {
  return v == w ? pebbling(v, u) : strict(v, w, u);
}

bool RubblingMove::valid_for(const Graph& g) const {
  if (u_ < 0 || u_ >= g.vertex_count()) return false;
  if (is_pebbling()) return g.has_edge(v_, u_);
  return g.has_edge(v_, u_) && g.has_edge(w_, u_);
}

std::string RubblingMove::str() const {
  return "(" + std::to_string(v_) + "," + std::to_string(w_) + "->" + std::to_string(u_) + ")";
}

MoveMultiset MoveMultiset::of(std::span<const RubblingMove> sequence) {
  MoveMultiset out;
  for (const auto& m : sequence) out.add(m);
  return out;
}

void MoveMultiset::add(const RubblingMove& m, Count times) {
  if (times < 0) throw InvalidArgumentError("negative multiplicity");
  if (times == 0) return;
  mult_[m] = checked_add(mult_[m], times);
}

void MoveMultiset::remove_one(const RubblingMove& m) {
  auto it = mult_.find(m);
  if (it == mult_.end()) throw InvalidArgumentError("move " + m.str() + " not in multiset");
  if (--it->second == 0) mult_.erase(it);
}

Count MoveMultiset::count(const RubblingMove& m) const {
  auto it = mult_.find(m);
  return it == mult_.end() ? 0 : it->second;
}

Count MoveMultiset::total() const {
  Count sum = 0;
  for (const auto& [m, cnt] : mult_) sum = checked_add(sum, cnt);
  return sum;
}

bool MoveMultiset::submultiset_of(const MoveMultiset& other) const {
  for (const auto& [m, cnt] : mult_)
    if (cnt > other.count(m)) return false;
  return true;
}

std::vector<RubblingMove> MoveMultiset::expand() const {
  std::vector<RubblingMove> out;
  for (const auto& [m, cnt] : mult_)
    for (Count i = 0; i < cnt; ++i) out.push_back(m);
  return out;
}

TransitionDigraph TransitionDigraph::of(const MoveMultiset& moves, int vertex_count) {
  TransitionDigraph d;
  d.in_deg_.assign(vertex_count, 0);
  d.out_deg_.assign(vertex_count, 0);
  for (const auto& [m, cnt] : moves.entries()) {
    d.arrows_[{m.source_a(), m.target()}] += cnt;
    d.arrows_[{m.source_b(), m.target()}] += cnt;
    d.in_deg_[m.target()] += 2 * cnt;
    d.out_deg_[m.source_a()] += cnt;
    d.out_deg_[m.source_b()] += cnt;
  }
  return d;
}

Count TransitionDigraph::arrows(Vertex from, Vertex to) const {
  auto it = arrows_.find({from, to});
  return it == arrows_.end() ? 0 : it->second;
}

Count TransitionDigraph::total_arrows() const {
  Count sum = 0;
  for (const auto& [arrow, cnt] : arrows_) sum += cnt;
  return sum;
}

std::optional<std::vector<Vertex>> TransitionDigraph::find_cycle() const {
  int n = vertex_count();
  std::vector<std::vector<Vertex>> succ(n);
  for (const auto& [arrow, cnt] : arrows_)
    if (cnt > 0) succ[arrow.first].push_back(arrow.second);  // map order keeps these sorted

  enum { white, gray, black };
  std::vector<int> color(n, white);
  std::vector<Vertex> stack;
  std::optional<std::vector<Vertex>> found;

  std::function<bool(Vertex)> visit = [&](Vertex v) -> bool {
    color[v] = gray;
    stack.push_back(v);
    for (Vertex w : succ[v]) {
      if (color[w] == gray) {
        auto at = std::find(stack.begin(), stack.end(), w);
        found.emplace(at, stack.end());
        return true;
      }
      if (color[w] == white && visit(w)) return true;
    }
    color[v] = black;
    stack.pop_back();
    return false;
  };

  for (Vertex v = 0; v < n; ++v)
    if (color[v] == white && visit(v)) return found;
  return std::nullopt;
}

PebbleFunction apply_move(const PebbleFunction& p, const RubblingMove& m) {
  if (m.target() < 0 || m.target() >= p.vertex_count() || m.source_a() < 0 ||
      m.source_b() >= p.vertex_count())
    throw InvalidArgumentError("move " + m.str() + " out of range");
  PebbleFunction out = p;
  out[m.source_a()] = checked_sub(out[m.source_a()], 1);
  out[m.source_b()] = checked_sub(out[m.source_b()], 1);
  out[m.target()] = checked_add(out[m.target()], 1);
  return out;
}

ExecutionResult execute(const Graph& g, const PebbleDistribution& start,
                        std::span<const RubblingMove> moves) {
  if (start.vertex_count() != g.vertex_count())
    throw InvalidArgumentError("distribution length does not match the graph");
  for (size_t i = 0; i < moves.size(); ++i)
    if (!moves[i].valid_for(g))
      throw InvalidArgumentError("move " + std::to_string(i) + " " + moves[i].str() +
                                 " does not fit the graph");
  ExecutionResult res{start.function(), true, -1};
  for (size_t i = 0; i < moves.size(); ++i) {
    res.final = apply_move(res.final, moves[i]);
    if (res.executable && !res.final.nonnegative()) {
      res.executable = false;
      res.failed_at = static_cast<int>(i);
    }
  }
  return res;
}

PebbleFunction effect(const PebbleFunction& start, const MoveMultiset& moves) {
  // Per vertex this adds (in-degree)/2 - out-degree of the transition
  // digraph: each move targeting v contributes two arrows in and one pebble,
  // each source slot at v one arrow out and minus one pebble.
  PebbleFunction out = start;
  for (const auto& [m, cnt] : moves.entries()) {
    out[m.source_a()] = checked_sub(out[m.source_a()], cnt);
    out[m.source_b()] = checked_sub(out[m.source_b()], cnt);
    out[m.target()] = checked_add(out[m.target()], cnt);
  }
  return out;
}

BalanceReport is_balanced(const PebbleFunction& start, const MoveMultiset& moves) {
  PebbleFunction slack = effect(start, moves);
  return {slack.nonnegative(), std::move(slack)};
}

MoveMultiset untangle(const MoveMultiset& moves, int vertex_count) {
  MoveMultiset rest = moves;
  while (true) {
    auto cycle = TransitionDigraph::of(rest, vertex_count).find_cycle();
    if (!cycle) return rest;
    // Drop one owning move per cycle arrow.  The cycle is vertex-simple, so
    // its arrows have pairwise distinct heads and every arrow's owner is
    // still present when we get to it (moves removed for other arrows target
    // other heads).  Removing an owner also deletes its sibling arrow, which
    // only lowers in-degrees on the cycle; that is what makes the remaining
    // multiset's final counts dominate the original's.
    const auto& c = *cycle;
    for (size_t i = 0; i < c.size(); ++i) {
      Vertex tail = c[i], head = c[(i + 1) % c.size()];
      std::optional<RubblingMove> owner;
      for (const auto& [m, cnt] : rest.entries()) {
        if (m.target() == head && (m.source_a() == tail || m.source_b() == tail)) {
          owner = m;
          break;
        }
      }
      rest.remove_one(*owner);
    }
  }
}

std::vector<RubblingMove> order_executable(const PebbleDistribution& p, const MoveMultiset& moves) {
  int n = p.vertex_count();
  if (!TransitionDigraph::of(moves, n).acyclic())
    throw PreconditionError("cannot order a cyclic move multiset");
  if (!is_balanced(p.function(), moves).balanced)
    throw PreconditionError("cannot order a multiset that is not balanced at the start");

  MoveMultiset rest = moves;
  std::vector<Count> in_deg(n, 0);
  for (const auto& [m, cnt] : rest.entries()) in_deg[m.target()] += 2 * cnt;

  std::vector<RubblingMove> seq;
  while (!rest.empty()) {
    // An acyclic multiset always has a move whose sources nothing else still
    // feeds; balance then guarantees the sources already hold enough pebbles.
    std::optional<RubblingMove> pick;
    for (const auto& [m, cnt] : rest.entries()) {
      if (in_deg[m.source_a()] == 0 && in_deg[m.source_b()] == 0) {
        pick = m;
        break;
      }
    }
    if (!pick) throw PreconditionError("no emittable move left; multiset must be cyclic");
    seq.push_back(*pick);
    in_deg[pick->target()] -= 2;
    rest.remove_one(*pick);
  }
  return seq;
}

bool check_certificate(const Graph& g, const Certificate& cert) {
  if (cert.target < 0 || cert.target >= g.vertex_count()) return false;
  if (cert.start.vertex_count() != g.vertex_count()) return false;
  for (const auto& m : cert.moves)
    if (!m.valid_for(g)) return false;

  auto res = execute(g, cert.start, cert.moves);
  if (!res.executable || res.final[cert.target] < 1) return false;

  if (cert.acyclic) {
    auto multiset = MoveMultiset::of(cert.moves);
    if (!TransitionDigraph::of(multiset, g.vertex_count()).acyclic()) return false;
    // No pair of moves may shuttle across one edge in both directions.
    for (size_t i = 0; i < cert.moves.size(); ++i)
      for (size_t j = i + 1; j < cert.moves.size(); ++j) {
        const auto& a = cert.moves[i];
        const auto& b = cert.moves[j];
        bool a_feeds_b = b.source_a() == a.target() || b.source_b() == a.target();
        bool b_undoes_a = a.source_a() == b.target() || a.source_b() == b.target();
        if (a_feeds_b && b_undoes_a) return false;
      }
  }
  return true;
}

size_t ReachabilitySearch::VecHash::operator()(const std::vector<Count>& v) const noexcept {
  size_t h = v.size();
  for (Count c : v) h ^= std::hash<Count>{}(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

ReachabilitySearch::ReachabilitySearch(const Graph& g, Vertex target, MoveSet move_set)
    : g_(&g), target_(target), moves_(moves_for(g, move_set)) {
  if (target < 0 || target >= g.vertex_count())
    throw InvalidArgumentError("target vertex " + std::to_string(target) + " out of range");
}

bool ReachabilitySearch::dfs(std::vector<Count>& state, Count pebbles,
                             std::vector<RubblingMove>* path) {
  if (state[target_] >= 1) return true;
  if (pebbles >= 2) {  // a single pebble off the target can never move
    if (dead_.contains(state)) {
      ++stats_.cache_hits;
      return false;
    }
    for (const auto& m : moves_) {
      Count& a = state[m.source_a()];
      Count& b = state[m.source_b()];
      bool runnable = m.is_pebbling() ? a >= 2 : (a >= 1 && b >= 1);
      if (!runnable) continue;
      --a, --b, ++state[m.target()];
      if (path) path->push_back(m);
      if (dfs(state, pebbles - 1, path)) {
        ++a, ++b, --state[m.target()];
        return true;
      }
      if (path) path->pop_back();
      ++a, ++b, --state[m.target()];
    }
    dead_.insert(state);
  }
  ++stats_.states_expanded;
  return false;
}

bool ReachabilitySearch::decide(const PebbleDistribution& start) {
  if (start.vertex_count() != g_->vertex_count())
    throw InvalidArgumentError("distribution length does not match the graph");
  std::vector<Count> state = start.counts();
  return dfs(state, start.size(), nullptr);
}

std::optional<Certificate> ReachabilitySearch::certify(const PebbleDistribution& start) {
  if (start.vertex_count() != g_->vertex_count())
    throw InvalidArgumentError("distribution length does not match the graph");
  std::vector<Count> state = start.counts();
  std::vector<RubblingMove> path;
  if (!dfs(state, start.size(), &path)) return std::nullopt;
  // The raw path is executable but may waste pebbles shuttling them around;
  // untangling trims it to an acyclic submultiset that still covers the
  // target, and the orderer rebuilds an executable sequence from that.
  MoveMultiset trimmed = untangle(MoveMultiset::of(path), g_->vertex_count());
  Certificate cert;
  cert.start = start;
  cert.target = target_;
  cert.moves = order_executable(start, trimmed);
  cert.acyclic = true;
  return cert;
}

ReachResult is_reachable(const Graph& g, const PebbleDistribution& p, Vertex target,
                         MoveSet move_set) {
  ReachabilitySearch search(g, target, move_set);
  auto cert = search.certify(p);
  return {cert.has_value(), std::move(cert)};
}

ReachabilityOracle::ReachabilityOracle(const Graph& g, Count max_pebbles, MoveSet move_set)
    : vertex_count_(g.vertex_count()), max_pebbles_(max_pebbles) {
  if (g.vertex_count() > 6)
    throw ResourceError("oracle enumeration is limited to 6 vertices, got " +
                        std::to_string(g.vertex_count()));
  if (max_pebbles > 6)
    throw ResourceError("oracle enumeration is limited to 6 pebbles, got " +
                        std::to_string(max_pebbles));
  if (max_pebbles < 0) throw InvalidArgumentError("max_pebbles must be nonnegative");

  auto moves = moves_for(g, move_set);
  Count move_budget = std::max<Count>(0, max_pebbles - 1);

  // Depth-first walk over multisets in nondecreasing move order.  Growing a
  // multiset never removes a cycle from its transition digraph, so a cyclic
  // node prunes its whole subtree.  Distinct multisets with equal per-vertex
  // deltas answer every query identically; keep one entry per delta with the
  // least move count.
  std::map<std::vector<Count>, Count> best;
  MoveMultiset current;
  std::vector<Count> delta(vertex_count_, 0);
  std::function<void(size_t, Count)> extend = [&](size_t from, Count used) {
    auto [it, fresh] = best.try_emplace(delta, used);
    if (!fresh) it->second = std::min(it->second, used);
    if (used == move_budget) return;
    for (size_t i = from; i < moves.size(); ++i) {
      const auto& m = moves[i];
      current.add(m);
      if (TransitionDigraph::of(current, vertex_count_).acyclic()) {
        --delta[m.source_a()], --delta[m.source_b()], ++delta[m.target()];
        extend(i, used + 1);
        ++delta[m.source_a()], ++delta[m.source_b()], --delta[m.target()];
      }
      current.remove_one(m);
    }
  };
  extend(0, 0);

  for (auto& [d, cnt] : best) entries_.push_back({cnt, d});
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.move_count < b.move_count; });
}

bool ReachabilityOracle::reachable(const PebbleDistribution& p, Vertex target) const {
  return reachable_targets(p)[target] != 0;
}

std::vector<char> ReachabilityOracle::reachable_targets(const PebbleDistribution& p) const {
  if (p.vertex_count() != vertex_count_)
    throw InvalidArgumentError("distribution length does not match the oracle's graph");
  if (p.size() > max_pebbles_)
    throw ResourceError("oracle table was built for at most " + std::to_string(max_pebbles_) +
                        " pebbles");
  std::vector<char> out(vertex_count_, 0);
  Count budget = p.size() - 1;
  for (const auto& e : entries_) {
    if (e.move_count > budget) break;
    bool balanced = true;
    for (Vertex v = 0; v < vertex_count_ && balanced; ++v) balanced = p[v] + e.delta[v] >= 0;
    if (!balanced) continue;
    for (Vertex v = 0; v < vertex_count_; ++v)
      if (p[v] + e.delta[v] >= 1) out[v] = 1;
  }
  return out;
}

bool reachability_oracle(const Graph& g, const PebbleDistribution& p, Vertex target) {
  if (p.size() > 6)
    throw ResourceError("oracle enumeration is limited to 6 pebbles, got " +
                        std::to_string(p.size()));
  return ReachabilityOracle(g, p.size()).reachable(p, target);
}

void for_each_distribution(int vertex_count, Count pebbles,
                           const std::function<bool(const PebbleDistribution&)>& consume) {
  if (vertex_count < 1 || pebbles < 0) return;
  std::vector<Count> cur(vertex_count, 0);
  bool stop = false;
  std::function<void(int, Count)> place = [&](int idx, Count left) {
    if (stop) return;
    if (idx == vertex_count - 1) {
      cur[idx] = left;
      if (!consume(PebbleDistribution(cur))) stop = true;
      cur[idx] = 0;
      return;
    }
    for (Count c = 0; c <= left && !stop; ++c) {
      cur[idx] = c;
      place(idx + 1, left - c);
    }
    cur[idx] = 0;
  };
  place(0, pebbles);
}

}  // namespace rubbling
