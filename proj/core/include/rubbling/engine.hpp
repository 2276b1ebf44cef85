#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rubbling/graph.hpp"
#include "rubbling/types.hpp"

namespace rubbling {

// Signed pebble counts indexed by vertex.  Intermediate bookkeeping (balance
// slack, effects of hypothetical move multisets) legitimately goes negative;
// see PebbleDistribution for the nonnegative starting configurations.
class PebbleFunction {
 public:
  PebbleFunction() = default;
  explicit PebbleFunction(int vertex_count) : counts_(vertex_count, 0) {}
  explicit PebbleFunction(std::vector<Count> counts) : counts_(std::move(counts)) {}

  int vertex_count() const { return static_cast<int>(counts_.size()); }
  Count operator[](Vertex v) const { return counts_[v]; }
  Count& operator[](Vertex v) { return counts_[v]; }
  const std::vector<Count>& counts() const { return counts_; }

  Count total() const;
  bool nonnegative() const;
  // Pointwise >=.
  bool dominates(const PebbleFunction& other) const;

  friend auto operator<=>(const PebbleFunction&, const PebbleFunction&) = default;

 private:
  std::vector<Count> counts_;
};

// Nonnegative pebble placement; the only legal starting configuration.
class PebbleDistribution {
 public:
  PebbleDistribution() = default;
  explicit PebbleDistribution(int vertex_count) : f_(vertex_count) {}
  // Throws InvalidArgumentError if any count is negative.
  explicit PebbleDistribution(std::vector<Count> counts);
  static PebbleDistribution from_function(const PebbleFunction& f);

  int vertex_count() const { return f_.vertex_count(); }
  Count operator[](Vertex v) const { return f_[v]; }
  void set(Vertex v, Count c);
  Count size() const { return f_.total(); }
  const PebbleFunction& function() const { return f_; }
  const std::vector<Count>& counts() const { return f_.counts(); }

  friend auto operator<=>(const PebbleDistribution&, const PebbleDistribution&) = default;

 private:
  PebbleFunction f_;
};

// A move takes one pebble from each of two source slots and puts one pebble
// on the target.  Both sources equal means the classic two-from-one step; two
// distinct sources (each adjacent to the target) is the strict variant.
// Sources are stored sorted, so (v,w->u) and (w,v->u) compare equal.
class RubblingMove {
 public:
  static RubblingMove pebbling(Vertex v, Vertex u) { return RubblingMove(v, v, u); }
  // Throws InvalidArgumentError when v == w.
  static RubblingMove strict(Vertex v, Vertex w, Vertex u);
  static RubblingMove make(Vertex v, Vertex w, Vertex u);

  Vertex source_a() const { return v_; }
  Vertex source_b() const { return w_; }
  Vertex target() const { return u_; }
  bool is_pebbling() const { return v_ == w_; }

  // Pebbling moves need the edge {v,u}; strict moves need both sources
  // adjacent to the target.
  bool valid_for(const Graph& g) const;

  std::string str() const;

  friend auto operator<=>(const RubblingMove&, const RubblingMove&) = default;

 private:
  RubblingMove(Vertex v, Vertex w, Vertex u) : v_(v), w_(w), u_(u) {}
  Vertex v_, w_, u_;
};

// Multiset of moves with deterministic (sorted) iteration order.
class MoveMultiset {
 public:
  MoveMultiset() = default;
  static MoveMultiset of(std::span<const RubblingMove> sequence);

  void add(const RubblingMove& m, Count times = 1);
  // Throws InvalidArgumentError if m is not present.
  void remove_one(const RubblingMove& m);
  Count count(const RubblingMove& m) const;
  Count total() const;
  bool empty() const { return mult_.empty(); }
  bool submultiset_of(const MoveMultiset& other) const;

  const std::map<RubblingMove, Count>& entries() const { return mult_; }
  // Every instance listed separately, sorted.
  std::vector<RubblingMove> expand() const;

  friend bool operator==(const MoveMultiset&, const MoveMultiset&) = default;

 private:
  std::map<RubblingMove, Count> mult_;
};

// Directed multigraph tracking where a move multiset takes pebbles from and
// to: each move contributes one arrow from each source slot into its target,
// so in-degrees are always even and arrows total twice the move count.
class TransitionDigraph {
 public:
  static TransitionDigraph of(const MoveMultiset& moves, int vertex_count);

  int vertex_count() const { return static_cast<int>(in_deg_.size()); }
  Count in_degree(Vertex v) const { return in_deg_[v]; }
  Count out_degree(Vertex v) const { return out_deg_[v]; }
  Count arrows(Vertex from, Vertex to) const;
  Count total_arrows() const;
  const std::map<std::pair<Vertex, Vertex>, Count>& arrow_multiset() const { return arrows_; }

  bool acyclic() const { return !find_cycle().has_value(); }
  // Deterministic first directed cycle: depth-first search rooted at vertices
  // in increasing order, successors explored in increasing order.  Returns
  // the cycle's vertices v0, v1, ..., vk with an arrow vi -> vi+1 and
  // vk -> v0.
  std::optional<std::vector<Vertex>> find_cycle() const;

 private:
  std::map<std::pair<Vertex, Vertex>, Count> arrows_;
  std::vector<Count> in_deg_, out_deg_;
};

// Pure arithmetic: one pebble off each source slot, one onto the target.  No
// nonnegativity requirement; see execute for checked replay.
PebbleFunction apply_move(const PebbleFunction& p, const RubblingMove& m);

struct ExecutionResult {
  PebbleFunction final;   // counts after the whole sequence
  bool executable;        // true iff every prefix stays nonnegative
  int failed_at = -1;     // index of the first move that went negative
};

// Replays a move sequence from a distribution.  Moves must fit the graph;
// InvalidArgumentError otherwise.
ExecutionResult execute(const Graph& g, const PebbleDistribution& start,
                        std::span<const RubblingMove> moves);

// Final pebble counts after a multiset: start plus, per vertex, half the
// in-degree minus the out-degree in the transition digraph.  Order-free.
PebbleFunction effect(const PebbleFunction& start, const MoveMultiset& moves);

struct BalanceReport {
  bool balanced;         // effect nonnegative everywhere
  PebbleFunction slack;  // the effect itself, negative where unbalanced
};

BalanceReport is_balanced(const PebbleFunction& start, const MoveMultiset& moves);

// Removes directed cycles from the multiset: find a cycle in the transition
// digraph, drop the moves owning its arrows, repeat.  The result is an
// acyclic submultiset whose effect dominates the input's pointwise, and the
// fixed cycle-finding order makes the output deterministic.
MoveMultiset untangle(const MoveMultiset& moves, int vertex_count);

// Arranges an acyclic balanced multiset into an executable sequence by
// repeatedly emitting the least move whose source vertices have in-degree 0
// among the moves still pending.  Throws PreconditionError if the multiset is
// cyclic or not balanced at p.
std::vector<RubblingMove> order_executable(const PebbleDistribution& p, const MoveMultiset& moves);

// Which moves a searcher may use.
enum class MoveSet {
  rubbling,  // two-from-one and strict moves
  pebbling,  // two-from-one only
};

// Replayable proof that target is coverable from start.  When acyclic is set
// the move multiset's transition digraph is claimed cycle-free (so no pair of
// moves shuttles pebbles both ways across one edge).
struct Certificate {
  PebbleDistribution start;
  Vertex target = 0;
  std::vector<RubblingMove> moves;
  bool acyclic = false;
};

// True iff the certificate replays without going negative, ends with a pebble
// on the target, uses only moves valid for g, and honors its acyclic claim.
bool check_certificate(const Graph& g, const Certificate& cert);

struct SearchStats {
  Count states_expanded = 0;  // distributions fully explored
  Count cache_hits = 0;       // revisits answered by the memo
};

// Decides coverability of one fixed target by depth-first search over
// distributions, memoizing dead states.  Every move drops the pebble total by
// one, so the search depth is bounded by |p| and the state space by the
// distributions dominated by p.  A searcher may be reused across many start
// distributions against the same graph and target; the memo carries over
// because dead states stay dead.  Not thread-safe; concurrent callers build
// their own searchers.
class ReachabilitySearch {
 public:
  ReachabilitySearch(const Graph& g, Vertex target, MoveSet move_set = MoveSet::rubbling);

  bool decide(const PebbleDistribution& start);
  // As decide, but on success also returns an acyclic executable certificate
  // (the raw search path untangled and reordered).
  std::optional<Certificate> certify(const PebbleDistribution& start);

  const SearchStats& stats() const { return stats_; }

 private:
  bool dfs(std::vector<Count>& state, Count pebbles, std::vector<RubblingMove>* path);

  const Graph* g_;
  Vertex target_;
  std::vector<RubblingMove> moves_;  // all moves valid for g, sorted

  struct VecHash {
    size_t operator()(const std::vector<Count>& v) const noexcept;
  };
  std::unordered_set<std::vector<Count>, VecHash> dead_;
  SearchStats stats_;
};

struct ReachResult {
  bool reachable;
  std::optional<Certificate> certificate;
};

// One-shot convenience wrapper around ReachabilitySearch.
ReachResult is_reachable(const Graph& g, const PebbleDistribution& p, Vertex target,
                         MoveSet move_set = MoveSet::rubbling);

// Independent second opinion used to cross-check ReachabilitySearch: a target
// is coverable iff some acyclic multiset of at most |p|-1 moves is balanced
// at p and leaves a pebble on it.  The constructor enumerates every acyclic
// multiset of at most max_pebbles-1 moves and keeps the distinct effect
// deltas, so queries are table scans.  Deliberately solver-free; exhaustive
// enumeration is the whole point.  Guarded to at most 6 vertices and 6
// pebbles (ResourceError beyond).
class ReachabilityOracle {
 public:
  ReachabilityOracle(const Graph& g, Count max_pebbles, MoveSet move_set = MoveSet::rubbling);

  bool reachable(const PebbleDistribution& p, Vertex target) const;
  // All coverable targets at once; index t true iff t is coverable.
  std::vector<char> reachable_targets(const PebbleDistribution& p) const;

 private:
  struct Entry {
    Count move_count;
    std::vector<Count> delta;  // per-vertex pebble change of the multiset
  };
  int vertex_count_;
  Count max_pebbles_;
  std::vector<Entry> entries_;  // sorted by move_count
};

// One-shot wrapper with the same guards.
bool reachability_oracle(const Graph& g, const PebbleDistribution& p, Vertex target);

// All distributions of exactly `pebbles` pebbles on `vertex_count` vertices,
// in increasing lexicographic order of their count vectors.  The consumer
// returns false to stop early.
void for_each_distribution(int vertex_count, Count pebbles,
                           const std::function<bool(const PebbleDistribution&)>& consume);

}  // namespace rubbling
