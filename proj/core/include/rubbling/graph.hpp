#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rubbling/types.hpp"

namespace rubbling {

// Undirected edge with endpoints normalized so that first < second.
using Edge = std::pair<Vertex, Vertex>;

enum class FamilyKind {
  path,
  cycle,
  complete,
  wheel,
  complete_bipartite,
  hypercube,
  petersen,
  caterpillar,
};

// A named graph family instance, e.g. {cycle, {6}} or {caterpillar, {1, 1}}.
struct FamilySpec {
  FamilyKind kind;
  std::vector<int> params;

  // Textual form: "path:5", "kbipartite:3,4", "petersen",
  // "caterpillar:1,0,2".  parse throws ParseError on malformed input.
  static FamilySpec parse(const std::string& token);
  std::string str() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Provenance note attached to generated graphs.  vertex_transitive is declared
// by the generator for families where every vertex looks alike; graphs read
// from edge lists never carry the flag, and the solver then tries every
// target.
struct FamilyTag {
  FamilySpec spec;
  bool vertex_transitive = false;
  std::string labeling;  // one-line description of the canonical labels
};

// Maximal run of degree-2 vertices, listed in path order.  When the whole
// graph is a cycle every vertex has degree 2 and the single component closes
// on itself; it is reported once, in cycle order, with the flag set.
struct Thread {
  std::vector<Vertex> vertices;
  bool closes_cycle = false;
};

// Leaf v_1 followed by its chain of degree-2 vertices, ending at the first
// vertex of other degree (a junction, or the far leaf of a path graph).  The
// terminal vertex is included: rolling moves deliver a pebble onto it.
struct Arm {
  std::vector<Vertex> vertices;
};

// Simple connected undirected graph over vertices 0..n-1.
class Graph {
 public:
  // Validates simplicity and connectivity; throws InvalidArgumentError naming
  // the offending edge or component otherwise.  Edges may arrive in any order
  // and orientation.
  static Graph from_edges(int vertex_count, std::vector<Edge> edges,
                          std::optional<FamilyTag> tag = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;

  const std::optional<FamilyTag>& family() const { return family_; }
  bool vertex_transitive() const { return family_ && family_->vertex_transitive; }

  // Inverse of parse_edge_list: header line with the vertex count, then one
  // "u v" line per edge in sorted order.
  std::string render_edge_list() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;
  int vertex_count_ = 0;
  std::vector<Edge> edges_;              // sorted, normalized
  std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
  std::optional<FamilyTag> family_;
};

// Builds the canonical representative of a family instance.  Labelings:
//   path:N         0 - 1 - ... - N-1
//   cycle:N        ring 0 - 1 - ... - N-1 - 0
//   complete:N     all pairs
//   wheel:N        hub 0, rim 1..N in a cycle, hub joined to every rim vertex
//   kbipartite:M,N part A = 0..M-1, part B = M..M+N-1
//   hypercube:N    vertex index read as an N-bit string, edges flip one bit
//   petersen       outer ring 0..4, inner 5..9 with step-2 chords, spokes i,i+5
//   caterpillar:L1,...,Ls
//                  spine path 0..s-1, then legs grouped by spine vertex
// Throws InvalidArgumentError for parameters outside each family's range.
Graph build_family(const FamilySpec& spec);

// Reads "first non-comment line = vertex count, then one edge per line".
// '#' starts a comment; blank lines are skipped.  Malformed lines raise
// ParseError with the 1-based line number; structural problems (loops,
// duplicates, out-of-range endpoints, disconnected input) raise
// InvalidArgumentError.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);

// Eccentricity maximum via BFS from every vertex.  A single-vertex graph has
// diameter 0.
int diameter(const Graph& g);

// All maximal threads, pairwise vertex-disjoint, each listed from its
// lower-numbered end.  See Thread for the all-degree-2 cycle case.
std::vector<Thread> find_threads(const Graph& g);

// All maximal arms, one per leaf, ordered by leaf index.  A path graph yields
// both orientations; a cycle yields none.
std::vector<Arm> find_arms(const Graph& g);

}  // namespace rubbling
