#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rubbling/engine.hpp"
#include "rubbling/graph.hpp"

namespace rubbling {

// Distribution text format: comma-separated counts, one per vertex, e.g.
// "0,0,0,8".  parse_distribution enforces the expected length and rejects
// negatives; malformed text raises ParseError.
std::string format_distribution(const PebbleDistribution& p);
PebbleDistribution parse_distribution(const std::string& text, int vertex_count);

// Move text format: "(v,w->u)".  A pebbling step writes its source twice,
// e.g. "(3,3->2)".
std::string format_move(const RubblingMove& m);
RubblingMove parse_move(const std::string& text);

// One move per line; '#' starts a comment and blank lines are skipped.
// Errors carry the 1-based line number.
std::vector<RubblingMove> parse_moves(std::istream& in);
std::vector<RubblingMove> parse_moves_text(const std::string& text);
std::string format_moves(std::span<const RubblingMove> moves);

// Graph spec grammar used by the command-line tool: a family token such as
// "cycle:6" or "@graph.edges" to load an edge list file.
Graph load_graph_spec(const std::string& spec);

// The transition digraph of a move multiset in DOT form, one line per arrow
// with parallel arrows repeated, every vertex declared.
std::string export_dot(const Graph& g, const MoveMultiset& moves);

}  // namespace rubbling
