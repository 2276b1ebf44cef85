#include "rubbling/format.hpp"

#include <fstream>
#include <sstream>

namespace rubbling {

std::string format_distribution(const PebbleDistribution& p) {
  std::string out;
  for (Vertex v = 0; v < p.vertex_count(); ++v) {
    if (v) out += ',';
    out += std::to_string(p[v]);
  }
  return out;
}

namespace {

std::string trimmed(const std::string& s) {
  size_t from = s.find_first_not_of(" \t");
  if (from == std::string::npos) return "";
  return s.substr(from, s.find_last_not_of(" \t") - from + 1);
}

}  // namespace

PebbleDistribution parse_distribution(const std::string& text, int vertex_count) {
  std::vector<Count> counts;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = trimmed(
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    try {
      size_t used = 0;
      counts.push_back(std::stoll(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw ParseError("bad pebble count '" + piece + "' in distribution '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(counts.size()) != vertex_count)
    throw ParseError("distribution has " + std::to_string(counts.size()) + " counts, graph has " +
                     std::to_string(vertex_count) + " vertices");
  // negative counts fall through to the distribution's own validation
  return PebbleDistribution(std::move(counts));
}

std::string format_move(const RubblingMove& m) { return m.str(); }

RubblingMove parse_move(const std::string& text) {
  Vertex v, w, u;
  char open, comma, dash, gt, close;
  std::istringstream in(text);
  if (!(in >> open >> v >> comma >> w >> dash >> gt >> u >> close) || open != '(' ||
      comma != ',' || dash != '-' || gt != '>' || close != ')')
    throw ParseError("bad move '" + text + "', expected (v,w->u)");
  std::string extra;
  if (in >> extra) throw ParseError("trailing text after move '" + text + "'");
  if (v < 0 || w < 0 || u < 0) throw ParseError("negative vertex in move '" + text + "'");
  return RubblingMove::make(v, w, u);
}

std::vector<RubblingMove> parse_moves(std::istream& in) {
  std::vector<RubblingMove> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string token;
    std::istringstream probe(line);
    if (!(probe >> token)) continue;
    std::string extra;
    if (probe >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": one move per line");
    try {
      out.push_back(parse_move(token));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::vector<RubblingMove> parse_moves_text(const std::string& text) {
  std::istringstream in(text);
  return parse_moves(in);
}

std::string format_moves(std::span<const RubblingMove> moves) {
  std::string out;
  for (const auto& m : moves) out += m.str() + "\n";
  return out;
}

Graph load_graph_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::string path = spec.substr(1);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list file '" + path + "'");
    return parse_edge_list(in);
  }
  return build_family(FamilySpec::parse(spec));
}

std::string export_dot(const Graph& g, const MoveMultiset& moves) {
  auto digraph = TransitionDigraph::of(moves, g.vertex_count());
  std::ostringstream out;
  out << "digraph transition {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [arrow, cnt] : digraph.arrow_multiset())
    for (Count i = 0; i < cnt; ++i)
      out << "  " << arrow.first << " -> " << arrow.second << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rubbling
