#include "rubbling/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <sstream>

namespace rubbling {

namespace {

const char* family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return "path";
    case FamilyKind::cycle: return "cycle";
    case FamilyKind::complete: return "complete";
    case FamilyKind::wheel: return "wheel";
    case FamilyKind::complete_bipartite: return "kbipartite";
    case FamilyKind::hypercube: return "hypercube";
    case FamilyKind::petersen: return "petersen";
    case FamilyKind::caterpillar: return "caterpillar";
  }
  return "?";
}

std::vector<int> parse_int_list(const std::string& text, const std::string& token) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      size_t used = 0;
      int value = std::stoi(piece, &used);
      if (used != piece.size()) throw std::invalid_argument(piece);
      out.push_back(value);
    } catch (const std::exception&) {
      throw ParseError("bad family parameter '" + piece + "' in '" + token + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void require_params(const FamilySpec& spec, size_t n) {
  if (spec.params.size() != n) {
    throw InvalidArgumentError(std::string(family_name(spec.kind)) + " expects " + std::to_string(n) +
                               " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& token) {
  std::string name = token;
  std::string args;
  if (size_t colon = token.find(':'); colon != std::string::npos) {
    name = token.substr(0, colon);
    args = token.substr(colon + 1);
  }
  FamilyKind kind;
  if (name == "path") kind = FamilyKind::path;
  else if (name == "cycle") kind = FamilyKind::cycle;
  else if (name == "complete") kind = FamilyKind::complete;
  else if (name == "wheel") kind = FamilyKind::wheel;
  else if (name == "kbipartite") kind = FamilyKind::complete_bipartite;
  else if (name == "hypercube") kind = FamilyKind::hypercube;
  else if (name == "petersen") kind = FamilyKind::petersen;
  else if (name == "caterpillar") kind = FamilyKind::caterpillar;
  else throw ParseError("unknown graph family '" + name + "'");

  FamilySpec spec{kind, {}};
  if (kind == FamilyKind::petersen) {
    if (!args.empty()) throw ParseError("petersen takes no parameters");
    return spec;
  }
  if (args.empty()) throw ParseError("family '" + name + "' needs parameters, e.g. " + name + ":4");
  spec.params = parse_int_list(args, token);
  size_t want = kind == FamilyKind::complete_bipartite ? 2 : 1;
  if (kind != FamilyKind::caterpillar && spec.params.size() != want) {
    throw ParseError("family '" + name + "' takes " + std::to_string(want) +
                     (want == 1 ? " parameter" : " parameters") + ", got " +
                     std::to_string(spec.params.size()));
  }
  return spec;
}

std::string FamilySpec::str() const {
  std::string out = family_name(kind);
  for (size_t i = 0; i < params.size(); ++i) out += (i == 0 ? ':' : ',') + std::to_string(params[i]);
  return out;
}

Graph Graph::from_edges(int vertex_count, std::vector<Edge> edges, std::optional<FamilyTag> tag) {
  if (vertex_count < 1) throw InvalidArgumentError("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= vertex_count) {
      throw InvalidArgumentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                 "} out of range for " + std::to_string(vertex_count) + " vertices");
    }
    if (u == v) throw InvalidArgumentError("self-loop at vertex " + std::to_string(u));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidArgumentError("duplicate edge {" + std::to_string(dup->first) + "," +
                               std::to_string(dup->second) + "}");
  }

  Graph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.adj_.assign(vertex_count, {});
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity by BFS from vertex 0.
  std::vector<char> seen(vertex_count, 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != vertex_count) {
    throw InvalidArgumentError("graph is disconnected (" + std::to_string(reached) + " of " +
                               std::to_string(vertex_count) + " vertices reachable from 0)");
  }
  g.family_ = std::move(tag);
  return g;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  return {adj_[v].data(), adj_[v].size()};
}

int Graph::degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_ || u == v) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string Graph::render_edge_list() const {
  std::ostringstream out;
  out << vertex_count_ << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

Graph build_family(const FamilySpec& spec) {
  std::vector<Edge> edges;
  int n = 0;
  bool transitive = false;
  std::string labeling;

  switch (spec.kind) {
    case FamilyKind::path: {
      require_params(spec, 1);
      n = spec.params[0];
      if (n < 1) throw InvalidArgumentError("path needs at least 1 vertex");
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      labeling = "consecutive 0..n-1";
      break;
    }
    case FamilyKind::cycle: {
      require_params(spec, 1);
      n = spec.params[0];
      if (n < 3) throw InvalidArgumentError("cycle needs at least 3 vertices");
      for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
      transitive = true;
      labeling = "ring order 0..n-1";
      break;
    }
    case FamilyKind::complete: {
      require_params(spec, 1);
      n = spec.params[0];
      if (n < 1) throw InvalidArgumentError("complete needs at least 1 vertex");
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
      transitive = true;
      labeling = "all pairs";
      break;
    }
    case FamilyKind::wheel: {
      require_params(spec, 1);
      int spokes = spec.params[0];
      if (spokes < 3) throw InvalidArgumentError("wheel needs at least 3 rim vertices");
      n = spokes + 1;
      for (Vertex i = 1; i <= spokes; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, static_cast<Vertex>(i % spokes + 1)});
      }
      labeling = "hub 0, rim 1..n";
      break;
    }
    case FamilyKind::complete_bipartite: {
      require_params(spec, 2);
      int m = spec.params[0], k = spec.params[1];
      if (m < 1 || k < 1) throw InvalidArgumentError("kbipartite needs both parts nonempty");
      n = m + k;
      for (Vertex a = 0; a < m; ++a)
        for (Vertex b = m; b < n; ++b) edges.push_back({a, b});
      labeling = "part A = 0..m-1, part B = m..m+n-1";
      break;
    }
    case FamilyKind::hypercube: {
      require_params(spec, 1);
      int d = spec.params[0];
      if (d < 1) throw InvalidArgumentError("hypercube needs dimension >= 1");
      if (d > 16) throw InvalidArgumentError("hypercube dimension " + std::to_string(d) + " is too large");
      n = 1 << d;
      for (Vertex v = 0; v < n; ++v)
        for (int bit = 0; bit < d; ++bit) {
          Vertex w = v ^ (1 << bit);
          if (v < w) edges.push_back({v, w});
        }
      transitive = true;
      labeling = "index read as bit string";
      break;
    }
    case FamilyKind::petersen: {
      require_params(spec, 0);
      n = 10;
      for (Vertex i = 0; i < 5; ++i) {
        edges.push_back({i, static_cast<Vertex>((i + 1) % 5)});            // outer ring
        edges.push_back({i, static_cast<Vertex>(i + 5)});                  // spoke
        edges.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});  // chord
      }
      transitive = true;
      labeling = "outer 0..4, inner 5..9 with step-2 chords";
      break;
    }
    case FamilyKind::caterpillar: {
      if (spec.params.empty()) throw InvalidArgumentError("caterpillar needs at least one spine vertex");
      int s = static_cast<int>(spec.params.size());
      n = s;
      for (int legs : spec.params) {
        if (legs < 0) throw InvalidArgumentError("caterpillar leg counts must be nonnegative");
        n += legs;
      }
      for (Vertex i = 0; i + 1 < s; ++i) edges.push_back({i, i + 1});
      Vertex next_leg = s;
      for (Vertex i = 0; i < s; ++i)
        for (int l = 0; l < spec.params[i]; ++l) edges.push_back({i, next_leg++});
      labeling = "spine 0..s-1, then legs grouped by spine vertex";
      break;
    }
  }

  return Graph::from_edges(n, std::move(edges), FamilyTag{spec, transitive, labeling});
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<int> vertex_count;
  std::vector<Edge> edges;
  std::vector<int> edge_line;  // provenance for structural error messages

  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    if (!vertex_count) {
      int n;
      if (!(fields >> n)) {
        std::string word;
        std::istringstream probe(line);
        if (!(probe >> word)) continue;  // blank or comment-only line
        throw ParseError("line " + std::to_string(line_no) + ": expected vertex count, got '" + word + "'");
      }
      std::string extra;
      if (fields >> extra)
        throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after vertex count");
      if (n < 1) throw ParseError("line " + std::to_string(line_no) + ": vertex count must be positive");
      vertex_count = n;
      continue;
    }
    int u, v;
    if (!(fields >> u)) {
      std::string word;
      std::istringstream probe(line);
      if (!(probe >> word)) continue;  // blank or comment-only line
      throw ParseError("line " + std::to_string(line_no) + ": expected edge endpoints, got '" +
                       word + "'");
    }
    if (!(fields >> v))
      throw ParseError("line " + std::to_string(line_no) + ": expected two endpoints");
    std::string extra;
    if (fields >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after edge");
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= *vertex_count || v >= *vertex_count)
      throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range");
    Edge e{std::min(u, v), std::max(u, v)};
    for (size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == e)
        throw ParseError("line " + std::to_string(line_no) + ": duplicate of edge on line " +
                         std::to_string(edge_line[i]));
    }
    edges.push_back(e);
    edge_line.push_back(line_no);
  }
  if (!vertex_count) throw ParseError("empty edge list: no vertex count line");
  return Graph::from_edges(*vertex_count, std::move(edges));
}

Graph parse_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

int diameter(const Graph& g) {
  int n = g.vertex_count();
  int best = 0;
  std::vector<int> dist(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      best = std::max(best, dist[v]);
      for (Vertex w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
  }
  return best;
}

std::vector<Thread> find_threads(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> in_set(n, 0);
  for (Vertex v = 0; v < n; ++v) in_set[v] = g.degree(v) == 2;

  // Degree-2 neighbors of a degree-2 vertex, i.e. edges of the induced
  // subgraph.  Its components are paths, except when the whole graph is a
  // cycle and the single component closes on itself.
  auto inside = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
      if (in_set[w]) out.push_back(w);
    return out;
  };

  std::vector<Thread> threads;
  std::vector<char> seen(n, 0);
  for (Vertex start = 0; start < n; ++start) {
    if (!in_set[start] || seen[start]) continue;

    std::vector<Vertex> component{start};
    seen[start] = 1;
    for (size_t i = 0; i < component.size(); ++i)
      for (Vertex w : inside(component[i]))
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }

    std::vector<Vertex> endpoints;
    for (Vertex v : component)
      if (inside(v).size() < 2) endpoints.push_back(v);

    Thread t;
    t.closes_cycle = endpoints.empty();
    // Walk from the canonical first vertex: the smaller endpoint of a path
    // component, or the smallest vertex of the closed cycle (its sorted
    // neighbor list then fixes the direction).
    Vertex first = t.closes_cycle ? *std::min_element(component.begin(), component.end())
                                  : *std::min_element(endpoints.begin(), endpoints.end());
    Vertex prev = -1, cur = first;
    for (size_t step = 0; step < component.size(); ++step) {
      t.vertices.push_back(cur);
      Vertex next = -1;
      for (Vertex w : inside(cur))
        if (w != prev && w != first) {
          next = w;
          break;
        }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    threads.push_back(std::move(t));
  }
  return threads;
}

std::vector<Arm> find_arms(const Graph& g) {
  std::vector<Arm> arms;
  for (Vertex leaf = 0; leaf < g.vertex_count(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    Arm arm;
    arm.vertices.push_back(leaf);
    Vertex prev = leaf, cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      arm.vertices.push_back(cur);
      auto nbrs = g.neighbors(cur);
      Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
    }
    arm.vertices.push_back(cur);
    arms.push_back(std::move(arm));
  }
  return arms;
}

}  // namespace rubbling
