#include "rubbling/reductions.hpp"

#include <algorithm>
#include <string>

namespace rubbling {

namespace {

void require_arm_shape(const Graph& g, const Arm& arm) {
  const auto& a = arm.vertices;
  if (a.size() < 2) throw InvalidArgumentError("arm needs at least two vertices");
  for (size_t i = 0; i + 1 < a.size(); ++i)
    if (!g.has_edge(a[i], a[i + 1]))
      throw InvalidArgumentError("arm vertices " + std::to_string(a[i]) + " and " +
                                 std::to_string(a[i + 1]) + " are not adjacent");
  if (g.degree(a[0]) != 1)
    throw InvalidArgumentError("arm must start at a leaf, vertex " + std::to_string(a[0]) +
                               " has degree " + std::to_string(g.degree(a[0])));
  for (size_t i = 1; i + 1 < a.size(); ++i)
    if (g.degree(a[i]) != 2)
      throw InvalidArgumentError("arm interior vertex " + std::to_string(a[i]) +
                                 " has degree " + std::to_string(g.degree(a[i])));
}

void require_interior_path(const Graph& g, const std::vector<Vertex>& x) {
  if (x.size() < 3) throw InvalidArgumentError("double roll path needs at least three vertices");
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (!g.has_edge(x[i], x[i + 1]))
      throw InvalidArgumentError("path vertices " + std::to_string(x[i]) + " and " +
                                 std::to_string(x[i + 1]) + " are not adjacent");
  std::vector<Vertex> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidArgumentError("double roll path repeats a vertex");
  for (size_t i = 1; i + 1 < x.size(); ++i)
    if (g.degree(x[i]) != 2)
      throw InvalidArgumentError("path interior vertex " + std::to_string(x[i]) +
                                 " has degree " + std::to_string(g.degree(x[i])));
}

}  // namespace

PebbleDistribution single_roll(const Graph& g, const PebbleDistribution& p, const Arm& arm,
                               int source) {
  require_arm_shape(g, arm);
  const auto& a = arm.vertices;
  int n = static_cast<int>(a.size());
  if (p.vertex_count() != g.vertex_count())
    throw InvalidArgumentError("distribution length does not match the graph");
  if (source < 0 || source >= n - 1)
    throw PreconditionError("single roll source must lie before the arm's terminal vertex");
  if (p[a[n - 1]] != 0)
    throw PreconditionError("single roll needs the terminal vertex " + std::to_string(a[n - 1]) +
                            " empty, it holds " + std::to_string(p[a[n - 1]]));
  for (int j = 0; j < n - 1; ++j)
    if (p[a[j]] < 1)
      throw PreconditionError("single roll needs a pebble on every arm vertex before the "
                              "terminal; vertex " + std::to_string(a[j]) + " is empty");
  if (p[a[source]] < 2)
    throw PreconditionError("single roll source vertex " + std::to_string(a[source]) +
                            " needs at least two pebbles, it holds " + std::to_string(p[a[source]]));

  PebbleDistribution q = p;
  q.set(a[source], p[a[source]] - 1);
  q.set(a[n - 1], 1);
  return q;
}

PebbleDistribution double_roll(const Graph& g, const PebbleDistribution& p,
                               const std::vector<Vertex>& path, int source) {
  require_interior_path(g, path);
  int n = static_cast<int>(path.size());
  if (p.vertex_count() != g.vertex_count())
    throw InvalidArgumentError("distribution length does not match the graph");
  if (source < 1 || source >= n - 1)
    throw PreconditionError("double roll source must be an interior path vertex");
  if (p[path[0]] != 0)
    throw PreconditionError("double roll needs the first path vertex " +
                            std::to_string(path[0]) + " empty");
  if (p[path[n - 1]] != 0)
    throw PreconditionError("double roll needs the last path vertex " +
                            std::to_string(path[n - 1]) + " empty");
  for (int j = 1; j < n - 1; ++j)
    if (p[path[j]] < 1)
      throw PreconditionError("double roll needs a pebble on every interior path vertex; "
                              "vertex " + std::to_string(path[j]) + " is empty");
  if (p[path[source]] < 2)
    throw PreconditionError("double roll source vertex " + std::to_string(path[source]) +
                            " needs at least two pebbles, it holds " +
                            std::to_string(p[path[source]]));

  PebbleDistribution q = p;
  q.set(path[source], p[path[source]] - 2);
  q.set(path[0], 1);
  q.set(path[n - 1], 1);
  return q;
}

namespace {

// First single roll available under the documented scan order, applied.
std::optional<PebbleDistribution> try_single_roll(const Graph& g, const PebbleDistribution& p,
                                                  const std::vector<Arm>& arms) {
  for (const auto& arm : arms) {
    const auto& a = arm.vertices;
    int n = static_cast<int>(a.size());
    if (p[a[n - 1]] != 0) continue;
    bool chain_full = true;
    for (int j = 0; j < n - 1 && chain_full; ++j) chain_full = p[a[j]] >= 1;
    if (!chain_full) continue;
    for (int i = 0; i < n - 1; ++i) {
      if (p[a[i]] >= 2) return single_roll(g, p, arm, i);
    }
  }
  return std::nullopt;
}

// Walks from `from` away from `back` through nonempty degree-2 vertices until
// an empty vertex ends the path.  Returns the walked vertices (excluding
// `from`) or nothing if the walk hits a pebble on a vertex of other degree,
// runs into `avoid`, or wraps around.
std::optional<std::vector<Vertex>> walk_to_empty(const Graph& g, const PebbleDistribution& p,
                                                 Vertex from, Vertex start, Vertex avoid) {
  std::vector<Vertex> out;
  Vertex prev = from, cur = start;
  while (true) {
    if (cur == avoid || cur == from) return std::nullopt;  // collided or wrapped
    for (Vertex seen : out)
      if (seen == cur) return std::nullopt;
    out.push_back(cur);
    if (p[cur] == 0) return out;  // found the empty end
    if (g.degree(cur) != 2) return std::nullopt;  // cannot pass through a junction
    auto nbrs = g.neighbors(cur);
    Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
}

// First double roll available under the documented scan order, applied.
std::optional<PebbleDistribution> try_double_roll(const Graph& g, const PebbleDistribution& p) {
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (p[x] < 2 || g.degree(x) != 2) continue;
    auto nbrs = g.neighbors(x);
    auto left = walk_to_empty(g, p, x, nbrs[0], -1);
    if (!left) continue;
    auto right = walk_to_empty(g, p, x, nbrs[1], left->back());
    if (!right) continue;
    // Path = reversed left walk, x, right walk; both ends empty by
    // construction.  The source sits just after the left stretch.
    std::vector<Vertex> path(left->rbegin(), left->rend());
    int source = static_cast<int>(path.size());
    path.push_back(x);
    path.insert(path.end(), right->begin(), right->end());
    // Overlap between the two walks (other than at the found ends) would
    // repeat a vertex; double_roll's own validation is the backstop.
    return double_roll(g, p, path, source);
  }
  return std::nullopt;
}

}  // namespace

PebbleDistribution normalize_by_rolling(const Graph& g, const PebbleDistribution& p) {
  if (p.vertex_count() != g.vertex_count())
    throw InvalidArgumentError("distribution length does not match the graph");
  auto arms = find_arms(g);
  PebbleDistribution cur = p;
  while (true) {
    if (auto rolled = try_single_roll(g, cur, arms)) {
      cur = std::move(*rolled);
      continue;
    }
    if (auto rolled = try_double_roll(g, cur)) {
      cur = std::move(*rolled);
      continue;
    }
    return cur;
  }
}

namespace {

// Degree-2 runs avoiding the target: delete the target from every thread and
// keep the nonempty pieces.
std::vector<std::vector<Vertex>> squish_runs(const Graph& g, Vertex target) {
  std::vector<std::vector<Vertex>> runs;
  for (const auto& thread : find_threads(g)) {
    const auto& tv = thread.vertices;
    auto at = std::find(tv.begin(), tv.end(), target);
    if (at == tv.end()) {
      runs.push_back(tv);
      continue;
    }
    if (thread.closes_cycle) {
      // Reopen the cycle order just past the target.
      std::vector<Vertex> run;
      size_t k = static_cast<size_t>(at - tv.begin());
      for (size_t step = 1; step < tv.size(); ++step) run.push_back(tv[(k + step) % tv.size()]);
      if (!run.empty()) runs.push_back(std::move(run));
    } else {
      std::vector<Vertex> before(tv.begin(), at), after(at + 1, tv.end());
      if (!before.empty()) runs.push_back(std::move(before));
      if (!after.empty()) runs.push_back(std::move(after));
    }
  }
  return runs;
}

}  // namespace

void enumerate_squished(const Graph& g, Vertex target, Count m,
                        const std::function<bool(const PebbleDistribution&)>& consume) {
  if (target < 0 || target >= g.vertex_count())
    throw InvalidArgumentError("target vertex " + std::to_string(target) + " out of range");
  if (m < 0) throw InvalidArgumentError("distribution size must be nonnegative");

  auto runs = squish_runs(g, target);
  std::vector<char> in_run(g.vertex_count(), 0);
  for (const auto& run : runs)
    for (Vertex v : run) in_run[v] = 1;
  std::vector<Vertex> free_vertices;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!in_run[v]) free_vertices.push_back(v);

  std::vector<Count> cur(g.vertex_count(), 0);
  bool stop = false;

  // Pebbles left after the free vertices go onto the runs; on each run the
  // support must be one vertex or two adjacent ones.
  std::function<void(size_t, Count)> place_runs = [&](size_t ri, Count left) {
    if (stop) return;
    if (ri == runs.size()) {
      if (left == 0 && !consume(PebbleDistribution(cur))) stop = true;
      return;
    }
    const auto& run = runs[ri];
    place_runs(ri + 1, left);  // run stays empty
    for (Count t = 1; t <= left && !stop; ++t) {
      for (size_t x = 0; x < run.size() && !stop; ++x) {
        cur[run[x]] = t;
        place_runs(ri + 1, left - t);
        cur[run[x]] = 0;
      }
      for (size_t x = 0; x + 1 < run.size() && !stop; ++x) {
        for (Count s = 1; s < t && !stop; ++s) {
          cur[run[x]] = s;
          cur[run[x + 1]] = t - s;
          place_runs(ri + 1, left - t);
          cur[run[x]] = 0;
          cur[run[x + 1]] = 0;
        }
      }
    }
  };

  std::function<void(size_t, Count)> place_free = [&](size_t fi, Count left) {
    if (stop) return;
    if (fi == free_vertices.size()) {
      place_runs(0, left);
      return;
    }
    for (Count c = 0; c <= left && !stop; ++c) {
      cur[free_vertices[fi]] = c;
      place_free(fi + 1, left - c);
    }
    cur[free_vertices[fi]] = 0;
  };

  place_free(0, m);
}

std::vector<PebbleDistribution> collect_squished(const Graph& g, Vertex target, Count m) {
  std::vector<PebbleDistribution> out;
  enumerate_squished(g, target, m, [&](const PebbleDistribution& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rubbling
