#pragma once

#include <functional>
#include <vector>

#include "rubbling/engine.hpp"
#include "rubbling/graph.hpp"

namespace rubbling {

// Pebble-rearrangement step that never hurts coverability: anything coverable
// before a roll stays coverable after it.  Rolls spread stacked pebbles along
// degree-2 stretches, which is how witness distributions get flattened to at
// most one pebble per vertex.
struct RollingMove {
  enum class Kind {
    single,        // one pebble slides from path[source] to the empty far end
    double_sided,  // two pebbles leave path[source], one lands on each empty end
  };
  Kind kind;
  std::vector<Vertex> path;  // the arm (single) or degree-2 interior path (double)
  int source;                // 0-based index into path
};

// Single roll along an arm a[0..n-1] (see find_arms): requires the terminal
// a[n-1] empty, every other arm vertex nonempty, and at least two pebbles on
// a[source] with source < n-1.  Moves one pebble from a[source] onto the
// terminal.  Throws PreconditionError naming the first failed condition, or
// InvalidArgumentError if the arm does not fit the graph.
PebbleDistribution single_roll(const Graph& g, const PebbleDistribution& p, const Arm& arm,
                               int source);

// Double roll along a path x[0..n-1] whose interior vertices all have degree
// 2: requires both ends empty, every interior vertex nonempty, and at least
// two pebbles on the interior x[source].  Takes two pebbles off x[source] and
// drops one on each end.
PebbleDistribution double_roll(const Graph& g, const PebbleDistribution& p,
                               const std::vector<Vertex>& path, int source);

// Applies rolling moves until none is available.  Scan order is fixed so the
// result is a function of the input alone: all single rolls before any double
// roll; arms in find_arms order with the lowest source index first; double
// rolls from the lowest-numbered degree-2 vertex holding two pebbles, walking
// both ways (sorted-neighbor direction first) to the nearest empty ends.
PebbleDistribution normalize_by_rolling(const Graph& g, const PebbleDistribution& p);

// Streams size-m distributions on g that are "squished" on every maximal run
// of degree-2 vertices avoiding the target: on each such run the support is
// empty, one vertex, or two adjacent vertices.  Runs are the components left
// after deleting the target from the degree-2 vertex set, so a run through
// the target splits and an all-degree-2 cycle opens into one run of n-1
// vertices.  Any target a size-m distribution fails to cover, some distribution
// of this restricted shape also fails to cover, which is what lets the solver
// enumerate so much less than every composition.  Other vertices are
// unconstrained.  The consumer returns false to stop early; m = 0 yields the
// all-zero distribution.
void enumerate_squished(const Graph& g, Vertex target, Count m,
                        const std::function<bool(const PebbleDistribution&)>& consume);

// Convenience: the whole stream, materialized in lexicographic order.
std::vector<PebbleDistribution> collect_squished(const Graph& g, Vertex target, Count m);

}  // namespace rubbling
