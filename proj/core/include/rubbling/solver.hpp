#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rubbling/engine.hpp"
#include "rubbling/graph.hpp"

namespace rubbling {

enum class Invariant { rho, rho_opt };

struct SolveOptions {
  MoveSet move_set = MoveSet::rubbling;
  // Largest distribution size to try; default is 2^diameter + 8.
  std::optional<Count> cap;
  // Restrict candidate distributions with enumerate_squished.  Safe for both
  // move sets; turning it off forces full composition enumeration.
  bool squish = true;
  // 0 means one worker per hardware thread.
  int workers = 0;
};

struct SolveStats {
  Count distributions_examined = 0;
  Count states_expanded = 0;
  Count cache_hits = 0;
};

// A (target, distribution) pair the solver proved uncoverable.
struct FailingWitness {
  Vertex target;
  PebbleDistribution distribution;
};

struct SolveResult {
  Count value = 0;
  // rubbling_number: a failing pair of size value-1, proving minimality.
  std::optional<FailingWitness> failing_witness;
  // optimal_rubbling_number: a size-value distribution covering every vertex.
  std::optional<PebbleDistribution> covering_witness;
  SolveStats stats;
};

// 2^diameter; every smaller distribution stacked on one end of a diameter
// path already fails, so upward iteration may start here.  OverflowError when
// the diameter is 63 or more.
Count lower_bound_diameter(const Graph& g);

// Least m such that every size-m distribution covers every target, found by
// scanning sizes upward from the diameter bound.  Candidates are enumerated
// in lexicographic order (squished per target unless disabled); on
// vertex-transitive families a single target suffices.  The reported witness
// is the first failing pair in (target, distribution) order at size value-1.
// Work is split across workers by contiguous candidate ranges and reduced
// deterministically, so results do not depend on scheduling or worker count.
// Throws CapExceededError, carrying the cap-level witness, if every size up
// to the cap still fails.
SolveResult rubbling_number(const Graph& g, const SolveOptions& opts = {});

// Least m such that some size-m distribution covers every vertex, scanning
// m = 1, 2, ... with full lexicographic enumeration; returns the first
// covering distribution.  Same determinism contract as rubbling_number.
SolveResult optimal_rubbling_number(const Graph& g, const SolveOptions& opts = {});

// Known exact values for generated families, where published formulas exist:
//   rho:     path 2^(n-1); cycle 2^k (n=2k) and floor((7*2^(k-1)-2)/3)+1
//            (n=2k+1); complete 2 (n>=2); wheel 4 (spikes>=4); kbipartite 4
//            (both parts >=2); hypercube 2^d; petersen 5; caterpillar
//            2^(s+1) with s the count of internal vertices of the tree.
//   rho_opt: path ceil((n+1)/2); cycle ceil(n/2); complete 2 (n>=2); wheel 2
//            (spikes>=4); kbipartite 3 (both parts >=3); hypercube 2,3,4,6
//            for d=2..5; petersen 4.
// Instances outside these ranges return nullopt.
std::optional<Count> closed_form(const FamilySpec& spec, Invariant which);

// The four arithmetic constraints every uncoverable pair (a pebbles at
// distance k, b pebbles nearer on an odd cycle C_{2k+1}, a <= b) must obey:
//   (1)  floor(a/2) + b          <= 2^k - 1
//   (1a) a + 2b                  <= 2^(k+1) - 1
//   (2)  floor((b - 2^(k-1))/2) + a <= 2^(k-1) - 1
//   (2a) b + 2a                  <= 2^k + 2^(k-1) - 1
struct OddCycleBoundCheck {
  bool bound1, bound1a, bound2, bound2a;
  bool all() const { return bound1 && bound1a && bound2 && bound2a; }
};

// Requires k >= 1 and 0 <= a <= b.
OddCycleBoundCheck odd_cycle_bounds(int k, Count a, Count b);

// The extremal uncoverable pair a = floor(2^k/3), b = floor(5*2^(k-1)/3);
// its total floor((7*2^(k-1)-2)/3) is exactly one below the odd-cycle value.
std::pair<Count, Count> odd_cycle_extremal_pair(int k);

struct VerifyItem {
  FamilySpec spec;
  Count computed = 0;
  Count expected = 0;
  bool ok = false;
};

// Solves each instance and compares against closed_form.  Instances without
// a closed form raise InvalidArgumentError; instances whose top search level
// would exceed the desk-scale enumeration budget raise ResourceError before
// any solving starts.
std::vector<VerifyItem> verify_family(std::span<const FamilySpec> specs, Invariant which,
                                      const SolveOptions& opts = {});

}  // namespace rubbling
