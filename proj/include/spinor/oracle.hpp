#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spinor/rel_spinor.hpp"

namespace spinor {

struct ReductionStep {
  enum class Kind { FullShortcut, NormShrink, RankDrop, BaseCase };
  Kind kind;
  std::string note;
  int n_before = 0;
  long norm_slack_before = 0;  // S_1 - R_1
  ClassSubgroup factor;        // contribution multiplied into the result
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct OracleResult {
  ClassSubgroup group;
  ReductionTrace trace;
};

// Recursive evaluation of the relative spinor norm by norm-shrinking M until
// the norms agree, then dropping the common first BONG element, with the
// full-group shortcuts for rank gap >= 3 and theta(M) already full. Genuine
// sublattice pairs never trip the consistency checks; formal pairs may throw
// InconsistentPairError.
OracleResult theta_X_oracle(const LatticePair& p);

struct PairGenOptions {
  int max_rank = 4;
  long val_lo = -2;
  long val_hi = 4;
  int random_count = 1000;
  std::uint64_t seed = 0x5eedc1a55ULL;  // fixed default seed
  bool exhaustive = true;
};

// Streams certified pairs (containment by construction: identical lattices,
// pi^k-scalings, leading BONG sections, iterated norm shrinks, rebased
// presentations, and orthogonal extensions of smaller certified pairs).
void generate_pairs(const FieldModelPtr& model, const PairGenOptions& opts,
                    const std::function<void(const LatticePair&)>& sink);

// Enumerates every valid lattice of the given rank with entry valuations in
// [lo, hi].
void enumerate_lattices(const FieldModelPtr& model, int rank, long lo, long hi,
                        const std::function<void(const GoodBong&)>& sink);

struct CrossCheckStats {
  long pairs = 0;
  long mismatches = 0;
  std::vector<std::string> failures;  // first few mismatch descriptions
};

// Compares the closed form against the oracle on one pair.
void crosscheck_pair(const LatticePair& p, CrossCheckStats& stats);

std::string describe(const GoodBong& lat);
std::string describe_pair(const LatticePair& p);

}  // namespace spinor
