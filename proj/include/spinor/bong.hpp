#pragma once

#include <optional>
#include <vector>

#include "spinor/alpha.hpp"
#include "spinor/class_group.hpp"
#include "spinor/field_model.hpp"
#include "spinor/quad_space.hpp"

namespace spinor {

// One entry of a good BONG presentation: a_i = pi^r * unit.
struct BongEntry {
  SquareClass unit;  // unit square class (even valuation parity)
  long r = 0;
  friend bool operator==(const BongEntry&, const BongEntry&) = default;
};

// A lattice presented by a good basis of norm generators. Construction
// validates the good-BONG conditions: r_i <= r_{i+2}, and for consecutive
// entries r_{i+1}-r_i+2e >= 0 and r_{i+1}-r_i+d(-a_i a_{i+1}) >= 0.
class GoodBong {
 public:
  GoodBong(FieldModelPtr model, std::vector<BongEntry> entries);

  const FieldModel& model() const { return *model_; }
  FieldModelPtr model_ptr() const { return model_; }
  int rank() const { return static_cast<int>(entries_.size()); }
  const std::vector<BongEntry>& entries() const { return entries_; }

  // 1-based accessors, matching the conventional indices.
  long r(int i) const { return entries_.at(i - 1).r; }
  SquareClass unit(int i) const { return entries_.at(i - 1).unit; }
  // The full square class of a_i including the valuation parity.
  SquareClass entry_class(int i) const;
  // Product class a_i a_{i+1} ... a_j; identity when i > j.
  SquareClass prod_class(int i, int j) const;

  QuadSpace space() const;

  friend bool operator==(const GoodBong&, const GoodBong&) = default;

 private:
  FieldModelPtr model_;
  std::vector<BongEntry> entries_;
};

struct LatticeInvariants {
  std::vector<long> r;
  std::vector<Alpha> alpha;  // alpha_i for 1 <= i <= n-1
  Alpha norm_order;
  Alpha scale_order;
  long vol_order = 0;
  SquareClass det{0};
  bool prop_a = false;
  bool prop_b = false;
};

LatticeInvariants invariants(const GoodBong& lat);

// Spacing condition A: r_i < r_{i+2} for all i; B additionally forces
// 2e-gaps around every index whose binary segment is "tight".
bool property_a(const GoodBong& lat);
bool property_b(const GoodBong& lat);

GoodBong dual(const GoodBong& lat);

// Spinor norm of the proper integral rotations. For lattices with property A
// this is the product of the binary-segment groups with a filtration factor;
// otherwise the group is either the unit classes or everything, decided by
// the boundedness test on the segment groups and the equal-r parity rule.
ClassSubgroup theta_plus(const GoodBong& lat);

// Property-A variant with the odd-gap filtration factors dropped; must agree
// with theta_plus.
ClassSubgroup theta_plus_refined(const GoodBong& lat);

// Whether theta_plus is contained in the unit classes (the boundedness test,
// valid for every rank).
bool theta_bounded_in_units(const GoodBong& lat);

// g_i(L) = g(a_{i+1}/a_i): the unit classes eta for which scaling the i-th
// binary segment by eta preserves the lattice class.
ClassSubgroup g_index(const GoodBong& lat, int i);

// Rescales entries i, i+1 by eta in g_i(L); the result is isometric.
GoodBong transform(const GoodBong& lat, int i, SquareClass eta);

// Classification: equality of underlying spaces, r and alpha sequences, the
// defect bound on determinant prefixes, and prefix representation at indices
// with alpha_{i-1}+alpha_i > 2e.
bool isometric_lattices(const GoodBong& a, const GoodBong& b);

// Is a binary lattice maximal on its space among lattices of the same norm?
bool binary_is_maximal(const GoodBong& lat);

struct ShrinkResult {
  bool is_lattice = false;
  std::optional<GoodBong> sublattice;  // set when is_lattice
};

// The sublattice of non norm generators {x in L : Q(x) in p nL}, presented by
// a good BONG; possibly not a lattice (split hyperbolic plane of half norm).
// Requires property B or a theta bounded in units.
ShrinkResult shrink_norm(const GoodBong& lat);

}  // namespace spinor
