#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinor/alpha.hpp"
#include "spinor/field_model.hpp"

namespace spinor {

// A subgroup of F*/F*^2 containing the squares, stored as a membership bitmask
// over the class enumeration. Since supported fields have at most 16 classes,
// equality, inclusion and intersection are single integer operations.
class ClassSubgroup {
 public:
  ClassSubgroup() : model_(nullptr), mask_(1) {}
  ClassSubgroup(const FieldModel* model, std::uint32_t mask) : model_(model), mask_(mask | 1u) {}

  static ClassSubgroup trivial(const FieldModel& m) { return ClassSubgroup(&m, 1u); }
  static ClassSubgroup full(const FieldModel& m) {
    return ClassSubgroup(&m, (m.num_classes() >= 32 ? ~0u : (1u << m.num_classes()) - 1u));
  }
  static ClassSubgroup units(const FieldModel& m);

  const FieldModel& model() const;
  std::uint32_t mask() const { return mask_; }

  bool contains(SquareClass c) const { return (mask_ >> c.idx) & 1u; }
  int size() const { return __builtin_popcount(mask_); }
  int index_in_full() const { return model().num_classes() / size(); }

  bool is_trivial() const { return mask_ == 1u; }
  bool is_full() const;
  bool is_subset_of(const ClassSubgroup& other) const;

  std::vector<SquareClass> members() const;

  friend bool operator==(const ClassSubgroup& a, const ClassSubgroup& b) {
    return a.model_ == b.model_ && a.mask_ == b.mask_;
  }

 private:
  void check_compatible(const ClassSubgroup& other) const;
  friend ClassSubgroup intersect(const ClassSubgroup&, const ClassSubgroup&);
  friend ClassSubgroup product(const ClassSubgroup&, const ClassSubgroup&);

  const FieldModel* model_;
  std::uint32_t mask_;
};

ClassSubgroup intersect(const ClassSubgroup& h, const ClassSubgroup& k);
// Subgroup generated by the union; for subgroups this is the set of products.
ClassSubgroup product(const ClassSubgroup& h, const ClassSubgroup& k);
ClassSubgroup span(const FieldModel& m, const std::vector<SquareClass>& gens);
ClassSubgroup extend(const ClassSubgroup& h, SquareClass g);

// ups(alpha) = (1+p^alpha)F*^2 realized as {c : d(c) >= alpha}; the full group
// for alpha <= 0, the unit classes for 0 < alpha <= 1, <Delta>F*^2 at 2e and
// the trivial group past 2e.
ClassSubgroup ups(const FieldModel& m, const Alpha& alpha);
// ups(alpha) intersected with the unit classes.
ClassSubgroup ups_in_units(const FieldModel& m, const Alpha& alpha);
// N(c) = {x : (x,c) = +1}; index 2 for c != 1.
ClassSubgroup norm_group(const FieldModel& m, SquareClass c);

// Renders the subgroup in the conventional vocabulary, trying in order:
// full group, unit classes, <Delta>F*2, trivial, N(c), ups^k,
// <a>(ups^k cap N(c)), generator list.
std::string subgroup_name(const ClassSubgroup& g);

}  // namespace spinor
