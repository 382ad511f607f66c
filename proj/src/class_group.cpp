#include "spinor/class_group.hpp"

#include <algorithm>

namespace spinor {

const FieldModel& ClassSubgroup::model() const {
  if (!model_) throw ValidationError("subgroup has no model");
  return *model_;
}

ClassSubgroup ClassSubgroup::units(const FieldModel& m) {
  std::uint32_t mask = 0;
  for (int i = 0; i < m.num_classes(); ++i)
    if (m.ord_parity(m.cls(i)) == 0) mask |= 1u << i;
  return ClassSubgroup(&m, mask);
}

bool ClassSubgroup::is_full() const { return mask_ == full(model()).mask_; }

bool ClassSubgroup::is_subset_of(const ClassSubgroup& other) const {
  check_compatible(other);
  return (mask_ & ~other.mask_) == 0;
}

std::vector<SquareClass> ClassSubgroup::members() const {
  std::vector<SquareClass> out;
  for (int i = 0; i < model().num_classes(); ++i)
    if ((mask_ >> i) & 1u) out.push_back(model().cls(i));
  return out;
}

void ClassSubgroup::check_compatible(const ClassSubgroup& other) const {
  if (model_ != other.model_) throw ValidationError("subgroup operation across different models");
}

ClassSubgroup intersect(const ClassSubgroup& h, const ClassSubgroup& k) {
  h.check_compatible(k);
  return ClassSubgroup(&h.model(), h.mask_ & k.mask_);
}

ClassSubgroup product(const ClassSubgroup& h, const ClassSubgroup& k) {
  h.check_compatible(k);
  std::uint32_t out = 0;
  for (int i = 0; i < h.model().num_classes(); ++i) {
    if (!((h.mask_ >> i) & 1u)) continue;
    for (int j = 0; j < h.model().num_classes(); ++j)
      if ((k.mask_ >> j) & 1u) out |= 1u << (i ^ j);
  }
  return ClassSubgroup(&h.model(), out);
}

ClassSubgroup span(const FieldModel& m, const std::vector<SquareClass>& gens) {
  ClassSubgroup g = ClassSubgroup::trivial(m);
  for (SquareClass c : gens) g = extend(g, c);
  return g;
}

ClassSubgroup extend(const ClassSubgroup& h, SquareClass g) {
  if (h.contains(g)) return h;
  std::uint32_t mask = h.mask();
  std::uint32_t shifted = 0;
  for (int i = 0; i < h.model().num_classes(); ++i)
    if ((mask >> i) & 1u) shifted |= 1u << (i ^ g.idx);
  return ClassSubgroup(&h.model(), mask | shifted);
}

ClassSubgroup ups(const FieldModel& m, const Alpha& alpha) {
  std::uint32_t mask = 0;
  for (int i = 0; i < m.num_classes(); ++i)
    if (m.d_of(m.cls(i)).as_alpha() >= alpha) mask |= 1u << i;
  return ClassSubgroup(&m, mask);
}

ClassSubgroup ups_in_units(const FieldModel& m, const Alpha& alpha) {
  return intersect(ups(m, alpha), ClassSubgroup::units(m));
}

ClassSubgroup norm_group(const FieldModel& m, SquareClass c) {
  std::uint32_t mask = 0;
  for (int i = 0; i < m.num_classes(); ++i)
    if (m.hilbert_of(m.cls(i), c) == 1) mask |= 1u << i;
  return ClassSubgroup(&m, mask);
}

std::string subgroup_name(const ClassSubgroup& g) {
  const FieldModel& m = g.model();
  if (g.is_full()) return "F*";
  if (g == ClassSubgroup::units(m)) return "O*F*2";
  if (g == span(m, {m.delta()})) return "<" + m.name(m.delta()) + ">F*2";
  if (g.is_trivial()) return "F*2";
  for (int c = 1; c < m.num_classes(); ++c)
    if (g == norm_group(m, m.cls(c))) return "N(" + m.name(m.cls(c)) + ")";
  for (int k : m.d_image_finite())
    if (g == ups(m, Alpha::from_int(k))) return "ups^" + std::to_string(k);
  for (int a = 1; a < m.num_classes(); ++a)
    for (int k : m.d_image_finite())
      for (int c = 1; c < m.num_classes(); ++c) {
        ClassSubgroup base = intersect(ups(m, Alpha::from_int(k)), norm_group(m, m.cls(c)));
        if (g == extend(base, m.cls(a)))
          return "<" + m.name(m.cls(a)) + ">(ups^" + std::to_string(k) + "&N(" +
                 m.name(m.cls(c)) + "))";
      }
  // Fall back to a generator list (greedy basis of the F_2-subspace).
  std::string out = "gen(";
  ClassSubgroup acc = ClassSubgroup::trivial(m);
  bool first = true;
  for (int i = 1; i < m.num_classes(); ++i) {
    SquareClass c = m.cls(i);
    if (g.contains(c) && !acc.contains(c)) {
      if (!first) out += ",";
      out += m.name(c);
      first = false;
      acc = extend(acc, c);
    }
  }
  return out + ")";
}

}  // namespace spinor
