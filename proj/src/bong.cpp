#include "spinor/bong.hpp"

#include <algorithm>
#include <string>

#include "spinor/gmaps.hpp"

namespace spinor {

namespace {

long parity(long v) { return ((v % 2) + 2) % 2; }

}  // namespace

GoodBong::GoodBong(FieldModelPtr model, std::vector<BongEntry> entries)
    : model_(std::move(model)), entries_(std::move(entries)) {
  if (!model_) throw ValidationError("lattice needs a field model");
  const FieldModel& m = *model_;
  const int n = rank();
  for (int i = 1; i <= n; ++i) {
    if (m.ord_parity(unit(i)) != 0)
      throw ValidationError("entry " + std::to_string(i) + ": unit part has odd valuation");
  }
  for (int i = 1; i + 2 <= n; ++i) {
    if (r(i) > r(i + 2))
      throw ValidationError("entry " + std::to_string(i) + ": r_i > r_{i+2}");
  }
  for (int i = 1; i + 1 <= n; ++i) {
    long diff = r(i + 1) - r(i);
    if (diff + 2 * m.e() < 0)
      throw ValidationError("entry " + std::to_string(i) + ": r_{i+1}-r_i+2e < 0");
    Alpha dneg = m.d_of(m.neg(prod_class(i, i + 1))).as_alpha();
    if (Alpha::from_int(diff) + dneg < Alpha::from_int(0))
      throw ValidationError("entry " + std::to_string(i) + ": r_{i+1}-r_i+d(-a_i a_{i+1}) < 0");
  }
}

SquareClass GoodBong::entry_class(int i) const {
  const FieldModel& m = *model_;
  SquareClass c = unit(i);
  if (parity(r(i)) == 1) c = m.mul(c, m.pi());
  return c;
}

SquareClass GoodBong::prod_class(int i, int j) const {
  SquareClass c = model_->identity();
  for (int k = std::max(i, 1); k <= std::min(j, rank()); ++k)
    c = model_->mul(c, entry_class(k));
  return c;
}

QuadSpace GoodBong::space() const {
  std::vector<SquareClass> diag;
  for (int i = 1; i <= rank(); ++i) diag.push_back(entry_class(i));
  return from_diagonal(*model_, diag);
}

bool property_a(const GoodBong& lat) {
  for (int i = 1; i + 2 <= lat.rank(); ++i)
    if (lat.r(i) >= lat.r(i + 2)) return false;
  return true;
}

bool property_b(const GoodBong& lat) {
  if (!property_a(lat)) return false;
  const FieldModel& m = lat.model();
  const int n = lat.rank();
  for (int i = 1; i + 1 <= n; ++i) {
    long diff = lat.r(i + 1) - lat.r(i);
    Alpha dneg = m.d_of(m.neg(lat.prod_class(i, i + 1))).as_alpha();
    bool tight;
    if (parity(diff) == 1)
      tight = diff <= 2 * m.e() + 1;
    else
      tight = dneg <= Alpha::from_int(m.e()) - Alpha::from_int(diff).half();
    if (!tight) continue;
    if (i >= 2 && lat.r(i) - lat.r(i - 1) <= 2 * m.e()) return false;
    if (i + 2 <= n && lat.r(i + 2) - lat.r(i + 1) <= 2 * m.e()) return false;
  }
  return true;
}

LatticeInvariants invariants(const GoodBong& lat) {
  const FieldModel& m = lat.model();
  const int n = lat.rank();
  LatticeInvariants inv;
  inv.det = lat.prod_class(1, n);
  inv.vol_order = 0;
  for (int i = 1; i <= n; ++i) {
    inv.r.push_back(lat.r(i));
    inv.vol_order += lat.r(i);
  }
  inv.norm_order = (n >= 1) ? Alpha::from_int(lat.r(1)) : Alpha::pos_inf();
  if (n >= 2)
    inv.scale_order = Alpha::min(Alpha::from_int(lat.r(1)),
                                 Alpha::from_int(lat.r(1) + lat.r(2)).half());
  else
    inv.scale_order = inv.norm_order;
  for (int i = 1; i + 1 <= n; ++i) {
    Alpha best = Alpha::from_int(lat.r(i + 1) - lat.r(i)).half() + Alpha::from_int(m.e());
    for (int j = 1; j <= i; ++j) {
      Alpha dneg = m.d_of(m.neg(lat.prod_class(j, j + 1))).as_alpha();
      best = Alpha::min(best, Alpha::from_int(lat.r(i + 1) - lat.r(j)) + dneg);
    }
    for (int j = i; j + 1 <= n; ++j) {
      Alpha dneg = m.d_of(m.neg(lat.prod_class(j, j + 1))).as_alpha();
      best = Alpha::min(best, Alpha::from_int(lat.r(j + 1) - lat.r(i)) + dneg);
    }
    inv.alpha.push_back(best);
  }
  inv.prop_a = property_a(lat);
  inv.prop_b = property_b(lat);
  return inv;
}

GoodBong dual(const GoodBong& lat) {
  std::vector<BongEntry> rev;
  for (int i = lat.rank(); i >= 1; --i) rev.push_back({lat.unit(i), -lat.r(i)});
  return GoodBong(lat.model_ptr(), std::move(rev));
}

namespace {

ClassSubgroup segment_group(const GoodBong& lat, int i) {
  // G(a_{i+1}/a_i): the class of the ratio equals the class of the product.
  return G_of(lat.model(), lat.model().mul(lat.entry_class(i), lat.entry_class(i + 1)),
              lat.r(i + 1) - lat.r(i));
}

bool segments_bounded_and_parity_ok(const GoodBong& lat) {
  const FieldModel& m = lat.model();
  const int n = lat.rank();
  for (int i = 1; i + 1 <= n; ++i)
    if (!segment_group(lat, i).is_subset_of(ClassSubgroup::units(m))) return false;
  for (int i = 1; i + 2 <= n; ++i)
    if (lat.r(i) == lat.r(i + 2)) {
      long half_gap = (lat.r(i + 1) - lat.r(i)) / 2;  // even difference here
      if (parity(half_gap + m.e()) != 0) return false;
    }
  return true;
}

}  // namespace

ClassSubgroup theta_plus(const GoodBong& lat) {
  const FieldModel& m = lat.model();
  const int n = lat.rank();
  if (n <= 1) return ClassSubgroup::trivial(m);
  if (property_a(lat)) {
    ClassSubgroup acc = ClassSubgroup::trivial(m);
    for (int i = 1; i + 1 <= n; ++i) acc = product(acc, segment_group(lat, i));
    Alpha al = Alpha::pos_inf();
    for (int i = 1; i + 2 <= n; ++i) {
      long gap = lat.r(i + 2) - lat.r(i);
      long fl = (gap >= 0) ? gap / 2 : -((-gap + 1) / 2);
      al = Alpha::min(al, Alpha::from_int(fl));
    }
    return product(acc, ups(m, al));
  }
  return segments_bounded_and_parity_ok(lat) ? ClassSubgroup::units(m) : ClassSubgroup::full(m);
}

ClassSubgroup theta_plus_refined(const GoodBong& lat) {
  const FieldModel& m = lat.model();
  if (!property_a(lat)) throw PreconditionError("refined formula needs property A");
  const int n = lat.rank();
  if (n <= 1) return ClassSubgroup::trivial(m);
  ClassSubgroup acc = ClassSubgroup::trivial(m);
  for (int i = 1; i + 1 <= n; ++i) acc = product(acc, segment_group(lat, i));
  Alpha al = Alpha::pos_inf();
  for (int i = 1; i + 2 <= n; ++i) {
    long gap = lat.r(i + 2) - lat.r(i);
    if (parity(gap) == 0) al = Alpha::min(al, Alpha::from_int(gap / 2));
  }
  return product(acc, ups(m, al));
}

bool theta_bounded_in_units(const GoodBong& lat) {
  return theta_plus(lat).is_subset_of(ClassSubgroup::units(lat.model()));
}

ClassSubgroup g_index(const GoodBong& lat, int i) {
  if (i < 1 || i + 1 > lat.rank()) throw ValidationError("segment index out of range");
  return g_of(lat.model(), lat.model().mul(lat.entry_class(i), lat.entry_class(i + 1)),
              lat.r(i + 1) - lat.r(i));
}

GoodBong transform(const GoodBong& lat, int i, SquareClass eta) {
  if (!g_index(lat, i).contains(eta))
    throw PreconditionError("eta is not in g_i of this lattice");
  std::vector<BongEntry> entries = lat.entries();
  entries[i - 1].unit = lat.model().mul(entries[i - 1].unit, eta);
  entries[i].unit = lat.model().mul(entries[i].unit, eta);
  return GoodBong(lat.model_ptr(), std::move(entries));
}

bool isometric_lattices(const GoodBong& a, const GoodBong& b) {
  if (!a.model().same(b.model())) throw ValidationError("isometry test across models");
  if (a.rank() != b.rank()) throw ValidationError("isometry test needs equal ranks");
  const FieldModel& m = a.model();
  const int n = a.rank();
  if (n == 0) return true;
  if (!(a.space() == b.space())) return false;
  for (int i = 1; i <= n; ++i)
    if (a.r(i) != b.r(i)) return false;
  LatticeInvariants ia = invariants(a), ib = invariants(b);
  for (int i = 0; i + 1 < n; ++i)
    if (!(ia.alpha[i] == ib.alpha[i])) return false;
  for (int i = 1; i + 1 <= n; ++i) {
    SquareClass prod = m.mul(a.prod_class(1, i), b.prod_class(1, i));
    if (m.d_of(prod).as_alpha() < ia.alpha[i - 1]) return false;
  }
  Alpha two_e = Alpha::from_int(2 * m.e());
  for (int i = 2; i <= n - 1; ++i) {
    if (ia.alpha[i - 2] + ia.alpha[i - 1] > two_e) {
      std::vector<SquareClass> va, wb;
      for (int k = 1; k <= i; ++k) va.push_back(a.entry_class(k));
      for (int k = 1; k <= i - 1; ++k) wb.push_back(b.entry_class(k));
      if (!represents(from_diagonal(m, va), from_diagonal(m, wb))) return false;
    }
  }
  return true;
}

bool binary_is_maximal(const GoodBong& lat) {
  if (lat.rank() != 2) throw ValidationError("maximality test is for binary lattices");
  const FieldModel& m = lat.model();
  SquareClass ratio = m.mul(lat.entry_class(1), lat.entry_class(2));
  return !in_A(m, ratio, lat.r(2) - lat.r(1) - 2);
}

ShrinkResult shrink_norm(const GoodBong& lat) {
  const FieldModel& m = lat.model();
  const int n = lat.rank();
  if (n < 1) throw ValidationError("norm shrink needs rank >= 1");
  if (!(property_b(lat) || theta_bounded_in_units(lat)))
    throw PreconditionError("norm shrink needs property B or theta within the unit classes");
  std::vector<BongEntry> entries = lat.entries();
  if (n == 1) {
    entries[0].r += 2;
    return {true, GoodBong(lat.model_ptr(), std::move(entries))};
  }
  long diff = lat.r(2) - lat.r(1);
  SquareClass c12 = m.mul(lat.entry_class(1), lat.entry_class(2));
  if (diff == -2 * m.e()) {
    if (c12 == m.minus_one()) return {false, std::nullopt};
    if (n >= 3 && lat.r(1) == lat.r(3)) return {false, std::nullopt};
    // remaining possibility at this gap: a1 a2 = -Delta; the half-norm binary
    // segment scales by pi^2
    entries[0].r += 2;
    entries[1].r += 2;
    return {true, GoodBong(lat.model_ptr(), std::move(entries))};
  }
  if (n >= 3 && lat.r(1) == lat.r(3)) {
    // alternating rebase: r_1 = r_3 = ... = r_{2k+1} with k maximal
    int k = 1;
    while (2 * (k + 1) + 1 <= n && lat.r(2 * (k + 1) + 1) == lat.r(1)) ++k;
    SquareClass eps = lat.prod_class(1, 2 * k + 1);
    if (parity(lat.r(1)) == 1) eps = m.mul(eps, m.pi());
    if (k % 2 == 1) eps = m.neg(eps);
    if (m.ord_parity(eps) != 0) throw Error("internal: alternating rebase unit is not a unit");
    for (int i = 1; i <= 2 * k + 1; ++i) {
      entries[i - 1].unit = (i % 2 == 1) ? eps : m.neg(eps);
      entries[i - 1].r += (i % 2 == 1) ? 2 : -2;
    }
    return {true, GoodBong(lat.model_ptr(), std::move(entries))};
  }
  GoodBong head(lat.model_ptr(), {entries[0], entries[1]});
  if (binary_is_maximal(head)) {
    // scale the leading binary segment by pi*eta with (pi eta, -a1 a2) = +1
    SquareClass target = m.neg(c12);
    std::optional<SquareClass> eta;
    for (int idx = 0; idx < m.num_classes() && !eta; ++idx) {
      SquareClass cand = m.cls(idx);
      if (m.ord_parity(cand) != 0) continue;
      if (m.hilbert_of(m.mul(m.pi(), cand), target) == 1) eta = cand;
    }
    if (!eta) throw Error("internal: no unit eta with (pi eta, -a1 a2) = 1");
    entries[0].unit = m.mul(entries[0].unit, *eta);
    entries[0].r += 1;
    entries[1].unit = m.mul(entries[1].unit, *eta);
    entries[1].r += 1;
    return {true, GoodBong(lat.model_ptr(), std::move(entries))};
  }
  entries[0].r += 2;
  return {true, GoodBong(lat.model_ptr(), std::move(entries))};
}

}  // namespace spinor
