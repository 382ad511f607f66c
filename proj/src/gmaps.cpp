#include "spinor/gmaps.hpp"

namespace spinor {

bool in_A_bar(const FieldModel& m, SquareClass a, const Alpha& R) {
  Alpha two_e = Alpha::from_int(2 * m.e());
  if (a == m.neg(m.delta()) && R == -two_e) return true;
  if (R + two_e < Alpha::from_int(0)) return false;
  Alpha dna = m.d_of(m.neg(a)).as_alpha();
  return R + dna > Alpha::from_int(0);
}

bool in_A(const FieldModel& m, SquareClass a, long R) {
  if (m.ord_parity(a) != ((R % 2) + 2) % 2)
    throw ValidationError("weight parity does not match class valuation parity");
  if (R + 2 * m.e() < 0) return false;
  Alpha dna = m.d_of(m.neg(a)).as_alpha();
  return Alpha::from_int(R) + dna >= Alpha::from_int(0);
}

Alpha alpha_of(const FieldModel& m, SquareClass a, const Alpha& R) {
  if (R.is_neg_inf()) return Alpha::neg_inf();
  if (R.is_pos_inf()) return Alpha::pos_inf();
  Alpha dna = m.d_of(m.neg(a)).as_alpha();
  return Alpha::min(R.half() + Alpha::from_int(m.e()), R + dna);
}

ClassSubgroup g_hat(const FieldModel& m, SquareClass a, const Alpha& R) {
  return intersect(ups(m, alpha_of(m, a, R)), norm_group(m, m.neg(a)));
}

ClassSubgroup g_bar(const FieldModel& m, SquareClass a, const Alpha& R) {
  if (a == m.minus_one() && R == Alpha::from_int(-2 * m.e()))
    return ClassSubgroup::units(m);
  return g_hat(m, a, R);
}

// Piecewise x/2-e below 2e and x-2e above: strictly increasing with
// f(-2e) = -2e and f(2e) = 0 (equivalently the larger of the two branches).
Alpha f_of(const FieldModel& m, const Alpha& x) {
  if (!x.is_finite()) return x;
  Alpha e = Alpha::from_int(m.e());
  return Alpha::max(x.half() - e, x - e - e);
}

ClassSubgroup G_bar(const FieldModel& m, SquareClass a, const Alpha& R) {
  return extend(g_bar(m, a, f_of(m, R)), a);
}

ClassSubgroup g_of(const FieldModel& m, SquareClass a, long R) {
  if (!in_A(m, a, R)) throw PreconditionError("(class, weight) outside the binary ratio domain");
  return intersect(g_bar(m, a, Alpha::from_int(R)), ClassSubgroup::units(m));
}

ClassSubgroup G_of(const FieldModel& m, SquareClass a, long R) {
  if (!in_A(m, a, R)) throw PreconditionError("(class, weight) outside the binary ratio domain");
  return G_bar(m, a, Alpha::from_int(R));
}

}  // namespace spinor
