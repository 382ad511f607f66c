#pragma once

#include "spinor/alpha.hpp"
#include "spinor/class_group.hpp"
#include "spinor/field_model.hpp"

namespace spinor {

// A square class together with a formal weight; weights are integers when the
// pair comes from a lattice entry but may be any extended rational.
struct ClassWithWeight {
  SquareClass cls;
  Alpha weight;
};

// Membership in the extended weight domain: (R+2e >= 0 and R+d(-a) > 0),
// plus the single extra point (-Delta, -2e).
bool in_A_bar(const FieldModel& m, SquareClass a, const Alpha& R);

// Membership of a in the set of binary lattice ratios: R+2e >= 0 and
// R+d(-a) >= 0, where R must match the valuation parity of a.
bool in_A(const FieldModel& m, SquareClass a, long R);

// alpha(a,R) = min{R/2+e, R+d(-a)}.
Alpha alpha_of(const FieldModel& m, SquareClass a, const Alpha& R);

// g_hat(a,R) = ups(alpha(a,R)) cap N(-a).
ClassSubgroup g_hat(const FieldModel& m, SquareClass a, const Alpha& R);

// g_bar: equal to g_hat except at (-1,-2e), where it is the unit classes.
ClassSubgroup g_bar(const FieldModel& m, SquareClass a, const Alpha& R);

// f(x) = min{x/2 - e, x - 2e}: strictly increasing with f(2e)=0, f(-2e)=-2e.
Alpha f_of(const FieldModel& m, const Alpha& x);

// G_bar(a,R) = <a> g_bar(a, f(R)).
ClassSubgroup G_bar(const FieldModel& m, SquareClass a, const Alpha& R);

// Restrictions to the classical domain (throw PreconditionError outside it):
// g(a) = g_bar(a, ord a) cap units, G(a) = G_bar(a, ord a).
ClassSubgroup g_of(const FieldModel& m, SquareClass a, long R);
ClassSubgroup G_of(const FieldModel& m, SquareClass a, long R);

}  // namespace spinor
