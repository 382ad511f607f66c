#include "spinor/rel_spinor.hpp"

#include "spinor/gmaps.hpp"

namespace spinor {

namespace {

long parity(long v) { return ((v % 2) + 2) % 2; }

}  // namespace

LatticePair::LatticePair(GoodBong M, GoodBong N) : M_(std::move(M)), N_(std::move(N)) {
  if (!M_.model().same(N_.model())) throw ValidationError("pair across different models");
  if (N_.rank() > M_.rank()) throw ValidationError("pair needs rank N <= rank M");
  alpha_m_ = invariants(M_).alpha;
  alpha_n_ = invariants(N_).alpha;
}

Alpha LatticePair::S(int i) const {
  if (i >= 1 && i <= n()) return Alpha::from_int(N_.r(i));
  return Alpha::pos_inf();
}

SquareClass LatticePair::pair_class(int i) const {
  return model().mul(M_.prod_class(1, i + 1), N_.prod_class(1, i - 1));
}

bool condition_R1(const LatticePair& p) {
  for (int i = 1; i <= p.n(); ++i) {
    if (p.R(i) <= p.s_int(i)) continue;
    if (i > 1 && i < p.m() && p.R(i) + p.R(i + 1) <= p.s_int(i - 1) + p.s_int(i)) continue;
    return false;
  }
  return true;
}

bool pair_property_A(const LatticePair& p) {
  for (int i = 1; i + 2 <= p.m(); ++i)
    if (Alpha::from_int(p.R(i + 2)) <= p.S(i)) return false;
  return true;
}

Alpha T_of(const LatticePair& p, int i) {
  if (i < 1 || i > p.m() - 1) throw ValidationError("T index out of range");
  Alpha hi = Alpha::from_int(p.R(i + 1));
  if (i >= 2) hi = Alpha::max(hi, p.S(i - 1));
  Alpha lo;
  if (i == p.m() - 1)
    lo = p.S(i);
  else
    lo = Alpha::min(p.S(i), Alpha::from_int(p.R(i + 2)));
  return hi - lo;
}

Alpha beta_of(const LatticePair& p) {
  Alpha beta = Alpha::pos_inf();
  for (int i = 1; i + 2 <= p.m(); ++i) {
    long gap = p.R(i + 2) - p.s_int(i);
    long fl = (gap >= 0) ? gap / 2 : -((-gap + 1) / 2);
    beta = Alpha::min(beta, Alpha::from_int(fl));
  }
  return beta;
}

ClassSubgroup G_pair(const LatticePair& p) {
  if (!condition_R1(p) || !pair_property_A(p))
    throw PreconditionError("pair closed form needs condition R1 and pair property A");
  const FieldModel& m = p.model();
  ClassSubgroup acc = ups(m, beta_of(p));
  for (int i = 1; i <= p.m() - 1; ++i) {
    Alpha w = Alpha::from_int(p.R(i + 1)) - p.S(i);
    acc = product(acc, G_bar(m, p.pair_class(i), w));
  }
  return acc;
}

Theorem75Report units_bounded_report(const LatticePair& p) {
  if (!condition_R1(p)) throw PreconditionError("boundedness report needs condition R1");
  const FieldModel& m = p.model();
  Theorem75Report rep;

  long par = parity(p.R(1));
  rep.parity_ok = true;
  for (int i = 1; i <= p.m(); ++i)
    if (parity(p.R(i)) != par) rep.parity_ok = false;
  for (int i = 1; i <= p.n(); ++i)
    if (parity(p.s_int(i)) != par) rep.parity_ok = false;

  for (int i = 1; i + 2 <= p.m(); ++i) {
    Theorem75Report::Cond2 c;
    c.i = i;
    c.applicable = Alpha::from_int(p.R(i + 2)) <= p.S(i);
    if (c.applicable) {
      long jump = p.R(i + 2) - p.R(i + 1);
      bool sums_equal = p.s_finite(i + 1) &&
                        p.R(i + 1) + p.R(i + 2) == p.s_int(i) + p.s_int(i + 1);
      c.case_sum = sums_equal && parity(jump) == 0 && parity(jump / 2 + m.e()) == 0;
      bool touch = Alpha::from_int(p.R(i + 2)) == p.S(i);
      bool drop = (jump == -2 * m.e()) ||
                  (p.s_finite(i + 1) && p.s_int(i + 1) - p.s_int(i) == -2 * m.e());
      c.case_touch = touch && drop;
      c.ok = c.case_sum || c.case_touch;
      if (!c.ok) rep.cond2_ok = false;
    }
    rep.cond2.push_back(c);
  }

  Alpha two_e = Alpha::from_int(2 * m.e());
  for (int i = 1; i + 1 <= p.m(); ++i) {
    Theorem75Report::Cond3 c;
    c.i = i;
    Alpha t = T_of(p, i);
    SquareClass cls = p.pair_class(i);
    c.bounded = G_bar(m, cls, t).is_subset_of(ClassSubgroup::units(m));
    Alpha dneg = m.d_of(m.neg(cls)).as_alpha();
    if (dneg == two_e)
      c.alt_bounded = true;
    else
      c.alt_bounded = i <= p.n() && t >= -two_e && t.is_finite() &&
                      dneg > Alpha::from_int(m.e()) - t.half();
    if (!c.bounded) rep.cond3_ok = false;
    if (!c.alt_bounded) rep.cond3_alt_ok = false;
    if (rep.parity_ok && c.bounded != c.alt_bounded) rep.alt_agrees = false;
    rep.cond3.push_back(c);
  }

  rep.theta_m_bounded = theta_bounded_in_units(p.M());
  rep.theta_n_bounded = theta_bounded_in_units(p.N());
  return rep;
}

std::string branch_name(ThetaBranch b) {
  switch (b) {
    case ThetaBranch::RankGapGe3: return "RankGap>=3";
    case ThetaBranch::R1Fails: return "R1Fails";
    case ThetaBranch::PropAClosedForm: return "PropA-ClosedForm";
    case ThetaBranch::NoPropAUnitsBounded: return "NoPropA-UnitsBounded";
    case ThetaBranch::NoPropAFull: return "NoPropA-Full";
  }
  return "?";
}

ThetaVerdict theta_X(const LatticePair& p) {
  const FieldModel& m = p.model();
  ThetaVerdict v{ClassSubgroup::full(m), ThetaBranch::RankGapGe3, std::nullopt, {}};
  if (p.gap() >= 3) return v;
  if (!condition_R1(p)) {
    v.branch = ThetaBranch::R1Fails;
    return v;
  }
  if (pair_property_A(p)) {
    v.branch = ThetaBranch::PropAClosedForm;
    ClassSubgroup g = G_pair(p);
    ClassSubgroup tm = theta_plus(p.M());
    v.group = product(g, tm);
    v.factors.push_back("ups^" + beta_of(p).str());
    for (int i = 1; i + 1 <= p.m(); ++i) {
      Alpha w = Alpha::from_int(p.R(i + 1)) - p.S(i);
      v.factors.push_back("G(" + m.name(p.pair_class(i)) + "," + w.str() +
                          ")=" + subgroup_name(G_bar(m, p.pair_class(i), w)));
    }
    v.factors.push_back("theta+(M)=" + subgroup_name(tm));
    return v;
  }
  Theorem75Report rep = units_bounded_report(p);
  if (rep.all()) {
    v.branch = ThetaBranch::NoPropAUnitsBounded;
    v.group = ClassSubgroup::units(m);
  } else {
    v.branch = ThetaBranch::NoPropAFull;
    v.group = ClassSubgroup::full(m);
  }
  v.report = rep;
  return v;
}

Alpha d_bracket(const LatticePair& p, SquareClass eps, int i, int j) {
  const FieldModel& m = p.model();
  SquareClass c = m.mul(eps, m.mul(p.M().prod_class(1, i), p.N().prod_class(1, j)));
  Alpha out = m.d_of(c).as_alpha();
  if (i >= 1 && i <= p.m() - 1) out = Alpha::min(out, p.alpha_m()[i - 1]);
  if (j >= 1 && j <= p.n() - 1) out = Alpha::min(out, p.alpha_n()[j - 1]);
  return out;
}

Alpha a_bar_bound(const LatticePair& p, int i) {
  const FieldModel& m = p.model();
  Alpha gap = Alpha::from_int(p.R(i + 1)) - p.S(i);
  Alpha d = d_bracket(p, m.minus_one(), i + 1, i - 1);
  return Alpha::min(gap.half() + Alpha::from_int(m.e()), gap + d);
}

}  // namespace spinor
