#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinor/bong.hpp"
#include "spinor/class_group.hpp"

namespace spinor {

// A formal pair of lattices N inside M over one model. Pairs with rank gap
// >= 3 are legal input (the relative group is everything); the closed forms
// run on gaps <= 2 with the convention S_{n+1} = +infinity when the gap is 2.
class LatticePair {
 public:
  LatticePair(GoodBong M, GoodBong N);

  const GoodBong& M() const { return M_; }
  const GoodBong& N() const { return N_; }
  const FieldModel& model() const { return M_.model(); }
  int m() const { return M_.rank(); }
  int n() const { return N_.rank(); }
  int gap() const { return m() - n(); }

  long R(int i) const { return M_.r(i); }
  // S_i as an extended value: finite for i <= n, +infinity past the end.
  Alpha S(int i) const;
  bool s_finite(int i) const { return i >= 1 && i <= n(); }
  long s_int(int i) const { return N_.r(i); }

  // a_{1,i+1} b_{1,i-1}, the class attached to index 1 <= i <= m-1.
  SquareClass pair_class(int i) const;

  const std::vector<Alpha>& alpha_m() const { return alpha_m_; }
  const std::vector<Alpha>& alpha_n() const { return alpha_n_; }

 private:
  GoodBong M_, N_;
  std::vector<Alpha> alpha_m_, alpha_n_;
};

// First condition of the representation theorem: for 1 <= i <= n either
// R_i <= S_i or 1 < i < m and R_i + R_{i+1} <= S_{i-1} + S_i.
bool condition_R1(const LatticePair& p);

// Pair spacing condition: R_{i+2} > S_i for 1 <= i <= m-2.
bool pair_property_A(const LatticePair& p);

// T_i = max{R_{i+1}, S_{i-1}} - min{S_i, R_{i+2}} with the boundary omissions
// (drop S_{i-1} at i=1, drop R_{i+2} at i=m-1); -infinity at the top index
// when the rank gap is 2.
Alpha T_of(const LatticePair& p, int i);

// beta = min over 1 <= i <= m-2 of floor((R_{i+2} - S_i)/2); +infinity for
// m <= 2.
Alpha beta_of(const LatticePair& p);

// ups(beta) * prod_{i=1}^{m-1} G_bar(a_{1,i+1}b_{1,i-1}, R_{i+1}-S_i); the
// top factor degenerates to N(-a_{1,m}b_{1,m-2}) when the rank gap is 2.
// Requires condition R1 and pair property A.
ClassSubgroup G_pair(const LatticePair& p);

struct Theorem75Report {
  bool parity_ok = false;  // condition (1): all R_i, S_i share one parity
  struct Cond2 {
    int i = 0;
    bool applicable = false;  // R_{i+2} <= S_i
    bool case_sum = false;    // sums equal plus half-gap parity e (mod 2)
    bool case_touch = false;  // R_{i+2} = S_i with a -2e jump on either side
    bool ok = true;
  };
  std::vector<Cond2> cond2;
  bool cond2_ok = true;
  struct Cond3 {
    int i = 0;
    bool bounded = false;      // G_bar(A_i, T_i) within the unit classes
    bool alt_bounded = false;  // defect reformulation
  };
  std::vector<Cond3> cond3;
  bool cond3_ok = true;
  bool cond3_alt_ok = true;
  bool alt_agrees = true;  // (3) vs (3'), meaningful under (1)
  bool theta_m_bounded = false;
  bool theta_n_bounded = false;
  // Note: the half-gap parity in (2)(a) is evaluated on R_{i+2}-R_{i+1}.
  bool all() const {
    return parity_ok && cond2_ok && cond3_ok && theta_m_bounded && theta_n_bounded;
  }
};

// The boundedness test: the relative spinor group stays within the unit
// classes iff all four reported conditions hold. Requires condition R1.
Theorem75Report units_bounded_report(const LatticePair& p);

enum class ThetaBranch { RankGapGe3, R1Fails, PropAClosedForm, NoPropAUnitsBounded, NoPropAFull };

std::string branch_name(ThetaBranch b);

struct ThetaVerdict {
  ClassSubgroup group;
  ThetaBranch branch;
  std::optional<Theorem75Report> report;
  std::vector<std::string> factors;
};

// Closed-form relative spinor norm of {sigma : N inside sigma M}.
ThetaVerdict theta_X(const LatticePair& p);

// d[eps a_{1,i} b_{1,j}]: the defect order of the class capped by the alpha
// invariants of the two lattices (skipped at the boundary indices).
Alpha d_bracket(const LatticePair& p, SquareClass eps, int i, int j);

// min{(R_{i+1}-S_i)/2 + e, R_{i+1}-S_i + d[-a_{1,i+1}b_{1,i-1}]}: the lower
// bound satisfied by d[a_{1,i}b_{1,i}] on genuine pairs.
Alpha a_bar_bound(const LatticePair& p, int i);

}  // namespace spinor
