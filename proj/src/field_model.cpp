#include "spinor/field_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spinor {

FieldModel::FieldModel(int e, int dim, std::vector<std::string> names,
                       std::vector<std::uint8_t> parity, std::vector<DValue> d,
                       std::vector<std::int8_t> hilbert_matrix, SquareClass pi,
                       SquareClass delta, SquareClass minus_one, std::string label)
    : e_(e),
      dim_(dim),
      label_(std::move(label)),
      names_(std::move(names)),
      parity_(std::move(parity)),
      d_(std::move(d)),
      hilbert_(std::move(hilbert_matrix)),
      pi_(pi),
      delta_(delta),
      minus_one_(minus_one) {
  const std::size_t n = std::size_t(1) << dim_;
  if (e_ < 1 || dim_ < 2) throw ValidationError("field model: bad e or dim");
  if (names_.size() != n || parity_.size() != n || d_.size() != n || hilbert_.size() != n * n)
    throw ValidationError("field model: table sizes do not match dim");
  d_image_.push_back(0);
  for (int k = 1; k <= 2 * e_ - 1; k += 2) d_image_.push_back(k);
  d_image_.push_back(2 * e_);
}

SquareClass FieldModel::cls(int idx) const {
  if (idx < 0 || idx >= num_classes()) throw ValidationError("square class index out of range");
  return SquareClass{static_cast<std::uint16_t>(idx)};
}

SquareClass FieldModel::class_by_name(const std::string& name) const {
  for (int i = 0; i < num_classes(); ++i)
    if (names_[i] == name) return cls(i);
  throw ValidationError("unknown square class name: " + name);
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "  ok   " : "  FAIL ") << c.axiom;
    if (!c.pass) out << "  [" << c.witness << "]";
    out << "\n";
  }
  return out.str();
}

namespace {

void add(ValidationReport& rep, const std::string& axiom, bool pass,
         const std::string& witness = "") {
  rep.checks.push_back({axiom, pass, pass ? "" : witness});
}

}  // namespace

ValidationReport validate_model(const FieldModel& m) {
  ValidationReport rep;
  const int n = m.num_classes();
  auto nm = [&](SquareClass c) { return m.name(c); };

  {
    bool ok = m.ord_parity(m.pi()) == 1 && m.ord_parity(m.identity()) == 0;
    std::string w = ok ? "" : "parity(pi) != 1 or parity(1) != 0";
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b) {
        SquareClass ca = m.cls(a), cb = m.cls(b);
        if ((m.ord_parity(ca) ^ m.ord_parity(cb)) != m.ord_parity(m.mul(ca, cb))) {
          ok = false;
          w = "parity not additive at (" + nm(ca) + "," + nm(cb) + ")";
        }
      }
    add(rep, "ord parity is a homomorphism with parity(pi)=1", ok, w);
  }

  {
    // Im d = {0,1,3,...,2e-1,2e,inf}; d=inf iff identity; d=2e iff delta;
    // d=0 iff odd valuation parity.
    std::set<int> allowed(m.d_image_finite().begin(), m.d_image_finite().end());
    bool ok = true;
    std::string w;
    std::set<int> seen;
    bool seen_inf = false;
    for (int a = 0; ok && a < n; ++a) {
      SquareClass c = m.cls(a);
      DValue d = m.d_of(c);
      if (d.is_infinite()) {
        seen_inf = true;
        if (c != m.identity()) { ok = false; w = "d(" + nm(c) + ")=inf but class is not 1"; }
      } else {
        if (!allowed.count(d.value())) { ok = false; w = "d(" + nm(c) + ")=" + d.str() + " outside Im d"; }
        seen.insert(d.value());
        if (c == m.identity()) { ok = false; w = "d(1) finite"; }
      }
      if (ok && d == DValue::finite(2 * m.e()) && c != m.delta()) {
        ok = false; w = "d(" + nm(c) + ")=2e but class is not delta";
      }
      if (ok && c == m.delta() && !(d == DValue::finite(2 * m.e()))) {
        ok = false; w = "d(delta)=" + d.str() + " != 2e";
      }
      if (ok) {
        bool odd = m.ord_parity(c) == 1;
        bool zero = !d.is_infinite() && d.value() == 0;
        if (odd != zero) { ok = false; w = "d(" + nm(c) + ")=" + d.str() + " vs parity " + std::to_string(m.ord_parity(c)); }
      }
    }
    if (ok && (!seen_inf || seen != allowed)) { ok = false; w = "Im d incomplete"; }
    add(rep, "Im d = {0,1,3,...,2e-1,2e,inf} with inf<->1, 2e<->delta, 0<->odd ord", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b) {
        SquareClass ca = m.cls(a), cb = m.cls(b);
        Alpha lhs = m.d_of(m.mul(ca, cb)).as_alpha();
        Alpha rhs = Alpha::min(m.d_of(ca).as_alpha(), m.d_of(cb).as_alpha());
        if (lhs < rhs) { ok = false; w = "d(ab)<min at (" + nm(ca) + "," + nm(cb) + ")"; }
      }
    add(rep, "domination: d(ab) >= min{d(a),d(b)}", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    Alpha bound = Alpha::from_int(2 * m.e());
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b) {
        SquareClass ca = m.cls(a), cb = m.cls(b);
        if (m.d_of(ca).as_alpha() + m.d_of(cb).as_alpha() > bound && m.hilbert_of(ca, cb) != 1) {
          ok = false; w = "(" + nm(ca) + "," + nm(cb) + ") = -1 despite d(a)+d(b)>2e";
        }
      }
    add(rep, "d(a)+d(b)>2e implies (a,b)=+1", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < n; ++a) {
      SquareClass ca = m.cls(a);
      if (m.d_of(ca).is_infinite()) continue;
      int target = 2 * m.e() - m.d_of(ca).value();
      bool found = false;
      for (int b = 0; b < n && !found; ++b) {
        SquareClass cb = m.cls(b);
        found = !m.d_of(cb).is_infinite() && m.d_of(cb).value() == target &&
                m.hilbert_of(ca, cb) == -1;
      }
      if (!found) { ok = false; w = "no complementary b with d(b)=2e-d(a), (a,b)=-1 for a=" + nm(ca); }
    }
    add(rep, "every a with d(a)<inf pairs to -1 with some b of d(b)=2e-d(a)", ok, w);
  }

  {
    DValue d = m.d_of(m.minus_one());
    bool ok = d.is_infinite() || d.value() >= m.e();
    add(rep, "d(-1) >= e", ok, "d(-1)=" + d.str());
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b) {
        SquareClass ca = m.cls(a), cb = m.cls(b);
        if (m.hilbert_of(ca, cb) != m.hilbert_of(cb, ca)) { ok = false; w = "asymmetric at (" + nm(ca) + "," + nm(cb) + ")"; }
      }
    add(rep, "hilbert symmetry", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < n; ++a)
      for (int b = 0; ok && b < n; ++b)
        for (int c = 0; ok && c < n; ++c) {
          SquareClass ca = m.cls(a), cb = m.cls(b), cc = m.cls(c);
          if (m.hilbert_of(m.mul(ca, cb), cc) != m.hilbert_of(ca, cc) * m.hilbert_of(cb, cc)) {
            ok = false;
            w = "(ab,c) != (a,c)(b,c) at (" + nm(ca) + "," + nm(cb) + "," + nm(cc) + ")";
          }
        }
    add(rep, "hilbert bilinearity", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 1; ok && a < n; ++a) {
      SquareClass ca = m.cls(a);
      bool found = false;
      for (int b = 0; b < n && !found; ++b) found = m.hilbert_of(ca, m.cls(b)) == -1;
      if (!found) { ok = false; w = "degenerate class " + nm(ca); }
    }
    add(rep, "hilbert nondegeneracy", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int a = 0; ok && a < n; ++a) {
      SquareClass ca = m.cls(a);
      if (m.hilbert_of(ca, m.neg(ca)) != 1) { ok = false; w = "(a,-a) != +1 at a=" + nm(ca); }
    }
    add(rep, "(a,-a)=+1 for all a", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int c = 1; c < n && ok; ++c) {
      SquareClass cc = m.cls(c);
      int count = 0;
      for (int x = 0; x < n; ++x)
        if (m.hilbert_of(m.cls(x), cc) == 1) ++count;
      if (count * 2 != n) { ok = false; w = "N(" + nm(cc) + ") has index != 2"; }
    }
    add(rep, "norm group N(c) has index 2 for c != 1", ok, w);
  }

  return rep;
}

}  // namespace spinor
