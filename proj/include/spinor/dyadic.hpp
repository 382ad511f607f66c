#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "spinor/alpha.hpp"
#include "spinor/errors.hpp"
#include "spinor/field_model.hpp"

namespace spinor {

// Which concrete dyadic field backs the computation. Supported: Q2 and the
// quadratic extensions Q2(sqrt d) for d in {-1, 2, -2, 5} (one unramified and
// three ramified). Precision is the number of accurate 2-adic coordinate
// digits carried by elements.
struct FieldSpec {
  enum class Kind { Q2, Ext };
  Kind kind = Kind::Q2;
  int d = 0;
  int precision = 64;

  static FieldSpec parse(const std::string& text, int precision = 64);
  std::string str() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

using u128 = unsigned __int128;

// An element of the field, truncated: pi^val * unit, with the unit's
// coordinates (over the integral basis {1} or {1, theta}) known modulo
// 2^prec. Exact zero is flagged; a value that cancelled to zero within the
// available digits is "indeterminate" (prec == 0) and reading it throws.
struct TruncatedElement {
  bool zero = false;
  long val = 0;
  u128 c0 = 0;
  u128 c1 = 0;
  int prec = 0;

  bool indeterminate() const { return !zero && prec <= 0; }
};

// Concrete arithmetic for one FieldSpec plus the square-class model built
// from it. The model build is the ground truth: square classes are discovered
// by square testing, the d table by defect search, the Hilbert pairing by the
// closed Q2 formula or by norm-representation search in extensions.
class DyadicField {
 public:
  static std::shared_ptr<const DyadicField> create(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  int e() const { return e_; }
  int precision() const { return spec_.precision; }
  const FieldModel& model() const { return *model_; }
  FieldModelPtr model_ptr() const { return model_; }

  TruncatedElement zero_element() const;
  TruncatedElement from_int(std::int64_t v) const;
  // a + b*theta; for Q2 b must be 0. theta is sqrt(d) for ramified
  // extensions and (1+sqrt(5))/2 for the unramified one.
  TruncatedElement from_coords(std::int64_t a, std::int64_t b) const;

  TruncatedElement add(const TruncatedElement& x, const TruncatedElement& y) const;
  TruncatedElement sub(const TruncatedElement& x, const TruncatedElement& y) const;
  TruncatedElement mul(const TruncatedElement& x, const TruncatedElement& y) const;
  TruncatedElement neg(const TruncatedElement& x) const;

  // Valuation; +inf for the exact zero. Throws PrecisionError when the value
  // cancelled below the carried precision.
  Alpha ord_of(const TruncatedElement& x) const;

  // Order of the quadratic defect of x, found by maximizing ord(x - y^2) over
  // a complete residue search; values beyond 2e mean x is a square.
  DValue defect_order(const TruncatedElement& x) const;

  bool is_square(const TruncatedElement& x) const;

  int hilbert_symbol(const TruncatedElement& a, const TruncatedElement& b) const;

  // Projection to (unit square class, valuation).
  std::pair<SquareClass, long> square_class(const TruncatedElement& x) const;

  // Canonical representative element of a square class.
  TruncatedElement rep(SquareClass c) const;

 private:
  explicit DyadicField(const FieldSpec& spec);
  void build_model();

  TruncatedElement make(long val, u128 c0, u128 c1, int prec) const;
  TruncatedElement normalize(bool zero, long val, u128 c0, u128 c1, int prec) const;
  u128 mask(u128 v, int prec) const;
  // exact coordinate ops on raw pairs
  void raw_mul(u128 a0, u128 a1, u128 b0, u128 b1, u128& r0, u128& r1) const;
  void raw_mul_pi(u128 a0, u128 a1, u128& r0, u128& r1) const;
  bool raw_div_pi(u128& a0, u128& a1, int prec) const;  // true if divisible
  int raw_ord(u128 a0, u128 a1, int prec) const;        // < prec*ord(2)/..., -1 if zero mod 2^prec

  DValue defect_of_unit(const TruncatedElement& u) const;
  // Does x^2 - gamma*y^2 = b have a solution (i.e. is b a norm from
  // F(sqrt(gamma)))? b, gamma must be normalized representatives.
  bool norm_represents(const TruncatedElement& b, const TruncatedElement& gamma) const;
  bool norm_scan(const TruncatedElement& b, const TruncatedElement& gamma) const;
  int classify_unit(const TruncatedElement& u) const;  // index among unit classes

  FieldSpec spec_;
  int e_;
  int dim_;
  long ext_d_ = 0;
  std::vector<TruncatedElement> reps_;  // per class index
  FieldModelPtr model_;
  std::vector<std::pair<std::int64_t, std::int64_t>> defect_candidates_;
  std::vector<std::pair<std::int64_t, std::int64_t>> scan_candidates_;
};

using DyadicFieldPtr = std::shared_ptr<const DyadicField>;

// Shared per-process cache keyed by spec (models are immutable).
DyadicFieldPtr build_field(const FieldSpec& spec);
FieldModelPtr build_field_model(const FieldSpec& spec);

}  // namespace spinor
