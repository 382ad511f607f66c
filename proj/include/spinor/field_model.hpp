#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spinor/alpha.hpp"
#include "spinor/errors.hpp"

namespace spinor {

// A square class of the base field, i.e. an element of F*/F*^2. Classes are
// coordinate vectors over a fixed basis of the F_2-space F*/F*^2; the index
// IS the coordinate bitmask, so the group law is XOR of indices.
struct SquareClass {
  std::uint16_t idx = 0;
  friend constexpr bool operator==(const SquareClass&, const SquareClass&) = default;
  friend constexpr auto operator<=>(const SquareClass&, const SquareClass&) = default;
};

// Finite table model of the square-class structure of a dyadic local field:
// ramification index e, the classes, valuation parity, the order-of-defect
// table and the Hilbert pairing. Immutable once built; every higher layer
// computes exclusively against these tables.
class FieldModel {
 public:
  FieldModel(int e, int dim, std::vector<std::string> names,
             std::vector<std::uint8_t> parity, std::vector<DValue> d,
             std::vector<std::int8_t> hilbert_matrix, SquareClass pi,
             SquareClass delta, SquareClass minus_one, std::string label);

  int e() const { return e_; }
  int dim() const { return dim_; }
  int num_classes() const { return 1 << dim_; }
  const std::string& label() const { return label_; }

  SquareClass identity() const { return SquareClass{0}; }
  SquareClass pi() const { return pi_; }
  SquareClass delta() const { return delta_; }
  SquareClass minus_one() const { return minus_one_; }

  SquareClass cls(int idx) const;
  SquareClass mul(SquareClass a, SquareClass b) const {
    check(a); check(b);
    return SquareClass{static_cast<std::uint16_t>(a.idx ^ b.idx)};
  }
  SquareClass neg(SquareClass a) const { return mul(a, minus_one_); }
  int ord_parity(SquareClass a) const { check(a); return parity_[a.idx]; }
  bool is_unit_class(SquareClass a) const { return ord_parity(a) == 0; }
  DValue d_of(SquareClass a) const { check(a); return d_[a.idx]; }
  int hilbert_of(SquareClass a, SquareClass b) const {
    check(a); check(b);
    return hilbert_[a.idx * (1 << dim_) + b.idx];
  }

  const std::string& name(SquareClass a) const { check(a); return names_[a.idx]; }
  // Inverse of name(); throws ValidationError for unknown names.
  SquareClass class_by_name(const std::string& name) const;

  // Finite members of the image of d, ascending: {0,1,3,...,2e-1,2e}.
  const std::vector<int>& d_image_finite() const { return d_image_; }

  bool same(const FieldModel& other) const { return this == &other; }

 private:
  void check(SquareClass a) const {
    if (a.idx >= num_classes()) throw ValidationError("square class out of range");
  }

  int e_;
  int dim_;
  std::string label_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> parity_;
  std::vector<DValue> d_;
  std::vector<std::int8_t> hilbert_;
  SquareClass pi_, delta_, minus_one_;
  std::vector<int> d_image_;
};

using FieldModelPtr = std::shared_ptr<const FieldModel>;

struct AxiomCheck {
  std::string axiom;
  bool pass = false;
  std::string witness;  // empty when pass
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string summary() const;
};

// Checks the defining axioms of the square-class structure exhaustively over
// all classes: shape of Im d, uniqueness of the class of defect 2e, the
// domination principle, the two defect/Hilbert compatibility laws, d(-1) >= e,
// and bilinearity/symmetry/nondegeneracy of the pairing. Reports, never throws.
ValidationReport validate_model(const FieldModel& m);

}  // namespace spinor
