#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinor {

// Exact extended rational with denominator dividing 64, plus +/-infinity.
// Valuations, defect orders and the weights fed to the filtration groups are
// integers, halves or quarters; chains like f(R)/2 at quarter inputs reach
// denominator 16, so 64ths leave headroom while keeping comparisons integral.
class Alpha {
 public:
  static constexpr std::int64_t kDen = 64;

  constexpr Alpha() : kind_(Kind::Finite), num_(0) {}

  static constexpr Alpha from_int(std::int64_t v) { return Alpha(Kind::Finite, v * kDen); }
  static constexpr Alpha from_num(std::int64_t sixty_fourths) {
    return Alpha(Kind::Finite, sixty_fourths);
  }
  // value = num/den with den in {1,2,4,8,16,32,64}
  static Alpha from_fraction(std::int64_t num, std::int64_t den) {
    if (den <= 0 || kDen % den != 0) throw std::invalid_argument("alpha: unsupported denominator");
    return Alpha(Kind::Finite, num * (kDen / den));
  }
  static constexpr Alpha pos_inf() { return Alpha(Kind::PosInf, 0); }
  static constexpr Alpha neg_inf() { return Alpha(Kind::NegInf, 0); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  // numerator in 64ths; only meaningful when finite
  constexpr std::int64_t num() const { return num_; }

  bool is_integer() const { return is_finite() && num_ % kDen == 0; }
  std::int64_t as_integer() const {
    if (!is_integer()) throw std::logic_error("alpha: not an integer");
    return num_ / kDen;
  }

  std::int64_t floor() const {
    if (!is_finite()) throw std::logic_error("alpha: floor of infinity");
    std::int64_t q = num_ / kDen, r = num_ % kDen;
    return r < 0 ? q - 1 : q;
  }
  std::int64_t ceil() const {
    if (!is_finite()) throw std::logic_error("alpha: ceil of infinity");
    std::int64_t q = num_ / kDen, r = num_ % kDen;
    return r > 0 ? q + 1 : q;
  }

  friend constexpr bool operator==(const Alpha&, const Alpha&) = default;
  friend constexpr std::strong_ordering operator<=>(const Alpha& a, const Alpha& b) {
    int ra = a.rank(), rb = b.rank();
    if (ra != rb) return ra <=> rb;
    if (a.kind_ != Kind::Finite) return std::strong_ordering::equal;
    return a.num_ <=> b.num_;
  }

  friend Alpha operator+(const Alpha& a, const Alpha& b) {
    if (a.is_finite() && b.is_finite()) return Alpha(Kind::Finite, a.num_ + b.num_);
    if (a.is_pos_inf() && b.is_neg_inf()) throw std::logic_error("alpha: inf - inf");
    if (a.is_neg_inf() && b.is_pos_inf()) throw std::logic_error("alpha: inf - inf");
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return neg_inf();
  }
  friend Alpha operator-(const Alpha& a) {
    if (a.is_pos_inf()) return neg_inf();
    if (a.is_neg_inf()) return pos_inf();
    return Alpha(Kind::Finite, -a.num_);
  }
  friend Alpha operator-(const Alpha& a, const Alpha& b) { return a + (-b); }

  Alpha half() const {
    if (!is_finite()) return *this;
    if (num_ % 2 != 0) throw std::logic_error("alpha: halving exceeds resolution");
    return Alpha(Kind::Finite, num_ / 2);
  }
  Alpha quarter() const { return half().half(); }

  static Alpha min(const Alpha& a, const Alpha& b) { return a < b ? a : b; }
  static Alpha max(const Alpha& a, const Alpha& b) { return a < b ? b : a; }

  std::string str() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    std::int64_t n = num_, d = kDen;
    while (d > 1 && n % 2 == 0) { n /= 2; d /= 2; }
    if (d == 1) return std::to_string(n);
    return std::to_string(n) + "/" + std::to_string(d);
  }

 private:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };
  constexpr Alpha(Kind k, std::int64_t n) : kind_(k), num_(n) {}
  constexpr int rank() const {
    return kind_ == Kind::NegInf ? -1 : (kind_ == Kind::Finite ? 0 : 1);
  }

  Kind kind_;
  std::int64_t num_;
};

// Order of the quadratic defect: an integer in [0, 2e] or infinity.
class DValue {
 public:
  constexpr DValue() : inf_(true), v_(0) {}
  static constexpr DValue infinite() { return DValue(); }
  static constexpr DValue finite(int v) { return DValue(false, v); }

  constexpr bool is_infinite() const { return inf_; }
  int value() const {
    if (inf_) throw std::logic_error("dvalue: infinite");
    return v_;
  }

  Alpha as_alpha() const { return inf_ ? Alpha::pos_inf() : Alpha::from_int(v_); }

  friend constexpr bool operator==(const DValue&, const DValue&) = default;

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  constexpr DValue(bool inf, int v) : inf_(inf), v_(v) {}
  bool inf_;
  int v_;
};

}  // namespace spinor
