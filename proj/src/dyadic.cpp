#include "spinor/dyadic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace spinor {

namespace {

int ctz128(u128 v) {
  if (v == 0) return 128;
  std::uint64_t lo = static_cast<std::uint64_t>(v);
  if (lo) return __builtin_ctzll(lo);
  return 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
}

}  // namespace

FieldSpec FieldSpec::parse(const std::string& text, int precision) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t += static_cast<char>(tolower(c));
  FieldSpec spec;
  spec.precision = precision;
  if (t == "q2") {
    spec.kind = Kind::Q2;
    return spec;
  }
  if (t.rfind("q2(", 0) == 0 && t.back() == ')') {
    std::string inner = t.substr(3, t.size() - 4);
    try {
      spec.d = std::stoi(inner);
    } catch (...) {
      throw UnsupportedFieldError("unsupported field: " + text);
    }
    if (spec.d == -1 || spec.d == 2 || spec.d == -2 || spec.d == 5) {
      spec.kind = Kind::Ext;
      return spec;
    }
    throw UnsupportedFieldError("unsupported extension Q2(sqrt " + inner +
                                "); supported d: -1, 2, -2, 5");
  }
  throw UnsupportedFieldError("unsupported field: " + text);
}

std::string FieldSpec::str() const {
  if (kind == Kind::Q2) return "Q2";
  return "Q2(" + std::to_string(d) + ")";
}

DyadicField::DyadicField(const FieldSpec& spec) : spec_(spec) {
  if (spec_.precision < 24 || spec_.precision > 128)
    throw PrecisionError("precision must be between 24 and 128 digits");
  if (spec_.kind == FieldSpec::Kind::Q2) {
    e_ = 1;
    dim_ = 3;
  } else {
    ext_d_ = spec_.d;
    e_ = (spec_.d == 5) ? 1 : 2;
    dim_ = 4;
  }
  // Residue systems: unit candidates mod pi^(e+3) decide defect orders, unit
  // candidates mod pi^(4e+2) decide norm representation. B coordinate digits
  // cover pi^k once e*B >= k.
  auto fill = [&](std::vector<std::pair<std::int64_t, std::int64_t>>& out, int digits) {
    std::int64_t bound = std::int64_t(1) << digits;
    for (std::int64_t s = 0; s < bound; ++s)
      for (std::int64_t t = 0; t < (spec_.kind == FieldSpec::Kind::Q2 ? 1 : bound); ++t) {
        if (spec_.kind == FieldSpec::Kind::Q2) {
          if (s % 2 == 1) out.emplace_back(s, 0);
        } else if (ext_d_ == 5) {
          if (s % 2 == 1 || t % 2 == 1) out.emplace_back(s, t);
        } else if (ext_d_ == -1) {
          if ((s + t) % 2 == 1) out.emplace_back(s, t);
        } else {
          if (s % 2 == 1) out.emplace_back(s, t);
        }
      }
  };
  int defect_digits = (e_ + 3 + e_ - 1) / e_;       // ceil((e+3)/e)
  int scan_digits = (4 * e_ + 2 + e_ - 1) / e_;     // ceil((4e+2)/e)
  fill(defect_candidates_, defect_digits);
  fill(scan_candidates_, scan_digits);
}

u128 DyadicField::mask(u128 v, int prec) const {
  if (prec >= 128) return v;
  if (prec <= 0) return 0;
  return v & ((u128(1) << prec) - 1);
}

void DyadicField::raw_mul(u128 a0, u128 a1, u128 b0, u128 b1, u128& r0, u128& r1) const {
  switch (spec_.kind == FieldSpec::Kind::Q2 ? 0 : (ext_d_ == 5 ? 1 : (ext_d_ == -1 ? 2 : 3))) {
    case 0:
      r0 = a0 * b0;
      r1 = 0;
      break;
    case 1:  // theta^2 = theta + 1
      r0 = a0 * b0 + a1 * b1;
      r1 = a0 * b1 + a1 * b0 + a1 * b1;
      break;
    case 2:  // theta^2 = -1
      r0 = a0 * b0 - a1 * b1;
      r1 = a0 * b1 + a1 * b0;
      break;
    default:  // theta^2 = d = +/-2
      r0 = a0 * b0 + static_cast<u128>(static_cast<__int128>(ext_d_)) * (a1 * b1);
      r1 = a0 * b1 + a1 * b0;
      break;
  }
}

void DyadicField::raw_mul_pi(u128 a0, u128 a1, u128& r0, u128& r1) const {
  if (spec_.kind == FieldSpec::Kind::Q2 || ext_d_ == 5) {
    r0 = a0 << 1;
    r1 = a1 << 1;
  } else if (ext_d_ == -1) {  // pi = 1 + theta
    r0 = a0 - a1;
    r1 = a0 + a1;
  } else {  // pi = theta
    r0 = static_cast<u128>(static_cast<__int128>(ext_d_)) * a1;
    r1 = a0;
  }
}

bool DyadicField::raw_div_pi(u128& a0, u128& a1, int prec) const {
  if (spec_.kind == FieldSpec::Kind::Q2) {
    if (a0 & 1) return false;
    a0 >>= 1;
    return true;
  }
  if (ext_d_ == 5) {
    if ((a0 & 1) || (a1 & 1)) return false;
    a0 >>= 1;
    a1 >>= 1;
    return true;
  }
  if (ext_d_ == -1) {  // x/(1+theta) = ((a0+a1) + (a1-a0)theta)/2
    if ((a0 & 1) != (a1 & 1)) return false;
    u128 s = a0 + a1, d = a1 - a0;
    a0 = s >> 1;
    a1 = d >> 1;
    return true;
  }
  // x/theta = a1 + (a0/d) theta
  if (a0 & 1) return false;
  u128 h = a0 >> 1;
  if (ext_d_ == -2) h = u128(0) - h;
  a0 = a1;
  a1 = h;
  (void)prec;
  return true;
}

int DyadicField::raw_ord(u128 a0, u128 a1, int prec) const {
  int v0 = std::min(ctz128(mask(a0, prec)), prec);
  int v1 = std::min(ctz128(mask(a1, prec)), prec);
  if (spec_.kind == FieldSpec::Kind::Q2) return v0 >= prec ? -1 : v0;
  if (ext_d_ == 5) {
    int v = std::min(v0, v1);
    return v >= prec ? -1 : v;
  }
  if (v0 >= prec && v1 >= prec) return -1;
  if (ext_d_ == -1) {
    if (v0 == v1) return 2 * v0 + 1;
    return 2 * std::min(v0, v1);
  }
  // theta^2 = +/-2: contributions 2*v0 and 2*v1+1 have distinct parities
  return std::min(2 * v0, 2 * v1 + 1);
}

TruncatedElement DyadicField::make(long val, u128 c0, u128 c1, int prec) const {
  TruncatedElement x;
  x.zero = false;
  x.val = val;
  x.prec = std::max(prec, 0);
  x.c0 = mask(c0, x.prec);
  x.c1 = mask(c1, x.prec);
  return x;
}

TruncatedElement DyadicField::normalize(bool zero, long val, u128 c0, u128 c1, int prec) const {
  if (zero) {
    TruncatedElement x;
    x.zero = true;
    return x;
  }
  while (true) {
    if (prec <= 0) return make(val, 0, 0, 0);
    c0 = mask(c0, prec);
    c1 = mask(c1, prec);
    int o = raw_ord(c0, c1, prec);
    if (o < 0) return make(val, 0, 0, 0);
    if (o == 0) return make(val, c0, c1, prec);
    for (int k = 0; k < o && prec > 0; ++k) {
      if (!raw_div_pi(c0, c1, prec)) throw Error("internal: pi extraction failed");
      ++val;
      --prec;
    }
  }
}

TruncatedElement DyadicField::zero_element() const {
  TruncatedElement x;
  x.zero = true;
  return x;
}

TruncatedElement DyadicField::from_int(std::int64_t v) const {
  if (v == 0) return zero_element();
  u128 c0 = static_cast<u128>(static_cast<__int128>(v));
  return normalize(false, 0, c0, 0, spec_.precision);
}

TruncatedElement DyadicField::from_coords(std::int64_t a, std::int64_t b) const {
  if (spec_.kind == FieldSpec::Kind::Q2) {
    if (b != 0) throw ValidationError("Q2 elements have a single coordinate");
    return from_int(a);
  }
  if (a == 0 && b == 0) return zero_element();
  return normalize(false, 0, static_cast<u128>(static_cast<__int128>(a)),
                   static_cast<u128>(static_cast<__int128>(b)), spec_.precision);
}

TruncatedElement DyadicField::neg(const TruncatedElement& x) const {
  if (x.zero) return x;
  return make(x.val, u128(0) - x.c0, u128(0) - x.c1, x.prec);
}

TruncatedElement DyadicField::add(const TruncatedElement& x, const TruncatedElement& y) const {
  if (x.zero) return y;
  if (y.zero) return x;
  if (x.indeterminate() || y.indeterminate()) throw PrecisionError("adding indeterminate value");
  const TruncatedElement& lo = (x.val <= y.val) ? x : y;
  const TruncatedElement& hi = (x.val <= y.val) ? y : x;
  long dv = hi.val - lo.val;
  // digits consumed by shifting hi's unit up by pi^dv
  long digits = (spec_.kind == FieldSpec::Kind::Q2 || ext_d_ == 5) ? dv : (dv + 1) / 2;
  int prec = std::min(lo.prec, hi.prec);
  if (digits >= prec) return make(lo.val, lo.c0, lo.c1, lo.prec);
  u128 h0 = hi.c0, h1 = hi.c1;
  for (long k = 0; k < dv; ++k) {
    u128 r0, r1;
    raw_mul_pi(h0, h1, r0, r1);
    h0 = r0;
    h1 = r1;
  }
  return normalize(false, lo.val, lo.c0 + h0, lo.c1 + h1, prec);
}

TruncatedElement DyadicField::sub(const TruncatedElement& x, const TruncatedElement& y) const {
  return add(x, neg(y));
}

TruncatedElement DyadicField::mul(const TruncatedElement& x, const TruncatedElement& y) const {
  if (x.zero || y.zero) return zero_element();
  if (x.indeterminate() || y.indeterminate()) throw PrecisionError("multiplying indeterminate value");
  u128 r0, r1;
  raw_mul(x.c0, x.c1, y.c0, y.c1, r0, r1);
  return normalize(false, x.val + y.val, r0, r1, std::min(x.prec, y.prec));
}

Alpha DyadicField::ord_of(const TruncatedElement& x) const {
  if (x.zero) return Alpha::pos_inf();
  if (x.indeterminate())
    throw PrecisionError("value is zero to working precision but was not constructed as zero");
  return Alpha::from_int(x.val);
}

DValue DyadicField::defect_of_unit(const TruncatedElement& u) const {
  TruncatedElement u0 = make(0, u.c0, u.c1, u.prec);
  int best = 0;
  for (std::size_t i = 0; i < defect_candidates_.size(); ++i) {
    auto [s, t] = defect_candidates_[i];
    TruncatedElement y = from_coords(s, t);
    TruncatedElement diff = sub(u0, mul(y, y));
    if (diff.zero || diff.indeterminate()) return DValue::infinite();
    long o = diff.val;
    if (o > 2 * e_) return DValue::infinite();
    best = std::max(best, static_cast<int>(o));
  }
  return DValue::finite(best);
}

DValue DyadicField::defect_order(const TruncatedElement& x) const {
  if (x.zero) throw ValidationError("defect of zero");
  if (x.indeterminate()) throw PrecisionError("defect of indeterminate value");
  if (x.prec < 2 * e_ + 4) throw PrecisionError("insufficient precision for defect search");
  // Odd valuation: ord(x - y^2) = min(ord x, 2 ord y) <= ord x with equality
  // exactly when 2 ord y > ord x, so the defect order is 0.
  if (((x.val % 2) + 2) % 2 == 1) return DValue::finite(0);
  return defect_of_unit(x);
}

bool DyadicField::is_square(const TruncatedElement& x) const {
  if (x.zero) throw ValidationError("square test of zero");
  if (((x.val % 2) + 2) % 2 == 1) return false;
  return defect_order(x).is_infinite();
}

bool DyadicField::norm_scan(const TruncatedElement& b, const TruncatedElement& gamma) const {
  for (int j = 0; j <= e_ + 1; ++j) {
    TruncatedElement scale = gamma;
    for (int k = 0; k < 2 * j; ++k) {
      u128 r0, r1;
      raw_mul_pi(scale.c0, scale.c1, r0, r1);
      scale = normalize(false, scale.val, r0, r1, scale.prec);
    }
    for (auto [s, t] : scan_candidates_) {
      TruncatedElement y = from_coords(s, t);
      TruncatedElement cand = add(b, mul(scale, mul(y, y)));
      if (cand.zero || cand.indeterminate()) continue;
      if (((cand.val % 2) + 2) % 2 == 0 && defect_order(cand).is_infinite()) return true;
    }
  }
  return false;
}

bool DyadicField::norm_represents(const TruncatedElement& b, const TruncatedElement& gamma) const {
  if (is_square(b) || is_square(gamma)) return true;
  if (is_square(mul(neg(b), gamma))) return true;  // b = -gamma * square
  return norm_scan(b, gamma) || norm_scan(gamma, b);
}

int DyadicField::classify_unit(const TruncatedElement& u) const {
  for (int idx = 0; idx < (1 << dim_); idx += 2) {
    if (is_square(mul(u, reps_[idx]))) return idx;
  }
  throw Error("internal: unit does not match any square class");
}

std::pair<SquareClass, long> DyadicField::square_class(const TruncatedElement& x) const {
  if (x.zero) throw ValidationError("square class of zero");
  if (x.indeterminate()) throw PrecisionError("square class of indeterminate value");
  TruncatedElement u = make(0, x.c0, x.c1, x.prec);
  int idx = classify_unit(u);
  return {SquareClass{static_cast<std::uint16_t>(idx)}, x.val};
}

TruncatedElement DyadicField::rep(SquareClass c) const { return reps_.at(c.idx); }

namespace {

// Closed Q2 Hilbert symbol on 2^a u, 2^b v with u, v odd.
int q2_hilbert(int a, int u, int b, int v) {
  auto eps = [](int w) { return ((w - 1) / 2) & 1; };
  auto om = [](int w) { return ((w * w - 1) / 8) & 1; };
  int ex = eps(u) * eps(v) + a * om(v) + b * om(u);
  return (ex & 1) ? -1 : 1;
}

}  // namespace

int DyadicField::hilbert_symbol(const TruncatedElement& a, const TruncatedElement& b) const {
  if (a.zero || b.zero) throw ValidationError("hilbert symbol of zero");
  if (spec_.kind == FieldSpec::Kind::Q2) {
    if (a.prec < 3 || b.prec < 3) throw PrecisionError("hilbert symbol needs 3 unit digits");
    int u = static_cast<int>(a.c0 & 7u), v = static_cast<int>(b.c0 & 7u);
    return q2_hilbert(static_cast<int>(((a.val % 2) + 2) % 2), u,
                      static_cast<int>(((b.val % 2) + 2) % 2), v);
  }
  if (model_) {
    auto [ca, ra] = square_class(a);
    auto [cb, rb] = square_class(b);
    SquareClass fa{static_cast<std::uint16_t>(ca.idx | (((ra % 2) + 2) % 2))};
    SquareClass fb{static_cast<std::uint16_t>(cb.idx | (((rb % 2) + 2) % 2))};
    return model_->hilbert_of(fa, fb);
  }
  return norm_represents(b, a) ? 1 : -1;
}

void DyadicField::build_model() {
  const int n = 1 << dim_;
  TruncatedElement pi_elt;
  if (spec_.kind == FieldSpec::Kind::Q2 || ext_d_ == 5)
    pi_elt = from_int(2);
  else if (ext_d_ == -1)
    pi_elt = from_coords(1, 1);
  else
    pi_elt = from_coords(0, 1);

  // Discover dim-1 independent unit square classes. Residues mod pi^(2e+1)
  // exhaust the unit classes, so a small fixed candidate pool suffices.
  std::vector<TruncatedElement> gens;
  std::vector<TruncatedElement> span = {from_int(1)};
  auto in_span = [&](const TruncatedElement& u) {
    for (const auto& r : span)
      if (is_square(mul(u, r))) return true;
    return false;
  };
  std::vector<TruncatedElement> pool;
  if (spec_.kind == FieldSpec::Kind::Q2) {
    pool = {from_int(7), from_int(5), from_int(3)};
  } else {
    for (std::int64_t s = 0; s < 8; ++s)
      for (std::int64_t t = 0; t < 8; ++t) {
        TruncatedElement u = from_coords(s, t);
        if (!u.zero && u.val == 0) pool.push_back(u);
      }
  }
  for (const auto& cand : pool) {
    if (static_cast<int>(gens.size()) == dim_ - 1) break;
    if (in_span(cand)) continue;
    gens.push_back(cand);
    std::vector<TruncatedElement> next = span;
    for (const auto& r : span) next.push_back(mul(r, cand));
    span = std::move(next);
  }
  if (static_cast<int>(gens.size()) != dim_ - 1)
    throw Error("internal: square class discovery incomplete");

  reps_.assign(n, from_int(1));
  for (int idx = 0; idx < n; ++idx) {
    TruncatedElement r = from_int(1);
    for (int k = 1; k < dim_; ++k)
      if ((idx >> k) & 1) r = mul(r, gens[k - 1]);
    if (idx & 1) r = mul(r, pi_elt);
    reps_[idx] = r;
  }

  std::vector<std::uint8_t> parity(n);
  std::vector<DValue> d(n);
  for (int idx = 0; idx < n; ++idx) {
    parity[idx] = static_cast<std::uint8_t>(((reps_[idx].val % 2) + 2) % 2);
    d[idx] = defect_order(reps_[idx]);
  }

  int delta_idx = -1;
  for (int idx = 0; idx < n; idx += 2)
    if (d[idx] == DValue::finite(2 * e_)) {
      if (delta_idx >= 0) throw Error("internal: several classes of defect order 2e");
      delta_idx = idx;
    }
  if (delta_idx < 0) throw Error("internal: no class of defect order 2e");
  int minus_one_idx = classify_unit(from_int(-1));

  std::vector<std::int8_t> hil(static_cast<std::size_t>(n) * n, 1);
  if (spec_.kind == FieldSpec::Kind::Q2) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int u = static_cast<int>(reps_[i].c0 & 7u), v = static_cast<int>(reps_[j].c0 & 7u);
        hil[i * n + j] = static_cast<std::int8_t>(
            q2_hilbert(i & 1, u, j & 1, v));
      }
  } else {
    // Pairing on the basis by norm-representation search, then bilinear
    // extension; a sample of composite entries is re-verified directly.
    std::vector<std::vector<int>> basis_h(dim_, std::vector<int>(dim_, 1));
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) {
        TruncatedElement gi = (i == 0) ? pi_elt : gens[i - 1];
        TruncatedElement gj = (j == 0) ? pi_elt : gens[j - 1];
        int v = norm_represents(gj, gi) ? 1 : -1;
        basis_h[i][j] = basis_h[j][i] = v;
      }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int v = 1;
        for (int i = 0; i < dim_; ++i)
          if ((x >> i) & 1)
            for (int j = 0; j < dim_; ++j)
              if ((y >> j) & 1) v *= basis_h[i][j];
        hil[x * n + y] = static_cast<std::int8_t>(v);
      }
    for (int x : {3, 5, 6, 9, 12}) {
      for (int y : {1, 2, 4, 8}) {
        if (x >= n || y >= n) continue;
        int direct = norm_represents(reps_[y], reps_[x]) ? 1 : -1;
        if (direct != hil[x * n + y])
          throw Error("internal: Hilbert pairing scan disagrees with bilinear extension");
      }
    }
  }

  std::vector<std::string> names(n);
  for (int idx = 0; idx < n; ++idx) {
    if (spec_.kind == FieldSpec::Kind::Q2) {
      int u = static_cast<int>(reps_[idx].c0 & 7u);
      names[idx] = std::to_string((idx & 1) ? 2 * u : u);
    } else {
      if (idx == 0) {
        names[idx] = "1";
        continue;
      }
      std::string nm;
      if (idx & 1) nm = "pi";
      for (int k = 1; k < dim_; ++k)
        if ((idx >> k) & 1) {
          if (!nm.empty()) nm += "*";
          nm += "g" + std::to_string(k);
        }
      names[idx] = nm;
    }
  }

  model_ = std::make_shared<FieldModel>(
      e_, dim_, std::move(names), std::move(parity), std::move(d), std::move(hil),
      SquareClass{1}, SquareClass{static_cast<std::uint16_t>(delta_idx)},
      SquareClass{static_cast<std::uint16_t>(minus_one_idx)}, spec_.str());
}

std::shared_ptr<const DyadicField> DyadicField::create(const FieldSpec& spec) {
  std::shared_ptr<DyadicField> f(new DyadicField(spec));
  f->build_model();
  return f;
}

DyadicFieldPtr build_field(const FieldSpec& spec) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, DyadicFieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(static_cast<int>(spec.kind), spec.d, spec.precision);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  DyadicFieldPtr f = DyadicField::create(spec);
  cache.emplace(key, f);
  return f;
}

FieldModelPtr build_field_model(const FieldSpec& spec) { return build_field(spec)->model_ptr(); }

}  // namespace spinor
