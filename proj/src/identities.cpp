#include "spinor/identities.hpp"

#include <sstream>

#include "spinor/class_group.hpp"
#include "spinor/gmaps.hpp"

namespace spinor {

namespace {

using Witness = std::optional<std::string>;

std::vector<Alpha> quarter_grid(const FieldModel& m) {
  std::vector<Alpha> g;
  long lo = -(2 * m.e() + 2) * 4, hi = (2 * m.e() + 2) * 4;
  for (long q = lo; q <= hi; ++q) g.push_back(Alpha::from_fraction(q, 4));
  return g;
}

std::vector<long> int_grid(const FieldModel& m) {
  std::vector<long> g;
  for (long r = -(2 * m.e() + 2); r <= 2 * m.e() + 2; ++r) g.push_back(r);
  return g;
}

std::string tup(const FieldModel& m, std::initializer_list<SquareClass> cs,
                std::initializer_list<Alpha> rs) {
  std::ostringstream o;
  o << "(";
  bool first = true;
  for (auto c : cs) {
    if (!first) o << ",";
    o << m.name(c);
    first = false;
  }
  for (auto r : rs) {
    if (!first) o << ",";
    o << r.str();
    first = false;
  }
  o << ")";
  return o.str();
}

Alpha two_e(const FieldModel& m) { return Alpha::from_int(2 * m.e()); }

bool is_exc_point(const FieldModel& m, SquareClass a, const Alpha& R) {
  return a == m.minus_one() && R == -two_e(m);
}

// --- filtration -------------------------------------------------------------

Witness chk_ups_filtration(const FieldModel& m) {
  auto grid = quarter_grid(m);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i; j < grid.size(); ++j) {
      ClassSubgroup lo = ups(m, grid[i]), hi = ups(m, grid[j]);
      if (!hi.is_subset_of(lo)) return tup(m, {}, {grid[i], grid[j]}) + " not decreasing";
      if (!(product(lo, hi) == lo)) return tup(m, {}, {grid[i], grid[j]}) + " product != min";
    }
  if (!ups(m, Alpha::from_int(0)).is_full()) return std::string("ups(0) != full");
  if (!(ups(m, Alpha::from_int(1)) == ClassSubgroup::units(m))) return std::string("ups(1) != units");
  if (!(ups(m, two_e(m)) == span(m, {m.delta()}))) return std::string("ups(2e) != <Delta>");
  if (!ups(m, two_e(m) + Alpha::from_fraction(1, 4)).is_trivial())
    return std::string("ups(>2e) != trivial");
  return std::nullopt;
}

Witness chk_ups_norm_inclusion(const FieldModel& m) {
  for (const Alpha& al : quarter_grid(m))
    for (int c = 0; c < m.num_classes(); ++c) {
      SquareClass cc = m.cls(c);
      bool lhs = ups(m, al).is_subset_of(norm_group(m, cc));
      bool rhs = al + m.d_of(cc).as_alpha() > two_e(m);
      if (lhs != rhs) return tup(m, {cc}, {al});
    }
  return std::nullopt;
}

Witness chk_ups_cap_norm_inclusion(const FieldModel& m) {
  for (const Alpha& al : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a)
      for (int c = 0; c < m.num_classes(); ++c) {
        SquareClass ca = m.cls(a), cc = m.cls(c);
        bool lhs = intersect(ups(m, al), norm_group(m, ca)).is_subset_of(norm_group(m, cc));
        Alpha mx = Alpha::max(m.d_of(m.mul(ca, cc)).as_alpha(), m.d_of(cc).as_alpha());
        bool rhs = al + mx > two_e(m);
        if (lhs != rhs) return tup(m, {ca, cc}, {al});
      }
  return std::nullopt;
}

Witness chk_defect_min_max_swap(const FieldModel& m) {
  for (const Alpha& x : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a)
      for (int b = 0; b < m.num_classes(); ++b) {
        SquareClass ca = m.cls(a), cb = m.cls(b);
        Alpha da = m.d_of(ca).as_alpha(), db = m.d_of(cb).as_alpha();
        Alpha dab = m.d_of(m.mul(ca, cb)).as_alpha();
        bool lhs = Alpha::min(x, dab) + Alpha::max(da, db) > x + x;
        bool rhs = da + db > x + x;
        if (lhs != rhs) return tup(m, {ca, cb}, {x});
      }
  return std::nullopt;
}

// --- weight domain ----------------------------------------------------------

Witness chk_weight_domain_descriptions(const FieldModel& m) {
  Alpha zero = Alpha::from_int(0);
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      Alpha dna = m.d_of(m.neg(ca)).as_alpha();
      bool base = in_A_bar(m, ca, R);
      bool desc2 = (dna < two_e(m) && R + dna > zero) ||
                   (dna >= two_e(m) && R + two_e(m) >= zero);
      bool desc3 = (R + two_e(m) > zero && R + dna > zero) ||
                   (ca == m.minus_one() && R == -two_e(m)) ||
                   (ca == m.neg(m.delta()) && R == -two_e(m));
      if (base != desc2 || base != desc3) return tup(m, {ca}, {R});
    }
  // Integer weights matching the valuation parity: the classical domain is
  // the preimage of the extended one.
  for (long R : int_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      if (m.ord_parity(ca) != ((R % 2) + 2) % 2) continue;
      if (in_A(m, ca, R) != in_A_bar(m, ca, Alpha::from_int(R)))
        return tup(m, {ca}, {Alpha::from_int(R)}) + " preimage";
    }
  return std::nullopt;
}

// --- small g ----------------------------------------------------------------

Witness chk_g_small_bounded_in_units(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      bool lhs = g_bar(m, ca, R).is_subset_of(ClassSubgroup::units(m));
      bool rhs = in_A_bar(m, ca, R) || ca == m.neg(m.delta());
      if (lhs != rhs) return tup(m, {ca}, {R});
    }
  return std::nullopt;
}

Witness chk_g_small_outside_domain(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      if (in_A_bar(m, ca, R)) continue;
      if (!(g_bar(m, ca, R) == norm_group(m, m.neg(ca)))) return tup(m, {ca}, {R});
    }
  return std::nullopt;
}

Witness chk_g_small_two_cases(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      Alpha dna = m.d_of(m.neg(ca)).as_alpha();
      ClassSubgroup gh = g_hat(m, ca, R);
      Alpha e = Alpha::from_int(m.e());
      if (dna > e - R.half()) {
        if (!(gh == ups(m, R.half() + e))) return tup(m, {ca}, {R}) + " high-defect case";
      } else {
        ClassSubgroup expect = intersect(ups(m, R + dna), norm_group(m, m.neg(ca)));
        if (!(gh == expect)) return tup(m, {ca}, {R}) + " low-defect case";
        if (ups(m, R + dna).size() != 2 * gh.size()) return tup(m, {ca}, {R}) + " index != 2";
        if (!(g_bar(m, ca, R) == gh)) return tup(m, {ca}, {R}) + " bar != hat";
      }
    }
  return std::nullopt;
}

Witness chk_g_small_monotone(const FieldModel& m) {
  auto grid = quarter_grid(m);
  for (int a = 0; a < m.num_classes(); ++a)
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i; j < grid.size(); ++j) {
        SquareClass ca = m.cls(a);
        if (!g_bar(m, ca, grid[j]).is_subset_of(g_bar(m, ca, grid[i])))
          return tup(m, {ca}, {grid[i], grid[j]});
      }
  return std::nullopt;
}

Witness chk_g_small_low_weight_norm(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      if (!(m.d_of(m.neg(ca)).as_alpha() <= -R)) continue;
      if (!(g_bar(m, ca, R) == norm_group(m, m.neg(ca)))) return tup(m, {ca}, {R});
    }
  return std::nullopt;
}

Witness chk_g_small_self_membership(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m)) {
    if (R > Alpha::from_int(0)) continue;
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      if (!g_bar(m, ca, R).contains(ca)) return tup(m, {ca}, {R});
    }
  }
  return std::nullopt;
}

Witness chk_g_small_filtration_bound(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      ClassSubgroup g = g_bar(m, ca, R);
      if (!g.is_subset_of(ups(m, R))) return tup(m, {ca}, {R});
      if (R > two_e(m) && !g.is_trivial()) return tup(m, {ca}, {R}) + " not trivial past 2e";
    }
  return std::nullopt;
}

Witness chk_g_small_norm_inclusion(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a)
      for (int c = 0; c < m.num_classes(); ++c) {
        SquareClass ca = m.cls(a), cc = m.cls(c);
        Alpha key = R + m.d_of(m.mul(m.neg(ca), cc)).as_alpha() + m.d_of(cc).as_alpha();
        bool rhs_hat = key > two_e(m);
        if (g_hat(m, ca, R).is_subset_of(norm_group(m, cc)) != rhs_hat)
          return tup(m, {ca, cc}, {R}) + " hat";
        bool rhs_bar = rhs_hat || (is_exc_point(m, ca, R) && cc == m.delta());
        if (g_bar(m, ca, R).is_subset_of(norm_group(m, cc)) != rhs_bar)
          return tup(m, {ca, cc}, {R}) + " bar";
      }
  return std::nullopt;
}

Witness chk_g_small_equal_weight_product(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a)
      for (int b = 0; b < m.num_classes(); ++b) {
        SquareClass ca = m.cls(a), cb = m.cls(b);
        ClassSubgroup u = ups(m, R + m.d_of(m.mul(ca, cb)).as_alpha());
        ClassSubgroup lhs = product(g_hat(m, ca, R), g_hat(m, cb, R));
        if (!(lhs == product(u, g_hat(m, ca, R))) || !(lhs == product(u, g_hat(m, cb, R))))
          return tup(m, {ca, cb}, {R}) + " hat";
        bool excluded = R == -two_e(m) &&
                        ((ca == m.minus_one() && cb == m.neg(m.delta())) ||
                         (cb == m.minus_one() && ca == m.neg(m.delta())));
        if (excluded) continue;
        ClassSubgroup lhsb = product(g_bar(m, ca, R), g_bar(m, cb, R));
        if (!(lhsb == product(u, g_bar(m, ca, R))) || !(lhsb == product(u, g_bar(m, cb, R))))
          return tup(m, {ca, cb}, {R}) + " bar";
      }
  return std::nullopt;
}

Witness chk_g_small_mixed_weight_product(const FieldModel& m) {
  auto grid = quarter_grid(m);
  for (int a = 0; a < m.num_classes(); ++a)
    for (int b = 0; b < m.num_classes(); ++b)
      for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          const Alpha &R = grid[i], &S = grid[j];  // R >= S
          SquareClass ca = m.cls(a), cb = m.cls(b);
          ClassSubgroup u = ups(m, R + m.d_of(m.mul(ca, cb)).as_alpha());
          if (!(product(g_hat(m, ca, R), g_hat(m, cb, S)) == product(u, g_hat(m, cb, S))))
            return tup(m, {ca, cb}, {R, S}) + " hat";
          bool exc1 = R == -two_e(m) && ca == m.minus_one() && cb == m.neg(m.delta());
          bool exc2 = R == -two_e(m) && S == -two_e(m) && ca == m.neg(m.delta()) &&
                      cb == m.minus_one();
          if (exc1 || exc2) continue;
          if (!(product(g_bar(m, ca, R), g_bar(m, cb, S)) == product(u, g_bar(m, cb, S))))
            return tup(m, {ca, cb}, {R, S}) + " bar";
        }
  return std::nullopt;
}

// --- capital G --------------------------------------------------------------

Witness chk_G_monotone(const FieldModel& m) {
  auto grid = quarter_grid(m);
  for (int a = 0; a < m.num_classes(); ++a)
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i; j < grid.size(); ++j) {
        SquareClass ca = m.cls(a);
        if (!G_bar(m, ca, grid[j]).is_subset_of(G_bar(m, ca, grid[i])))
          return tup(m, {ca}, {grid[i], grid[j]});
      }
  return std::nullopt;
}

Witness chk_G_weight_split(const FieldModel& m) {
  Alpha e = Alpha::from_int(m.e());
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      ClassSubgroup G = G_bar(m, ca, R);
      if (R <= two_e(m)) {
        if (!(G == g_bar(m, ca, R.half() - e))) return tup(m, {ca}, {R}) + " low";
      } else {
        if (!(G == extend(g_bar(m, ca, R - two_e(m)), ca))) return tup(m, {ca}, {R}) + " high";
      }
      if (is_exc_point(m, ca, R)) {
        if (!(G == ClassSubgroup::units(m))) return tup(m, {ca}, {R}) + " exceptional";
      } else {
        if (!(G == extend(g_hat(m, ca, f_of(m, R)), ca))) return tup(m, {ca}, {R}) + " via hat";
      }
      if (!g_bar(m, ca, R).is_subset_of(G) || !G.is_subset_of(norm_group(m, m.neg(ca))))
        return tup(m, {ca}, {R}) + " sandwich";
    }
  return std::nullopt;
}

Witness chk_G_closed_forms(const FieldModel& m) {
  Alpha e = Alpha::from_int(m.e());
  Alpha zero = Alpha::from_int(0);
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      ClassSubgroup G = G_bar(m, ca, R);
      Alpha dna = m.d_of(m.neg(ca)).as_alpha();
      ClassSubgroup Nna = norm_group(m, m.neg(ca));
      if (!is_exc_point(m, ca, R)) {
        if (R <= two_e(m)) {
          Alpha threshold = e + e.half() - R.quarter();  // 3e/2 - R/4
          ClassSubgroup expect =
              (dna > threshold)
                  ? ups(m, R.quarter() + e.half())
                  : intersect(ups(m, R.half() + dna - e), Nna);
          if (!(G == expect)) return tup(m, {ca}, {R}) + " low closed form";
        } else {
          Alpha key = Alpha::min(R.half(), R + dna - two_e(m));
          ClassSubgroup expect = extend(intersect(ups(m, key), Nna), ca);
          if (!(G == expect)) return tup(m, {ca}, {R}) + " high closed form";
        }
      }
      bool norm_case = (dna <= e - R.half()) || !in_A_bar(m, ca, R) ||
                       (m.ord_parity(ca) == 1 && R <= two_e(m) + Alpha::from_int(2));
      if (norm_case && !(G == Nna)) return tup(m, {ca}, {R}) + " norm-group case";
      if (dna > e - R.half() && !is_exc_point(m, ca, R) &&
          !ups(m, R.half() + e).is_subset_of(G))
        return tup(m, {ca}, {R}) + " ups(R/2+e) inclusion";
      if (!G.is_subset_of(extend(ups(m, R - two_e(m)), ca))) return tup(m, {ca}, {R}) + " range";
      if (R > two_e(m) + two_e(m) && !(G == extend(ClassSubgroup::trivial(m), ca)))
        return tup(m, {ca}, {R}) + " past 4e";
      (void)zero;
    }
  return std::nullopt;
}

Witness chk_G_norm_inclusion(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a)
      for (int c = 0; c < m.num_classes(); ++c) {
        SquareClass ca = m.cls(a), cc = m.cls(c);
        bool lhs = G_bar(m, ca, R).is_subset_of(norm_group(m, cc));
        Alpha key = f_of(m, R) + m.d_of(m.mul(m.neg(ca), cc)).as_alpha() +
                    m.d_of(cc).as_alpha();
        bool rhs = (key > two_e(m) && m.hilbert_of(ca, cc) == 1) ||
                   (is_exc_point(m, ca, R) && cc == m.delta());
        if (lhs != rhs) return tup(m, {ca, cc}, {R});
        if (R <= two_e(m)) {
          bool rhs_low = key > two_e(m) || (is_exc_point(m, ca, R) && cc == m.delta());
          if (lhs != rhs_low) return tup(m, {ca, cc}, {R}) + " pairing condition not superfluous";
        }
      }
  return std::nullopt;
}

Witness chk_G_product_rule(const FieldModel& m) {
  auto grid = quarter_grid(m);
  for (int a = 0; a < m.num_classes(); ++a)
    for (int b = 0; b < m.num_classes(); ++b)
      for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
          const Alpha &R = grid[i], &S = grid[j];
          SquareClass ca = m.cls(a), cb = m.cls(b);
          bool exc1 = R == -two_e(m) && ca == m.minus_one() && cb == m.neg(m.delta());
          bool exc2 = R == -two_e(m) && S == -two_e(m) && ca == m.neg(m.delta()) &&
                      cb == m.minus_one();
          if (exc1 || exc2) continue;
          ClassSubgroup lhs = product(G_bar(m, ca, R), G_bar(m, cb, S));
          ClassSubgroup u = ups(m, f_of(m, R) + m.d_of(m.mul(ca, cb)).as_alpha());
          ClassSubgroup base = product(u, G_bar(m, cb, S));
          if (!(lhs == extend(base, m.mul(ca, cb))) || !(lhs == extend(base, ca)))
            return tup(m, {ca, cb}, {R, S});
          if (R <= two_e(m) && !(lhs == base))
            return tup(m, {ca, cb}, {R, S}) + " spanning factor not superfluous";
        }
  return std::nullopt;
}

Witness chk_G_units_bounded(const FieldModel& m) {
  Alpha e = Alpha::from_int(m.e());
  Alpha zero = Alpha::from_int(0);
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      bool lhs = G_bar(m, ca, R).is_subset_of(ClassSubgroup::units(m));
      Alpha dna = m.d_of(m.neg(ca)).as_alpha();
      bool even = m.ord_parity(ca) == 0;
      bool rhs = dna == two_e(m) || (even && R >= -two_e(m) && dna > e - R.half());
      if (lhs != rhs) return tup(m, {ca}, {R}) + " general form";
      bool rhs_ranges;
      if (R < -two_e(m))
        rhs_ranges = dna == two_e(m);
      else if (R == -two_e(m))
        rhs_ranges = dna >= two_e(m);
      else if (R <= two_e(m))
        rhs_ranges = dna > e - R.half();
      else
        rhs_ranges = dna > zero;
      if (R >= two_e(m) && lhs != even) return tup(m, {ca}, {R}) + " high-weight parity form";
      if (lhs != rhs_ranges) return tup(m, {ca}, {R}) + " per-range form";
    }
  return std::nullopt;
}

Witness chk_G_signed_product_closure(const FieldModel& m) {
  std::vector<long> rs = int_grid(m);
  // s = 2 exhaustive
  for (int a1 = 0; a1 < m.num_classes(); ++a1)
    for (int a2 = 0; a2 < m.num_classes(); ++a2)
      for (long r1 : rs)
        for (long r2 : rs)
          for (long r : rs) {
            if (r < -2 * m.e() || r < r1 || r < r2) continue;
            SquareClass c1 = m.cls(a1), c2 = m.cls(a2);
            if (!G_bar(m, c1, Alpha::from_int(r1)).is_subset_of(ClassSubgroup::units(m)))
              continue;
            if (!G_bar(m, c2, Alpha::from_int(r2)).is_subset_of(ClassSubgroup::units(m)))
              continue;
            SquareClass prod = m.neg(m.mul(c1, c2));
            if (!G_bar(m, prod, Alpha::from_int(r)).is_subset_of(ClassSubgroup::units(m)))
              return tup(m, {c1, c2}, {Alpha::from_int(r1), Alpha::from_int(r2), Alpha::from_int(r)});
          }
  // s = 3 on a coarser weight grid
  std::vector<long> coarse = {-2 * m.e(), 0, 2 * m.e(), 2 * m.e() + 2};
  for (int a1 = 0; a1 < m.num_classes(); ++a1)
    for (int a2 = 0; a2 < m.num_classes(); ++a2)
      for (int a3 = 0; a3 < m.num_classes(); ++a3)
        for (long r1 : coarse)
          for (long r : coarse) {
            if (r < -2 * m.e() || r < r1) continue;
            SquareClass c1 = m.cls(a1), c2 = m.cls(a2), c3 = m.cls(a3);
            auto bounded = [&](SquareClass c, long w) {
              return G_bar(m, c, Alpha::from_int(w)).is_subset_of(ClassSubgroup::units(m));
            };
            if (!bounded(c1, r1) || !bounded(c2, r1) || !bounded(c3, r1)) continue;
            SquareClass prod = m.mul(m.mul(c1, c2), c3);  // (-1)^2 * a1 a2 a3
            if (!bounded(prod, r))
              return tup(m, {c1, c2, c3}, {Alpha::from_int(r1), Alpha::from_int(r)});
          }
  return std::nullopt;
}

Witness chk_delta_membership(const FieldModel& m) {
  for (const Alpha& R : quarter_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      bool even = m.ord_parity(ca) == 0;
      bool in_g = g_bar(m, ca, R).contains(m.delta());
      if (in_g != (even && R <= two_e(m))) return tup(m, {ca}, {R}) + " small g";
      bool in_G = G_bar(m, ca, R).contains(m.delta());
      bool expect = (even && R <= two_e(m) + two_e(m)) || ca == m.delta();
      if (in_G != expect) return tup(m, {ca}, {R}) + " capital G";
    }
  for (long R : int_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      if (m.ord_parity(ca) != ((R % 2) + 2) % 2) continue;
      if (!in_A(m, ca, R)) continue;
      bool in_g = g_of(m, ca, R).contains(m.delta());
      bool expect = m.ord_parity(ca) == 0 && R <= 2 * m.e();
      if (in_g != expect) return tup(m, {ca}, {Alpha::from_int(R)}) + " classical g";
    }
  return std::nullopt;
}

Witness chk_restriction_consistency(const FieldModel& m) {
  for (long R : int_grid(m))
    for (int a = 0; a < m.num_classes(); ++a) {
      SquareClass ca = m.cls(a);
      if (m.ord_parity(ca) != ((R % 2) + 2) % 2) continue;
      if (!in_A(m, ca, R)) continue;
      Alpha Ra = Alpha::from_int(R);
      ClassSubgroup units = ClassSubgroup::units(m);
      ClassSubgroup g = g_of(m, ca, R);
      if (!(g == intersect(g_hat(m, ca, Ra), units)) ||
          !(g == intersect(g_bar(m, ca, Ra), units)))
        return tup(m, {ca}, {Ra}) + " small g restriction";
      if (R > 2 * m.e() && !g.is_trivial()) return tup(m, {ca}, {Ra}) + " g past 2e";
      if (!(G_of(m, ca, R) == G_bar(m, ca, Ra))) return tup(m, {ca}, {Ra}) + " capital G restriction";
    }
  return std::nullopt;
}

Witness chk_exceptional_values(const FieldModel& m) {
  Alpha w = -two_e(m);
  if (!(g_bar(m, m.minus_one(), w) == ClassSubgroup::units(m)))
    return std::string("g_bar(-1,-2e) != units");
  if (!g_hat(m, m.minus_one(), w).is_full()) return std::string("g_hat(-1,-2e) != full");
  if (!(G_bar(m, m.minus_one(), w) == ClassSubgroup::units(m)))
    return std::string("G_bar(-1,-2e) != units");
  // The same-weight product rule genuinely fails at the excluded tuple: with
  // {a,b} = {-1,-Delta} at weight -2e the left side stays inside the units
  // while the right side contains classes of odd valuation.
  SquareClass nd = m.neg(m.delta());
  ClassSubgroup lhs = product(g_bar(m, m.minus_one(), w), g_bar(m, nd, w));
  ClassSubgroup rhs =
      product(ups(m, w + m.d_of(m.mul(m.minus_one(), nd)).as_alpha()), g_bar(m, nd, w));
  if (lhs == rhs) return std::string("excluded product tuple unexpectedly satisfies the rule");
  return std::nullopt;
}

struct NamedCheck {
  const char* name;
  Witness (*fn)(const FieldModel&);
};

constexpr NamedCheck kChecks[] = {
    {"filtration shape and product law", chk_ups_filtration},
    {"filtration-in-norm-group criterion", chk_ups_norm_inclusion},
    {"restricted-filtration-in-norm-group criterion", chk_ups_cap_norm_inclusion},
    {"defect min/max exchange", chk_defect_min_max_swap},
    {"weight domain descriptions agree", chk_weight_domain_descriptions},
    {"small g bounded in units iff domain or -Delta", chk_g_small_bounded_in_units},
    {"small g outside domain is a norm group", chk_g_small_outside_domain},
    {"small g two-case closed form and index", chk_g_small_two_cases},
    {"small g monotone in the weight", chk_g_small_monotone},
    {"small g at low weight is a norm group", chk_g_small_low_weight_norm},
    {"small g contains its class at nonpositive weight", chk_g_small_self_membership},
    {"small g within the filtration", chk_g_small_filtration_bound},
    {"small-g-in-norm-group criterion", chk_g_small_norm_inclusion},
    {"small g same-weight product rule", chk_g_small_equal_weight_product},
    {"small g mixed-weight product rule", chk_g_small_mixed_weight_product},
    {"capital G monotone in the weight", chk_G_monotone},
    {"capital G weight split and sandwich", chk_G_weight_split},
    {"capital G closed forms", chk_G_closed_forms},
    {"capital-G-in-norm-group criterion", chk_G_norm_inclusion},
    {"capital G product rule", chk_G_product_rule},
    {"capital G bounded-in-units criterion", chk_G_units_bounded},
    {"signed product closure of bounded classes", chk_G_signed_product_closure},
    {"Delta membership rules", chk_delta_membership},
    {"classical g/G restriction consistency", chk_restriction_consistency},
    {"exceptional tuple values", chk_exceptional_values},
};

}  // namespace

std::vector<IdentityResult> run_identity_suite(const FieldModel& m) {
  std::vector<IdentityResult> out;
  for (const auto& check : kChecks) {
    Witness w = check.fn(m);
    out.push_back({check.name, !w.has_value(), w.value_or("")});
  }
  return out;
}

bool all_pass(const std::vector<IdentityResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace spinor
