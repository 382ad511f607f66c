#include "spinor/oracle.hpp"

#include <random>
#include <sstream>

namespace spinor {

std::string describe(const GoodBong& lat) {
  std::ostringstream o;
  o << "<";
  for (int i = 1; i <= lat.rank(); ++i) {
    if (i > 1) o << ",";
    o << lat.model().name(lat.unit(i)) << "*pi^" << lat.r(i);
  }
  o << ">";
  return o.str();
}

std::string describe_pair(const LatticePair& p) {
  return "M=" + describe(p.M()) + " N=" + describe(p.N());
}

namespace {

ClassSubgroup base_space_group(const GoodBong& M) {
  const FieldModel& m = M.model();
  if (M.rank() >= 3) return ClassSubgroup::full(m);
  if (M.rank() == 2) return norm_group(m, m.neg(M.prod_class(1, 2)));
  return ClassSubgroup::trivial(m);
}

ClassSubgroup oracle_rec(GoodBong M, GoodBong N, ReductionTrace& trace, int depth, int budget) {
  const FieldModel& m = M.model();
  if (depth > budget)
    throw Error("oracle recursion exceeded its depth bound; norm shrink is suspect");
  auto push = [&](ReductionStep::Kind k, const std::string& note, const ClassSubgroup& factor) {
    long slack = (N.rank() >= 1 && M.rank() >= 1) ? N.r(1) - M.r(1) : 0;
    trace.steps.push_back({k, note, N.rank(), slack, factor});
  };

  if (N.rank() == 0) {
    ClassSubgroup g = base_space_group(M);
    push(ReductionStep::Kind::BaseCase, "space of rank " + std::to_string(M.rank()), g);
    return g;
  }
  if (M.rank() - N.rank() >= 3) {
    ClassSubgroup g = ClassSubgroup::full(m);
    push(ReductionStep::Kind::FullShortcut, "rank gap >= 3", g);
    return g;
  }
  ClassSubgroup theta_m = theta_plus(M);
  if (theta_m.is_full()) {
    push(ReductionStep::Kind::FullShortcut, "theta of M already full", theta_m);
    return theta_m;
  }
  long r1 = M.r(1), s1 = N.r(1);
  if (r1 > s1)
    throw InconsistentPairError("norm of N exceeds norm of M: not a sublattice pair");
  if (r1 < s1) {
    ShrinkResult res = shrink_norm(M);
    if (!res.is_lattice) {
      ClassSubgroup g = ClassSubgroup::full(m);
      push(ReductionStep::Kind::FullShortcut, "non norm generators do not form a lattice", g);
      return g;
    }
    push(ReductionStep::Kind::NormShrink, describe(M) + " -> " + describe(*res.sublattice),
         ClassSubgroup::trivial(m));
    return oracle_rec(*res.sublattice, std::move(N), trace, depth + 1, budget);
  }
  // equal norms
  if (M.rank() == 1) {
    ClassSubgroup g = ClassSubgroup::trivial(m);
    push(ReductionStep::Kind::BaseCase, "unary M", g);
    return g;
  }
  bool reducible = M.rank() <= 2 || r1 < M.r(3) || M.r(3) - M.r(2) == -2 * m.e() ||
                   (N.rank() >= 2 && M.r(2) == N.r(2));
  if (!reducible) {
    ClassSubgroup g = ClassSubgroup::full(m);
    push(ReductionStep::Kind::FullShortcut, "no rank-reduction case applies", g);
    return g;
  }
  SquareClass eta = m.mul(N.unit(1), M.unit(1));
  if (!g_index(M, 1).contains(eta))
    throw InconsistentPairError("first entry ratio " + m.name(eta) +
                                " falls outside g_1(M): not a sublattice pair");
  std::vector<BongEntry> me(M.entries().begin() + 1, M.entries().end());
  me[0].unit = m.mul(me[0].unit, eta);
  GoodBong mstar(M.model_ptr(), std::move(me));
  std::vector<BongEntry> ne(N.entries().begin() + 1, N.entries().end());
  GoodBong nstar(N.model_ptr(), std::move(ne));
  push(ReductionStep::Kind::RankDrop,
       "drop common first element; eta=" + m.name(eta), theta_m);
  ClassSubgroup sub = oracle_rec(std::move(mstar), std::move(nstar), trace, depth + 1, budget);
  return product(sub, theta_m);
}

}  // namespace

OracleResult theta_X_oracle(const LatticePair& p) {
  // Depth budget: each level either raises the norm of M by >= 1 (bounded by
  // the matching S) or drops both ranks. Generous slack on top.
  long budget = 2 * (p.n() + 2) + p.m() + 8;
  for (int i = 1; i <= p.n(); ++i) budget += std::max(p.s_int(i) - p.R(i), 0L);
  OracleResult out{ClassSubgroup::full(p.model()), {}};
  out.group = oracle_rec(p.M(), p.N(), out.trace, 0, static_cast<int>(budget));
  return out;
}

void enumerate_lattices(const FieldModelPtr& model, int rank, long lo, long hi,
                        const std::function<void(const GoodBong&)>& sink) {
  const FieldModel& m = *model;
  std::vector<SquareClass> units;
  for (int i = 0; i < m.num_classes(); ++i)
    if (m.ord_parity(m.cls(i)) == 0) units.push_back(m.cls(i));
  std::vector<BongEntry> cur;
  std::function<void()> rec = [&]() {
    int k = static_cast<int>(cur.size());
    if (k == rank) {
      sink(GoodBong(model, cur));
      return;
    }
    for (SquareClass u : units)
      for (long r = lo; r <= hi; ++r) {
        if (k >= 2 && cur[k - 2].r > r) continue;
        if (k >= 1) {
          long diff = r - cur[k - 1].r;
          if (diff + 2 * m.e() < 0) continue;
          SquareClass pc = m.mul(cur[k - 1].unit, u);
          if (((cur[k - 1].r + r) % 2 + 2) % 2 == 1) pc = m.mul(pc, m.pi());
          Alpha dneg = m.d_of(m.neg(pc)).as_alpha();
          if (Alpha::from_int(diff) + dneg < Alpha::from_int(0)) continue;
        }
        cur.push_back({u, r});
        rec();
        cur.pop_back();
      }
  };
  rec();
}

namespace {

GoodBong scale_lattice(const GoodBong& lat, long k) {
  std::vector<BongEntry> e = lat.entries();
  for (auto& x : e) x.r += 2 * k;
  return GoodBong(lat.model_ptr(), std::move(e));
}

GoodBong leading_section(const GoodBong& lat, int j) {
  std::vector<BongEntry> e(lat.entries().begin(), lat.entries().begin() + j);
  return GoodBong(lat.model_ptr(), std::move(e));
}

// Random rebasing by transform chains; leaves the lattice class unchanged.
GoodBong random_rebase(const GoodBong& lat, std::mt19937_64& rng, int steps) {
  GoodBong out = lat;
  for (int s = 0; s < steps && out.rank() >= 2; ++s) {
    int i = 1 + static_cast<int>(rng() % (out.rank() - 1));
    auto members = g_index(out, i).members();
    SquareClass eta = members[rng() % members.size()];
    out = transform(out, i, eta);
  }
  return out;
}

bool shrinkable(const GoodBong& lat) {
  return lat.rank() >= 1 && (property_b(lat) || theta_bounded_in_units(lat));
}

}  // namespace

void generate_pairs(const FieldModelPtr& model, const PairGenOptions& opts,
                    const std::function<void(const LatticePair&)>& sink) {
  std::mt19937_64 rng(opts.seed);

  auto emit_variants = [&](const GoodBong& M, bool with_rebase) {
    sink(LatticePair(M, M));
    sink(LatticePair(M, scale_lattice(M, 1)));
    sink(LatticePair(M, scale_lattice(M, 2)));
    for (int j = M.rank() - 2; j <= M.rank() - 1; ++j) {
      if (j < 1) continue;
      GoodBong sec = leading_section(M, j);
      sink(LatticePair(M, sec));
      sink(LatticePair(M, scale_lattice(sec, 1)));
    }
    if (shrinkable(M)) {
      ShrinkResult s1 = shrink_norm(M);
      if (s1.is_lattice) {
        sink(LatticePair(M, *s1.sublattice));
        if (shrinkable(*s1.sublattice)) {
          ShrinkResult s2 = shrink_norm(*s1.sublattice);
          if (s2.is_lattice) sink(LatticePair(M, *s2.sublattice));
        }
      }
    }
    if (with_rebase && M.rank() >= 2) {
      GoodBong reb = random_rebase(M, rng, 2);
      sink(LatticePair(reb, M));
      sink(LatticePair(M, reb));
    }
  };

  if (opts.exhaustive) {
    for (int rank = 1; rank <= opts.max_rank; ++rank)
      enumerate_lattices(model, rank, opts.val_lo, opts.val_hi,
                         [&](const GoodBong& M) { emit_variants(M, false); });
  }

  // Randomized pairs over a wider window, including rebased presentations and
  // orthogonal extensions of certified pairs.
  const FieldModel& m = *model;
  std::vector<SquareClass> units;
  for (int i = 0; i < m.num_classes(); ++i)
    if (m.ord_parity(m.cls(i)) == 0) units.push_back(m.cls(i));
  auto random_lattice = [&](int rank) -> std::optional<GoodBong> {
    for (int attempt = 0; attempt < 200; ++attempt) {
      std::vector<BongEntry> e;
      long r = static_cast<long>(rng() % 7) - 4;
      for (int i = 0; i < rank; ++i) {
        e.push_back({units[rng() % units.size()], r});
        r += static_cast<long>(rng() % (2 * m.e() + 4)) - 2 * m.e() + 2;
      }
      try {
        return GoodBong(model, e);
      } catch (const ValidationError&) {
      }
    }
    return std::nullopt;
  };

  int produced = 0;
  while (produced < opts.random_count) {
    auto maybe = random_lattice(1 + static_cast<int>(rng() % opts.max_rank));
    if (!maybe) continue;
    GoodBong M = *maybe;
    int pick = static_cast<int>(rng() % 6);
    std::optional<GoodBong> N;
    switch (pick) {
      case 0: N = M; break;
      case 1: N = scale_lattice(M, 1 + static_cast<long>(rng() % 2)); break;
      case 2: {
        int j = M.rank() - 1 - static_cast<int>(rng() % 2);
        if (j >= 1) N = leading_section(M, j);
        break;
      }
      case 3:
        if (shrinkable(M)) {
          ShrinkResult s = shrink_norm(M);
          if (s.is_lattice) N = *s.sublattice;
        }
        break;
      case 4:
        if (M.rank() >= 2) N = random_rebase(M, rng, 2);
        break;
      default: {
        int j = M.rank() - static_cast<int>(rng() % 3);
        if (j >= 1) N = scale_lattice(leading_section(M, std::min(j, M.rank())), 1);
        break;
      }
    }
    if (!N) continue;
    // Occasionally extend the certified pair by a common orthogonal first
    // entry, which preserves containment.
    if (rng() % 3 == 0 && M.rank() < opts.max_rank) {
      long bound = std::min(M.r(1), N->rank() >= 1 ? N->r(1) : M.r(1));
      if (M.rank() >= 2) bound = std::min(bound, M.r(2));
      if (N->rank() >= 2) bound = std::min(bound, N->r(2));
      long r0 = bound - static_cast<long>(rng() % 3);
      SquareClass u = units[rng() % units.size()];
      std::vector<BongEntry> me = {{u, r0}};
      me.insert(me.end(), M.entries().begin(), M.entries().end());
      std::vector<BongEntry> ne = {{u, r0}};
      ne.insert(ne.end(), N->entries().begin(), N->entries().end());
      try {
        GoodBong m2(model, me), n2(model, ne);
        M = m2;
        N = n2;
      } catch (const ValidationError&) {
      }
    }
    sink(LatticePair(M, *N));
    ++produced;
  }
}

void crosscheck_pair(const LatticePair& p, CrossCheckStats& stats) {
  ++stats.pairs;
  ThetaVerdict closed = theta_X(p);
  OracleResult rec = theta_X_oracle(p);
  if (!(closed.group == rec.group)) {
    ++stats.mismatches;
    if (stats.failures.size() < 10) {
      stats.failures.push_back(describe_pair(p) + " closed=" + subgroup_name(closed.group) +
                               " [" + branch_name(closed.branch) + "]" +
                               " oracle=" + subgroup_name(rec.group));
    }
  }
}

}  // namespace spinor
