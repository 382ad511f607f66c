#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinor/oracle.hpp"
#include "test_support.hpp"

using namespace spinor;

TEST_CASE("presentation validation") {
  auto m = ts::q2_model();
  CHECK_NOTHROW(ts::lat(m, {{"1", 0}, {"1", 1}}));
  CHECK_NOTHROW(ts::lat(m, {{"1", 0}, {"7", -2}}));  // half-norm plane pattern
  CHECK_THROWS_AS(ts::lat(m, {{"1", 0}, {"1", -1}}), ValidationError);   // odd negative jump
  CHECK_THROWS_AS(ts::lat(m, {{"1", 0}, {"1", -4}}), ValidationError);   // jump below -2e
  CHECK_THROWS_AS(ts::lat(m, {{"1", 0}, {"1", 2}, {"1", -1}}), ValidationError);
  CHECK_THROWS_AS(ts::lat(m, {{"1", 2}, {"1", 3}, {"1", 0}}), ValidationError);  // r1 > r3
  CHECK_THROWS_AS(ts::lat(m, {{"2", 0}}), ValidationError);  // unit with odd parity
}

TEST_CASE("invariants of small lattices") {
  auto m = ts::q2_model();
  GoodBong l12 = ts::lat(m, {{"1", 0}, {"1", 1}});
  LatticeInvariants inv = invariants(l12);
  CHECK(inv.r == std::vector<long>{0, 1});
  REQUIRE(inv.alpha.size() == 1);
  CHECK(inv.alpha[0] == Alpha::from_int(1));  // min{3/2, 1 + d(-2)} = 1
  CHECK(inv.norm_order == Alpha::from_int(0));
  CHECK(inv.scale_order == Alpha::from_int(0));
  CHECK(inv.vol_order == 1);
  CHECK(m->name(inv.det) == "2");
  CHECK(inv.prop_a);

  GoodBong unary = ts::lat(m, {{"1", 0}});
  LatticeInvariants iu = invariants(unary);
  CHECK(iu.vol_order == 0);
  CHECK(iu.det == m->identity());
  CHECK(iu.alpha.empty());

  GoodBong hyp = ts::lat(m, {{"1", 0}, {"7", -2}});
  CHECK(invariants(hyp).scale_order == Alpha::from_int(-1));  // min{0, -1}
}

TEST_CASE("duals") {
  auto m = ts::q2_model();
  GoodBong l = ts::lat(m, {{"1", 0}, {"1", 1}});
  GoodBong d = dual(l);
  CHECK(d.r(1) == -1);
  CHECK(d.r(2) == 0);
  CHECK(dual(d) == l);
  CHECK(invariants(d).vol_order == -invariants(l).vol_order);
  GoodBong u = ts::lat(m, {{"1", 1}});
  CHECK(dual(u).r(1) == -1);
}

TEST_CASE("spinor norms of the proper rotations") {
  auto m = ts::q2_model();
  CHECK(theta_plus(ts::lat(m, {{"1", 0}, {"7", -2}})) == ClassSubgroup::units(*m));
  CHECK(theta_plus(ts::lat(m, {{"1", 0}, {"1", 1}})) == norm_group(*m, ts::C(*m, "14")));
  CHECK(theta_plus(ts::lat(m, {{"1", 0}})).is_trivial());
  CHECK(theta_plus(GoodBong(m, {})).is_trivial());
}

TEST_CASE("refined formula agrees on every small property-A lattice") {
  auto m = ts::q2_model();
  for (int rank = 2; rank <= 4; ++rank)
    enumerate_lattices(m, rank, -2, 2, [&](const GoodBong& l) {
      if (!property_a(l)) return;
      CHECK(theta_plus_refined(l) == theta_plus(l));
    });
  CHECK_THROWS_AS(theta_plus_refined(ts::lat(m, {{"1", 0}, {"3", 2}, {"1", 0}})),
                  PreconditionError);
}

TEST_CASE("lattices without the spacing condition have near-full groups") {
  auto m = ts::q2_model();
  enumerate_lattices(m, 3, -2, 2, [&](const GoodBong& l) {
    if (property_a(l)) return;
    ClassSubgroup g = theta_plus(l);
    bool units_or_full = g == ClassSubgroup::units(*m) || g.is_full();
    CHECK(units_or_full);
    if (g == ClassSubgroup::units(*m)) {
      for (int i = 1; i < l.rank(); ++i) CHECK(((l.r(i) - l.r(i + 1)) % 2 + 2) % 2 == 0);
    }
  });
}

TEST_CASE("binary maximality") {
  auto m = ts::q2_model();
  CHECK(binary_is_maximal(ts::lat(m, {{"1", 0}, {"7", -2}})));
  CHECK(binary_is_maximal(ts::lat(m, {{"1", 0}, {"1", 1}})));
  CHECK(!binary_is_maximal(ts::lat(m, {{"1", 0}, {"1", 2}})));
}

TEST_CASE("maximal anisotropic binaries take the full space group") {
  auto m = ts::q2_model();
  enumerate_lattices(m, 2, -3, 3, [&](const GoodBong& l) {
    if (!binary_is_maximal(l)) return;
    SquareClass det = l.prod_class(1, 2);
    if (det == m->minus_one()) return;  // split space
    ClassSubgroup expected = norm_group(*m, m->neg(det));
    CHECK(theta_plus(l) == expected);
    CHECK(g_index(l, 1) == intersect(ClassSubgroup::units(*m), expected));
  });
}

TEST_CASE("transforms") {
  auto m = ts::q2_model();
  GoodBong l = ts::lat(m, {{"1", 0}, {"1", 1}});
  CHECK(transform(l, 1, m->identity()) == l);
  auto g1 = g_index(l, 1);
  for (SquareClass eta : g1.members()) {
    GoodBong t = transform(l, 1, eta);
    CHECK(isometric_lattices(l, t));
    CHECK(t.prod_class(1, 1) == m->mul(l.prod_class(1, 1), eta));
    CHECK(t.prod_class(1, 2) == l.prod_class(1, 2));
    for (SquareClass eta2 : g1.members()) {
      CHECK(transform(t, 1, eta2) == transform(l, 1, m->mul(eta, eta2)));
    }
  }
  SquareClass outside = ts::C(*m, "5");
  if (!g1.contains(outside)) CHECK_THROWS_AS(transform(l, 1, outside), PreconditionError);
}

TEST_CASE("classification") {
  auto m = ts::q2_model();
  GoodBong l = ts::lat(m, {{"1", 0}, {"1", 1}});
  CHECK(isometric_lattices(l, l));
  // <1,2> vs <5,10>: 5 lies outside g(2), and the spaces differ
  GoodBong k = ts::lat(m, {{"5", 0}, {"5", 1}});
  CHECK(!isometric_lattices(l, k));
  // a pi-scaled copy has different r
  GoodBong scaled = ts::lat(m, {{"1", 2}, {"1", 3}});
  CHECK(!isometric_lattices(l, scaled));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto maybe = ts::random_lattice(m, rng, 1 + static_cast<int>(rng() % 4));
    if (!maybe) continue;
    GoodBong chain = ts::random_chain(*maybe, rng, 3);
    CHECK(isometric_lattices(*maybe, chain));
    CHECK(isometric_lattices(chain, *maybe));
  }
}

TEST_CASE("equal determinant prefixes across wide gaps of isometric lattices") {
  auto m = ts::q2_model();
  std::mt19937_64 rng(13);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 40; ++t) {
    auto maybe = ts::random_lattice(m, rng, 3, -2, 8);
    if (!maybe) continue;
    bool wide = false;
    for (int i = 1; i < maybe->rank(); ++i)
      if (maybe->r(i + 1) - maybe->r(i) > 2 * m->e()) wide = true;
    if (!wide) continue;
    ++seen;
    GoodBong variant = ts::random_chain(*maybe, rng, 3);
    REQUIRE(isometric_lattices(*maybe, variant));
    for (int i = 1; i < maybe->rank(); ++i)
      if (maybe->r(i + 1) - maybe->r(i) > 2 * m->e())
        CHECK(maybe->prod_class(1, i) == variant.prod_class(1, i));
  }
  CHECK(seen > 0);
}

TEST_CASE("norm shrinking cases") {
  auto m = ts::q2_model();
  ShrinkResult u = shrink_norm(ts::lat(m, {{"1", 0}}));
  REQUIRE(u.is_lattice);
  CHECK(u.sublattice->r(1) == 2);

  CHECK(!shrink_norm(ts::lat(m, {{"1", 0}, {"7", -2}})).is_lattice);  // split plane

  ShrinkResult a22 = shrink_norm(ts::lat(m, {{"1", 0}, {"3", -2}}));  // a1 a2 = -Delta
  REQUIRE(a22.is_lattice);
  CHECK(a22.sublattice->r(1) == 2);
  CHECK(a22.sublattice->r(2) == 0);

  // maximal binary: scale by pi*eta
  ShrinkResult mx = shrink_norm(ts::lat(m, {{"1", 0}, {"1", 1}}));
  REQUIRE(mx.is_lattice);
  CHECK(mx.sublattice->r(1) == 1);
  CHECK(mx.sublattice->r(2) == 2);

  // non-maximal binary: raise the first entry
  ShrinkResult nm = shrink_norm(ts::lat(m, {{"1", 0}, {"1", 2}}));
  REQUIRE(nm.is_lattice);
  CHECK(nm.sublattice->r(1) == 2);
  CHECK(nm.sublattice->r(2) == 2);
}

TEST_CASE("norm shrinking raises the norm by one or two and iterates") {
  auto m = ts::q2_model();
  bool saw_precondition_failure = false;
  for (int rank = 1; rank <= 3; ++rank)
    enumerate_lattices(m, rank, -2, 2, [&](const GoodBong& l) {
      if (!(property_b(l) || theta_bounded_in_units(l))) {
        CHECK_THROWS_AS(shrink_norm(l), PreconditionError);
        saw_precondition_failure = true;
        return;
      }
      ShrinkResult s = shrink_norm(l);
      if (!s.is_lattice) return;
      long up = s.sublattice->r(1) - l.r(1);
      CHECK(up >= 1);
      CHECK(up <= 2);
      if (property_b(*s.sublattice) || theta_bounded_in_units(*s.sublattice)) {
        ShrinkResult s2 = shrink_norm(*s.sublattice);
        if (s2.is_lattice) CHECK(s2.sublattice->r(1) > s.sublattice->r(1));
      }
    });
  CHECK(saw_precondition_failure);
}

TEST_CASE("alternating rebase case of the norm shrink") {
  auto m = ts::q2_model();
  int seen = 0;
  enumerate_lattices(m, 3, -2, 2, [&](const GoodBong& l) {
    if (l.r(1) != l.r(3) || l.r(2) - l.r(1) == -2 * m->e()) return;
    if (!(property_b(l) || theta_bounded_in_units(l))) return;
    ShrinkResult s = shrink_norm(l);
    REQUIRE(s.is_lattice);
    ++seen;
    CHECK(s.sublattice->r(1) == l.r(1) + 2);
    CHECK(s.sublattice->r(2) == l.r(2) - 2);
    CHECK(s.sublattice->r(3) == l.r(3) + 2);
  });
  CHECK(seen > 0);
}

TEST_CASE("segment alpha matches the binary value under the section hypotheses") {
  auto m = ts::q2_model();
  for (int rank = 2; rank <= 3; ++rank)
    enumerate_lattices(m, rank, -2, 2, [&](const GoodBong& l) {
      if (!(property_b(l) || theta_bounded_in_units(l))) return;
      LatticeInvariants inv = invariants(l);
      for (int i = 1; i < l.rank(); ++i) {
        GoodBong seg(l.model_ptr(), {l.entries()[i - 1], l.entries()[i]});
        CHECK(inv.alpha[i - 1] == invariants(seg).alpha[0]);
        long diff = l.r(i + 1) - l.r(i);
        Alpha dneg = m->d_of(m->neg(l.prod_class(i, i + 1))).as_alpha();
        Alpha half_gap = Alpha::from_int(diff).half() + Alpha::from_int(m->e());
        Alpha expect = (dneg > Alpha::from_int(m->e()) - Alpha::from_int(diff).half())
                           ? half_gap
                           : Alpha::from_int(diff) + dneg;
        CHECK(inv.alpha[i - 1] == expect);
      }
    });
}

TEST_CASE("parity of r sequences when theta stays within the units") {
  auto m = ts::q2_model();
  for (int rank = 2; rank <= 3; ++rank)
    enumerate_lattices(m, rank, -2, 2, [&](const GoodBong& l) {
      if (!theta_bounded_in_units(l)) return;
      for (int i = 1; i < l.rank(); ++i) CHECK(((l.r(1) - l.r(i + 1)) % 2 + 2) % 2 == 0);
    });
}

TEST_CASE("equal outer r entries force equal parity in between") {
  auto m = ts::q2_model();
  enumerate_lattices(m, 3, -2, 2, [&](const GoodBong& l) {
    if (l.r(1) == l.r(3)) CHECK(((l.r(1) - l.r(2)) % 2 + 2) % 2 == 0);
  });
}
