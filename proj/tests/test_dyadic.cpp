#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "test_support.hpp"

using namespace spinor;

TEST_CASE("valuations") {
  auto f = ts::field("q2");
  CHECK(f->ord_of(f->from_int(12)) == Alpha::from_int(2));
  CHECK(f->ord_of(f->from_int(1)) == Alpha::from_int(0));
  CHECK(f->ord_of(f->from_int(-8)) == Alpha::from_int(3));
  CHECK(f->ord_of(f->zero_element()).is_pos_inf());

  auto r2 = ts::field("q2(2)");
  CHECK(r2->e() == 2);
  CHECK(r2->ord_of(r2->from_coords(0, 1)) == Alpha::from_int(1));  // sqrt 2
  CHECK(r2->ord_of(r2->from_int(2)) == Alpha::from_int(2));
  auto u5 = ts::field("q2(5)");
  CHECK(u5->e() == 1);
  CHECK(u5->ord_of(u5->from_coords(0, 1)) == Alpha::from_int(0));  // golden unit
  auto ri = ts::field("q2(-1)");
  CHECK(ri->ord_of(ri->from_coords(1, 1)) == Alpha::from_int(1));  // 1 + sqrt(-1)
  CHECK(ri->ord_of(ri->from_int(2)) == Alpha::from_int(2));
}

TEST_CASE("cancellation below the carried digits is flagged") {
  auto f = ts::field("q2");
  TruncatedElement diff = f->sub(f->from_int(1), f->from_int(1));
  CHECK(diff.indeterminate());
  CHECK_THROWS_AS(f->ord_of(diff), PrecisionError);
}

TEST_CASE("defect orders by residue search") {
  auto f = ts::field("q2");
  CHECK(f->defect_order(f->from_int(5)) == DValue::finite(2));
  CHECK(f->defect_order(f->from_int(3)) == DValue::finite(1));
  CHECK(f->defect_order(f->from_int(7)) == DValue::finite(1));
  CHECK(f->defect_order(f->from_int(2)) == DValue::finite(0));
  CHECK(f->defect_order(f->from_int(9)).is_infinite());
  CHECK(f->defect_order(f->from_int(17)).is_infinite());
  CHECK(f->is_square(f->from_int(9)));
  CHECK(!f->is_square(f->from_int(5)));
  CHECK(!f->is_square(f->from_int(4 * 3)));
}

TEST_CASE("defect is a class function") {
  auto f = ts::field("q2");
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::int64_t x = static_cast<std::int64_t>(rng() % 4000) - 2000;
    std::int64_t y = static_cast<std::int64_t>(rng() % 200) - 100;
    if (x == 0 || y == 0) continue;
    auto ex = f->from_int(x);
    auto scaled = f->mul(ex, f->mul(f->from_int(y), f->from_int(y)));
    CHECK(f->defect_order(ex) == f->defect_order(scaled));
  }
}

TEST_CASE("hilbert symbols on elements") {
  auto f = ts::field("q2");
  CHECK(f->hilbert_symbol(f->from_int(2), f->from_int(-1)) == 1);
  CHECK(f->hilbert_symbol(f->from_int(-1), f->from_int(-1)) == -1);
  CHECK(f->hilbert_symbol(f->from_int(2), f->from_int(5)) == -1);
  for (int u : {1, 3, 5, 7}) CHECK(f->hilbert_symbol(f->from_int(5), f->from_int(u)) == 1);
  // symmetry and bilinearity on a small grid
  std::vector<std::int64_t> grid = {1, 3, 5, 7, 2, 6, 10, 14, -1, -2, -5, 12, 48};
  for (auto a : grid)
    for (auto b : grid) {
      CHECK(f->hilbert_symbol(f->from_int(a), f->from_int(b)) ==
            f->hilbert_symbol(f->from_int(b), f->from_int(a)));
      for (auto c : {3LL, 2LL, -1LL}) {
        int lhs = f->hilbert_symbol(f->mul(f->from_int(a), f->from_int(b)), f->from_int(c));
        int rhs = f->hilbert_symbol(f->from_int(a), f->from_int(c)) *
                  f->hilbert_symbol(f->from_int(b), f->from_int(c));
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("extension hilbert symbol stays bilinear through classification") {
  auto f = ts::field("q2(2)");
  std::vector<TruncatedElement> grid;
  for (std::int64_t s = -2; s <= 3; ++s)
    for (std::int64_t t = -1; t <= 2; ++t) {
      if (s == 0 && t == 0) continue;
      grid.push_back(f->from_coords(s, t));
    }
  for (std::size_t i = 0; i < grid.size(); i += 3)
    for (std::size_t j = 0; j < grid.size(); j += 4) {
      const auto &a = grid[i], &b = grid[j];
      CHECK(f->hilbert_symbol(a, b) == f->hilbert_symbol(b, a));
      const auto& c = grid[(i + j) % grid.size()];
      CHECK(f->hilbert_symbol(f->mul(a, b), c) ==
            f->hilbert_symbol(a, c) * f->hilbert_symbol(b, c));
    }
}

TEST_CASE("square class projection") {
  auto f = ts::field("q2");
  const FieldModel& m = f->model();
  auto [c20, r20] = f->square_class(f->from_int(20));
  CHECK(m.name(c20) == "5");
  CHECK(r20 == 2);
  auto [cm8, rm8] = f->square_class(f->from_int(-8));
  CHECK(m.name(cm8) == "7");
  CHECK(rm8 == 3);
  auto [c9, r9] = f->square_class(f->from_int(9));
  CHECK(c9 == m.identity());
  CHECK(r9 == 0);
}

TEST_CASE("built models have the expected shape") {
  struct Expect {
    const char* name;
    int e;
    int dim;
    std::set<int> d_im;
  };
  for (const Expect& x : {Expect{"q2", 1, 3, {0, 1, 2}},
                          Expect{"q2(5)", 1, 4, {0, 1, 2}},
                          Expect{"q2(2)", 2, 4, {0, 1, 3, 4}},
                          Expect{"q2(-2)", 2, 4, {0, 1, 3, 4}},
                          Expect{"q2(-1)", 2, 4, {0, 1, 3, 4}}}) {
    auto f = ts::field(x.name);
    const FieldModel& m = f->model();
    INFO(x.name);
    CHECK(m.e() == x.e);
    CHECK(m.dim() == x.dim);
    ValidationReport rep = validate_model(m);
    INFO(rep.summary());
    CHECK(rep.all_pass());
    std::set<int> seen;
    for (int i = 0; i < m.num_classes(); ++i)
      if (!m.d_of(m.cls(i)).is_infinite()) seen.insert(m.d_of(m.cls(i)).value());
    CHECK(seen == x.d_im);
  }
}

TEST_CASE("results are stable under extra precision") {
  for (const char* name : {"q2", "q2(2)"}) {
    auto lo = ts::field(name, 48);
    auto hi = ts::field(name, 56);
    for (std::int64_t a = -6; a <= 9; ++a)
      for (std::int64_t b = 0; b <= 2; ++b) {
        if (a == 0 && b == 0) continue;
        if (lo->spec().kind == FieldSpec::Kind::Q2 && b != 0) continue;
        auto xl = lo->from_coords(a, b), xh = hi->from_coords(a, b);
        CHECK(lo->ord_of(xl) == hi->ord_of(xh));
        CHECK(lo->defect_order(xl) == hi->defect_order(xh));
        CHECK(lo->square_class(xl).first.idx == hi->square_class(xh).first.idx);
      }
  }
}

TEST_CASE("unsupported fields are rejected") {
  CHECK_THROWS_AS(FieldSpec::parse("q3"), UnsupportedFieldError);
  CHECK_THROWS_AS(FieldSpec::parse("q2(3)"), UnsupportedFieldError);
  CHECK_THROWS_AS(FieldSpec::parse("q2(4)"), UnsupportedFieldError);
}
