#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinor/quad_space.hpp"
#include "test_support.hpp"

using namespace spinor;

namespace {

std::vector<SquareClass> diag(const FieldModel& m, std::initializer_list<const char*> names) {
  std::vector<SquareClass> out;
  for (const char* n : names) out.push_back(m.class_by_name(n));
  return out;
}

}  // namespace

TEST_CASE("space invariants from diagonals") {
  auto m = ts::q2_model();
  QuadSpace unit = from_diagonal(*m, diag(*m, {"1"}));
  CHECK(unit.dim == 1);
  CHECK(unit.det == m->identity());
  CHECK(unit.hasse == 1);

  QuadSpace hyp = from_diagonal(*m, diag(*m, {"1", "7"}));  // [1,-1]
  CHECK(hyp.dim == 2);
  CHECK(hyp.det == m->minus_one());
  CHECK(hyp.hasse == m->hilbert_of(m->minus_one(), m->minus_one()));
  CHECK(hyp.hasse == -1);

  QuadSpace zero = from_diagonal(*m, {});
  CHECK(zero.dim == 0);
  CHECK(zero.det == m->identity());
  CHECK(zero.hasse == 1);
}

TEST_CASE("isometry is equality of invariants") {
  auto m = ts::q2_model();
  QuadSpace a = from_diagonal(*m, diag(*m, {"1", "1"}));
  QuadSpace b = from_diagonal(*m, diag(*m, {"5", "5"}));
  CHECK(isometric(a, a));
  CHECK(isometric(a, b));
  CHECK(!isometric(from_diagonal(*m, diag(*m, {"1"})), from_diagonal(*m, diag(*m, {"2"}))));
}

TEST_CASE("hasse additivity under orthogonal sums") {
  auto m = ts::q2_model();
  for (int a = 0; a < m->num_classes(); ++a)
    for (int b = 0; b < m->num_classes(); ++b)
      for (int c = 0; c < m->num_classes(); ++c) {
        QuadSpace v = from_diagonal(*m, {m->cls(a), m->cls(b)});
        QuadSpace w = from_diagonal(*m, {m->cls(c)});
        QuadSpace s = from_diagonal(*m, {m->cls(a), m->cls(b), m->cls(c)});
        CHECK(orthogonal_sum(v, w) == s);
      }
}

TEST_CASE("representation by the complement criterion") {
  auto m = ts::q2_model();
  QuadSpace v11 = from_diagonal(*m, diag(*m, {"1", "1"}));
  CHECK(represents(v11, from_diagonal(*m, diag(*m, {"1"}))));
  CHECK(!represents(v11, from_diagonal(*m, diag(*m, {"7"}))));  // -1 not a sum of two squares
  CHECK(represents(from_diagonal(*m, diag(*m, {"1", "2"})), from_diagonal(*m, diag(*m, {"1"}))));
  QuadSpace w = from_diagonal(*m, diag(*m, {"3", "10"}));
  CHECK(represents(w, w));
}

TEST_CASE("representation is reflexive and transitive on sampled spaces") {
  auto m = ts::q2_model();
  std::vector<QuadSpace> spaces;
  for (int a = 0; a < m->num_classes(); ++a) {
    spaces.push_back(from_diagonal(*m, {m->cls(a)}));
    for (int b = 0; b < m->num_classes(); b += 3)
      spaces.push_back(from_diagonal(*m, {m->cls(a), m->cls(b)}));
    spaces.push_back(from_diagonal(*m, {m->cls(a), m->cls(a), m->cls((a + 1) % 8)}));
  }
  for (const auto& v : spaces) CHECK(represents(v, v));
  for (const auto& u : spaces)
    for (const auto& v : spaces) {
      if (u.dim > v.dim) continue;
      if (!represents(v, u)) continue;
      for (const auto& w : spaces) {
        if (v.dim > w.dim) continue;
        if (represents(w, v)) CHECK(represents(w, u));
      }
    }
}

TEST_CASE("cancellation: equal sums with a common summand have equal parts") {
  auto m = ts::q2_model();
  // enumerate spaces by invariants up to dim 3
  std::vector<QuadSpace> spaces;
  for (int dim = 0; dim <= 3; ++dim)
    for (int d = 0; d < m->num_classes(); ++d)
      for (int h : {1, -1}) {
        if (!space_exists(*m, dim, m->cls(d), h)) continue;
        QuadSpace v;
        v.model = m.get();
        v.dim = dim;
        v.det = m->cls(d);
        v.hasse = h;
        spaces.push_back(v);
      }
  for (const auto& v : spaces)
    for (const auto& w : spaces) {
      if (v.dim != w.dim || v == w) continue;
      for (int a = 0; a < m->num_classes(); ++a) {
        QuadSpace line = from_diagonal(*m, {m->cls(a)});
        CHECK(!(orthogonal_sum(v, line) == orthogonal_sum(w, line)));
      }
    }
}
