#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "spinor/json_io.hpp"
#include "test_support.hpp"

using namespace spinor;

TEST_CASE("rational base field model satisfies every axiom") {
  auto m = ts::q2_model();
  ValidationReport rep = validate_model(*m);
  INFO(rep.summary());
  CHECK(rep.all_pass());
  CHECK(m->e() == 1);
  CHECK(m->dim() == 3);
  CHECK(m->num_classes() == 8);
  CHECK(m->name(m->delta()) == "5");
  CHECK(m->name(m->minus_one()) == "7");
  CHECK(m->name(m->pi()) == "2");
}

TEST_CASE("defect table on the rational base field") {
  auto m = ts::q2_model();
  CHECK(m->d_of(ts::C(*m, "1")).is_infinite());
  CHECK(m->d_of(ts::C(*m, "3")) == DValue::finite(1));
  CHECK(m->d_of(ts::C(*m, "5")) == DValue::finite(2));
  CHECK(m->d_of(ts::C(*m, "7")) == DValue::finite(1));
  for (const char* n : {"2", "6", "10", "14"}) CHECK(m->d_of(ts::C(*m, n)) == DValue::finite(0));
  std::set<int> seen;
  bool has_inf = false;
  for (int i = 0; i < m->num_classes(); ++i) {
    DValue d = m->d_of(m->cls(i));
    if (d.is_infinite())
      has_inf = true;
    else
      seen.insert(d.value());
  }
  CHECK(has_inf);
  CHECK(seen == std::set<int>{0, 1, 2});
}

TEST_CASE("class multiplication is coordinatewise") {
  auto m = ts::q2_model();
  SquareClass three = ts::C(*m, "3"), five = ts::C(*m, "5"), seven = ts::C(*m, "7");
  CHECK(m->mul(three, five) == seven);  // 15 = 7 mod squares
  CHECK(m->mul(m->identity(), m->delta()) == m->delta());
  for (int i = 0; i < m->num_classes(); ++i)
    CHECK(m->mul(m->cls(i), m->cls(i)) == m->identity());
}

TEST_CASE("hilbert pairing values") {
  auto m = ts::q2_model();
  for (int i = 0; i < m->num_classes(); ++i) {
    SquareClass c = m->cls(i);
    CHECK(m->hilbert_of(c, m->neg(c)) == 1);
  }
  CHECK(m->hilbert_of(ts::C(*m, "2"), ts::C(*m, "5")) == -1);
  CHECK(m->hilbert_of(ts::C(*m, "3"), ts::C(*m, "7")) == -1);
  CHECK(m->hilbert_of(m->minus_one(), m->minus_one()) == -1);
}

TEST_CASE("constructed violations are reported, not thrown") {
  auto m = ts::q2_model();
  auto j = model_to_json(*m);

  SUBCASE("editing the defect of Delta breaks the 2e characterization") {
    j["d"]["5"] = 1;
    FieldModelPtr broken = model_from_json(j);
    ValidationReport rep = validate_model(*broken);
    CHECK(!rep.all_pass());
    bool found = false;
    for (const auto& c : rep.checks)
      if (!c.pass && c.axiom.find("2e<->delta") != std::string::npos) found = true;
    CHECK(found);
  }

  SUBCASE("a nonsymmetric pairing fails the symmetry axiom") {
    j["hilbert"][0][1] = -1;  // (1,2) vs (2,1)
    FieldModelPtr broken = model_from_json(j);
    ValidationReport rep = validate_model(*broken);
    CHECK(!rep.all_pass());
    bool found = false;
    for (const auto& c : rep.checks)
      if (!c.pass && c.axiom.find("symmetry") != std::string::npos) found = true;
    CHECK(found);
  }
}

TEST_CASE("model json round trip preserves all tables") {
  for (const char* name : {"q2", "q2(2)"}) {
    auto f = ts::field(name);
    auto j = model_to_json(f->model());
    FieldModelPtr back = model_from_json(j);
    CHECK(validate_model(*back).all_pass());
    CHECK(model_to_json(*back) == j);
  }
}
