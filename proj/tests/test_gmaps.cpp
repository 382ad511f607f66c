#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "spinor/gmaps.hpp"
#include "spinor/identities.hpp"
#include "spinor/json_io.hpp"
#include "test_support.hpp"

using namespace spinor;

namespace {

std::set<std::string> names(const FieldModel& m, const ClassSubgroup& g) {
  std::set<std::string> out;
  for (SquareClass c : g.members()) out.insert(m.name(c));
  return out;
}

}  // namespace

TEST_CASE("weight domain membership") {
  auto m = ts::q2_model();
  CHECK(in_A_bar(*m, m->neg(m->delta()), Alpha::from_int(-2)));
  CHECK(in_A_bar(*m, m->minus_one(), Alpha::from_int(-2)));
  CHECK(!in_A_bar(*m, ts::C(*m, "3"), Alpha::from_int(-3)));
  CHECK(in_A(*m, ts::C(*m, "7"), -2));
  CHECK(in_A(*m, m->identity(), 0));
  CHECK(!in_A(*m, ts::C(*m, "2"), -1));
  CHECK_THROWS_AS(in_A(*m, ts::C(*m, "2"), 0), ValidationError);  // parity mismatch
}

TEST_CASE("weight function and split points") {
  auto m = ts::q2_model();
  CHECK(f_of(*m, Alpha::from_int(2)) == Alpha::from_int(0));
  CHECK(f_of(*m, Alpha::from_int(-2)) == Alpha::from_int(-2));
  CHECK(f_of(*m, Alpha::from_int(3)) == Alpha::from_int(1));
  CHECK(alpha_of(*m, m->identity(), Alpha::from_int(0)) == Alpha::from_int(1));
  CHECK(alpha_of(*m, m->delta(), Alpha::from_int(0)) == Alpha::from_int(1));
  CHECK(alpha_of(*m, m->minus_one(), Alpha::from_int(-1)) == Alpha::from_fraction(1, 2));
}

TEST_CASE("hat and bar values") {
  auto m = ts::q2_model();
  CHECK(g_hat(*m, m->minus_one(), Alpha::from_int(-2)).is_full());
  CHECK(names(*m, g_hat(*m, m->delta(), Alpha::from_int(0))) == std::set<std::string>{"1", "5"});
  for (int a = 0; a < m->num_classes(); ++a)
    CHECK(g_bar(*m, m->cls(a), Alpha::from_int(3)).is_trivial());
  CHECK(g_bar(*m, m->minus_one(), Alpha::from_int(-2)) == ClassSubgroup::units(*m));
  CHECK(g_bar(*m, ts::C(*m, "3"), Alpha::from_int(-1)) == norm_group(*m, ts::C(*m, "5")));
}

TEST_CASE("capital G values") {
  auto m = ts::q2_model();
  CHECK(G_bar(*m, m->minus_one(), Alpha::from_int(-2)) == ClassSubgroup::units(*m));
  CHECK(G_of(*m, ts::C(*m, "2"), 1) == norm_group(*m, ts::C(*m, "14")));
  SquareClass a = ts::C(*m, "3");
  CHECK(G_bar(*m, a, Alpha::from_int(5)) == extend(ClassSubgroup::trivial(*m), a));
  CHECK(G_of(*m, ts::C(*m, "7"), -2) == ClassSubgroup::units(*m));
}

TEST_CASE("classical restrictions") {
  auto m = ts::q2_model();
  CHECK(g_of(*m, ts::C(*m, "7"), -2) == ClassSubgroup::units(*m));
  CHECK(g_of(*m, m->identity(), 4).is_trivial());
  CHECK(g_of(*m, ts::C(*m, "5"), 0).contains(m->delta()));
  CHECK_THROWS_AS(g_of(*m, ts::C(*m, "2"), -1), PreconditionError);
}

TEST_CASE("identity suite passes over the rational base field") {
  auto m = ts::q2_model();
  auto results = run_identity_suite(*m);
  for (const auto& r : results) {
    INFO(r.name << " witness " << r.witness);
    CHECK(r.pass);
  }
}

TEST_CASE("table-driven model reproduces the computed group maps") {
  auto m = ts::q2_model();
  FieldModelPtr back = model_from_json(model_to_json(*m));
  for (int a = 0; a < m->num_classes(); ++a)
    for (long q = -16; q <= 16; ++q) {
      Alpha R = Alpha::from_fraction(q, 4);
      CHECK(g_bar(*m, m->cls(a), R).mask() == g_bar(*back, back->cls(a), R).mask());
      CHECK(G_bar(*m, m->cls(a), R).mask() == G_bar(*back, back->cls(a), R).mask());
    }
}
