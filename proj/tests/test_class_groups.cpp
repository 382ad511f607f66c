#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "spinor/class_group.hpp"
#include "test_support.hpp"

using namespace spinor;

namespace {

std::set<std::string> names(const ClassSubgroup& g) {
  std::set<std::string> out;
  for (SquareClass c : g.members()) out.insert(g.model().name(c));
  return out;
}

}  // namespace

TEST_CASE("filtration groups over the rational base field") {
  auto m = ts::q2_model();
  CHECK(ups(*m, Alpha::from_int(0)).size() == 8);
  CHECK(names(ups(*m, Alpha::from_int(1))) == std::set<std::string>{"1", "3", "5", "7"});
  CHECK(names(ups(*m, Alpha::from_int(2))) == std::set<std::string>{"1", "5"});
  CHECK(ups(*m, Alpha::from_int(3)).is_trivial());
  CHECK(names(ups(*m, Alpha::from_fraction(1, 2))) == std::set<std::string>{"1", "3", "5", "7"});
}

TEST_CASE("norm groups") {
  auto m = ts::q2_model();
  CHECK(norm_group(*m, m->identity()).is_full());
  CHECK(norm_group(*m, m->delta()) == ClassSubgroup::units(*m));
  CHECK(names(norm_group(*m, ts::C(*m, "3"))) == std::set<std::string>{"1", "5", "6", "14"});
  for (int c = 1; c < m->num_classes(); ++c) CHECK(norm_group(*m, m->cls(c)).index_in_full() == 2);
}

TEST_CASE("span, product and inclusion") {
  auto m = ts::q2_model();
  CHECK(names(span(*m, {m->delta()})) == std::set<std::string>{"1", "5"});
  ClassSubgroup u2 = ups(*m, Alpha::from_int(2));
  ClassSubgroup n3 = norm_group(*m, ts::C(*m, "3"));
  ClassSubgroup prod = product(u2, n3);
  std::vector<SquareClass> gens = u2.members();
  for (SquareClass c : n3.members()) gens.push_back(c);
  CHECK(prod == span(*m, gens));
  CHECK(n3.is_subset_of(prod));
  CHECK(ClassSubgroup::units(*m).index_in_full() == 2);
  CHECK(ClassSubgroup::trivial(*m).index_in_full() == 8);
  CHECK(ups_in_units(*m, Alpha::from_int(0)) == ClassSubgroup::units(*m));
  CHECK(names(ups_in_units(*m, Alpha::from_int(2))) == std::set<std::string>{"1", "5"});
  CHECK(ups_in_units(*m, Alpha::from_int(2 * m->e() + 1)).is_trivial());
}

TEST_CASE("operations across distinct models are rejected") {
  auto a = ts::q2_model();
  auto b = ts::field("q2(2)")->model_ptr();
  CHECK_THROWS_AS(intersect(ClassSubgroup::units(*a), ClassSubgroup::units(*b)), ValidationError);
  CHECK_THROWS_AS(product(ClassSubgroup::full(*a), ClassSubgroup::trivial(*b)), ValidationError);
}

TEST_CASE("conventional names") {
  auto m = ts::q2_model();
  CHECK(subgroup_name(ClassSubgroup::full(*m)) == "F*");
  CHECK(subgroup_name(ClassSubgroup::units(*m)) == "O*F*2");
  CHECK(subgroup_name(span(*m, {m->delta()})) == "<5>F*2");
  CHECK(subgroup_name(ClassSubgroup::trivial(*m)) == "F*2");
  CHECK(subgroup_name(norm_group(*m, ts::C(*m, "3"))) == "N(3)");
}
