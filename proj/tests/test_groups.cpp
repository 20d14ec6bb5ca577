#include "doctest.h"
#include "regrade/errors.hpp"
#include "regrade/groups.hpp"

using namespace regrade;

namespace {

// D8 index of x^a y^b.
int d8(int a, int b) { return a + 4 * b; }

}  // namespace

TEST_CASE("group law") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4->mul(3, 2) == 1);
  auto d = FiniteGroup::dihedral8();
  CHECK(d->mul(d8(1, 0), d8(0, 1)) == d8(1, 1));
  CHECK(d->mul(d8(0, 1), d8(1, 0)) == d8(3, 1));
  CHECK(d->label(d8(3, 1)) == "x^3y");
  for (auto g : {z4, d, FiniteGroup::quaternion16(), FiniteGroup::symmetric3()})
    for (int x = 0; x < g->order(); ++x) CHECK(g->mul(x, g->inverse(x)) == 0);
  CHECK_THROWS_AS(d->check_element(8), ValidationError);
  CHECK_THROWS_AS(d->product({1, 9}), ValidationError);
}

TEST_CASE("built-in group invariants") {
  auto d = FiniteGroup::dihedral8();
  CHECK(d->exponent() == 4);
  CHECK_FALSE(d->is_abelian());
  auto q = FiniteGroup::quaternion16();
  CHECK(q->order() == 16);
  CHECK(q->exponent() == 8);
  // v^2 = u^4
  CHECK(q->mul(8, 8) == 4);
  CHECK(FiniteGroup::builtin("z6")->order() == 6);
  CHECK(FiniteGroup::builtin("klein")->exponent() == 2);
  CHECK_THROWS_AS(FiniteGroup::builtin("a5"), ValidationError);
}

TEST_CASE("table validation") {
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), ValidationError);
  // Latin square with identity 0 that is not associative (order 5 loop).
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), ValidationError);
}

TEST_CASE("centralizers") {
  auto d = FiniteGroup::dihedral8();
  CHECK(centralizer(*d, d8(1, 0)) == Subgroup{0, 1, 2, 3});
  CHECK(centralizer(*d, d8(2, 0)).size() == 8);
  auto k = FiniteGroup::klein();
  for (int x = 0; x < 4; ++x) CHECK(centralizer(*k, x).size() == 4);
  CHECK(center(*d) == Subgroup{0, 2});
}

TEST_CASE("conjugacy classes") {
  auto d = FiniteGroup::dihedral8();
  std::vector<std::vector<int>> expect = {{0}, {1, 3}, {2}, {4, 6}, {5, 7}};
  CHECK(conjugacy_classes(*d) == expect);
  auto s = FiniteGroup::symmetric3();
  auto cls = conjugacy_classes(*s);
  std::vector<std::size_t> sizes;
  for (auto& c : cls) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  CHECK(conjugacy_classes(*FiniteGroup::cyclic(5)).size() == 5);
}

TEST_CASE("orbit-stabilizer and centralizer containment") {
  for (auto g : {FiniteGroup::dihedral8(), FiniteGroup::quaternion16(), FiniteGroup::symmetric3(),
                 FiniteGroup::direct_product(FiniteGroup::dihedral8(), FiniteGroup::cyclic(2))}) {
    Subgroup z = center(*g);
    for (auto& cls : conjugacy_classes(*g))
      for (int x : cls) {
        Subgroup c = centralizer(*g, x);
        CHECK(cls.size() * c.size() == static_cast<std::size_t>(g->order()));
        CHECK(is_subgroup(*g, c));
        for (int y : subgroup_generated(*g, {x})) CHECK(std::binary_search(c.begin(), c.end(), y));
        for (int y : z) CHECK(std::binary_search(c.begin(), c.end(), y));
      }
  }
}

TEST_CASE("cosets and subgroups") {
  auto d = FiniteGroup::dihedral8();
  CHECK(coset_reps(*d, whole_group(*d)) == std::vector<int>{0});
  CHECK(coset_reps(*d, {0, 1, 2, 3}) == std::vector<int>{0, 4});
  auto k = FiniteGroup::klein();
  CHECK(coset_reps(*k, {0, 1}).size() == 2);
  CHECK_THROWS_AS(coset_reps(*d, {0, 1}), ValidationError);
  CHECK(index2_subgroups(*d).size() == 3);
  CHECK(index2_subgroups(*k).size() == 3);
  CHECK(index2_subgroups(*FiniteGroup::cyclic(3)).empty());
  CHECK(index2_subgroups(*FiniteGroup::quaternion16()).size() == 3);
}

TEST_CASE("products, subgroups as groups, quotients") {
  auto p = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::dihedral8());
  CHECK(p->order() == 16);
  CHECK(p->kind() == FiniteGroup::Kind::Table);
  CHECK(p->mul(1 + 2 * 1, 1 + 2 * 4) == 0 + 2 * d8(1, 1));
  auto a = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  CHECK(a->kind() == FiniteGroup::Kind::Abelian);
  auto k = subgroup_as_group(*FiniteGroup::dihedral8(), {0, 2, 4, 6});
  CHECK(k->is_abelian());
  CHECK(k->exponent() == 2);
  CHECK(k->label(2) == "y");
  auto z = FiniteGroup::abelian({4, 2});
  Quotient q = abelian_quotient(*z, subgroup_generated(*z, {2}));
  CHECK(q.group->order() == 4);
  CHECK(q.group->exponent() == 2);
}

TEST_CASE("abelian bases and invariant factors") {
  auto g = FiniteGroup::abelian({2, 4, 3});
  CHECK(invariant_factors(*g) == std::vector<int>{2, 12});
  auto tab = subgroup_as_group(*FiniteGroup::abelian({4, 4}), whole_group(*FiniteGroup::abelian({4, 4})));
  CHECK(tab->kind() == FiniteGroup::Kind::Table);
  AbelianBasis b = abelian_basis(*tab);
  CHECK(b.orders == std::vector<int>{4, 4});
  for (int x = 0; x < tab->order(); ++x) CHECK(b.element(b.coords[x], *tab) == x);
  CHECK(invariant_factors(*FiniteGroup::trivial()).empty());
  CHECK_THROWS_AS(abelian_basis(*FiniteGroup::dihedral8()), ValidationError);
}
