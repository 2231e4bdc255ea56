#include <doctest.h>

#include "axial/error.hpp"
#include "helpers.hpp"

using namespace axial;
using namespace axial::test;

TEST_CASE("eigenspaces and components of 3C(1/2) match the oracle") {
  AxialAlgebra x = three_c("1/2");
  const Axis& a = x.axes()[0];
  const FusionLaw& law = x.law();
  auto space = [&](const char* value) { return a.eigenspaces[*law.index_of(q(value))]; };
  CHECK(space("1") == rref(x.field(), 3, {qv({"1", "0", "0"})}));
  CHECK(space("1/2") == rref(x.field(), 3, {qv({"0", "-1", "1"})}));
  CHECK(space("0") == rref(x.field(), 3, {qv({"-1/2", "1", "1"})}));

  auto parts = components(x.table(), a, qv({"0", "1", "0"}));
  CHECK(parts[*law.index_of(q("1"))] == qv({"1/4", "0", "0"}));
  CHECK(parts[*law.index_of(q("1/2"))] == qv({"0", "1/2", "-1/2"}));
  CHECK(parts[*law.index_of(q("0"))] == qv({"-1/4", "1/2", "1/2"}));
}

TEST_CASE("property: components sum back and lie in their eigenspaces") {
  std::mt19937 rng(5);
  for (Field f : {Field::rationals(), Field::prime(5)})
    for (const auto& m : corpus(f)) {
      if (m.algebra.dimension() > 9)
        continue;
      Vector u = random_matrix(f, 1, m.algebra.dimension(), rng)[0];
      for (const auto& axis : m.algebra.axes()) {
        auto parts = components(m.algebra.table(), axis, u);
        Vector total = zero_vector(f, u.size());
        for (std::size_t k = 0; k < parts.size(); ++k) {
          CHECK(axis.eigenspaces[k].contains(parts[k]));
          total = add(total, parts[k]);
        }
        CHECK(total == u);
      }
    }
}

TEST_CASE("fusion laws validate their tables") {
  FusionLaw j = jordan_law(q("1/2"));
  std::size_t one = j.one_index(), zero = *j.index_of(q("0")), eta = *j.index_of(q("1/2"));
  CHECK(j(eta, eta) == FusionLaw::ValueSet{one, zero});
  CHECK(j(one, zero).empty());
  CHECK(admits_direct_sums(j));
  CHECK_THROWS_AS(jordan_law(q("1")), InvalidParameter);
  CHECK_THROWS_AS(jordan_law(q("0")), InvalidParameter);

  FusionLaw mon = monster_law(q("1/4"), q("1/32"));
  std::size_t a = *mon.index_of(q("1/4")), b = *mon.index_of(q("1/32"));
  CHECK(mon(b, b) == FusionLaw::ValueSet{mon.one_index(), *mon.index_of(q("0")), a});
  CHECK(mon(a, b) == FusionLaw::ValueSet{b});
  CHECK_THROWS_AS(monster_law(q("1/4"), q("1/4")), InvalidParameter);

  std::map<std::pair<std::size_t, std::size_t>, FusionLaw::ValueSet> asymmetric{
      {{0, 0}, {0}}, {{0, 1}, {1}}, {{1, 0}, {0}}, {{1, 1}, {0}}};
  CHECK_THROWS_AS(FusionLaw({q("1"), q("0")}, asymmetric, "broken"), InvalidParameter);
  CHECK(jordan_law(q("1/2")).reduced_to(Field::prime(5)) == jordan_law(Field::prime(5).parse("1/2")));
}

TEST_CASE("verify_axis names the violated condition") {
  AxialAlgebra base = three_c("1/2");
  auto check = [&](std::size_t i, std::size_t j, Vector value, std::size_t axis) {
    AlgebraTable t = base.table();
    t.set_product(i, j, std::move(value));
    return verify_axis(t, base.law(), t.basis_vector(axis));
  };
  auto first = [](const AxisCheck& c) { return c.violations.at(0).condition; };

  CHECK(first(check(0, 0, qv({"0", "0", "0"}), 0)) == AxisCondition::NonzeroIdempotent);
  CHECK(first(check(0, 0, qv({"1", "0", "1"}), 0)) == AxisCondition::NonzeroIdempotent);
  CHECK(first(check(0, 1, qv({"1/6", "1/6", "-1/6"}), 0)) == AxisCondition::Semisimplicity);
  CHECK(first(check(1, 2, qv({"0", "0", "0"}), 0)) == AxisCondition::Fusion);

  AxisCheck zero = verify_axis(base.table(), base.law(), qv({"0", "0", "0"}));
  CHECK_FALSE(zero.ok());
  CHECK(to_string(AxisCondition::Primitivity) == "primitivity");

  // 1A + 1A: the sum of both idempotents is an idempotent with a 2-dimensional 1-eigenspace.
  AxialAlgebra two_b = named_algebra("2B", q("1/2"));
  AxisCheck sum = verify_axis(two_b.table(), two_b.law(), qv({"1", "1"}));
  REQUIRE_FALSE(sum.ok());
  CHECK(sum.violations.back().condition == AxisCondition::Primitivity);
}

TEST_CASE("AxialAlgebra rejects bad axes and non-generating sets") {
  AxialAlgebra base = three_c("1/2");
  CHECK_THROWS_AS(AxialAlgebra(base.table(), base.law(), {qv({"1", "1", "0"})}), AxisVerificationError);
  CHECK_THROWS_AS(AxialAlgebra(base.table(), base.law(), {qv({"1", "0", "0"})}), PreconditionError);
  CHECK(base.axis_names() == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("direct sums need a law that allows them") {
  AxialAlgebra x = three_c("1/2");
  AxialAlgebra s = direct_sum(std::vector<AxialAlgebra>{x, x});
  CHECK(s.dimension() == 6);
  CHECK(s.axes().size() == 6);
  CHECK_THROWS_AS(direct_sum(std::vector<AxialAlgebra>{x, three_c("1/3")}), InvalidParameter);
}
