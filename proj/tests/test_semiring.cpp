#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "postft/laws.hpp"
#include "postft/semiring.hpp"

using namespace postft;

namespace {

std::vector<SemiringDescriptor> all_carriers() {
  return {
      SemiringDescriptor::boolean(),
      SemiringDescriptor::nat_inf(),
      SemiringDescriptor::rat_inf(),
      SemiringDescriptor::tropical(),
      SemiringDescriptor::arctic(),
      SemiringDescriptor::language({"a", "b", "c", "d"}),
      SemiringDescriptor::relation({"1", "2", "3"}),
      SemiringDescriptor::matrix(2, SemiringDescriptor::nat_inf()),
  };
}

}  // namespace

TEST_CASE("boolean addition is the forced idempotent join") {
  auto d = SemiringDescriptor::boolean();
  CHECK(sr::add(d, sr::boolean(true), sr::boolean(true)) == sr::boolean(true));
  CHECK(sr::add(d, sr::boolean(false), sr::boolean(false)) == sr::boolean(false));
  CHECK(sr::mul(d, sr::boolean(true), sr::boolean(true)) == sr::boolean(true));
}

TEST_CASE("nat-inf saturating arithmetic") {
  auto d = SemiringDescriptor::nat_inf();
  CHECK(sr::add(d, sr::nat(7), sr::nat_infinity()) == sr::nat_infinity());
  CHECK(sr::mul(d, sr::nat(0), sr::nat_infinity()) == sr::nat(0));
  CHECK(sr::mul(d, sr::nat_infinity(), sr::nat(0)) == sr::nat(0));
  CHECK(sr::mul(d, sr::nat_infinity(), sr::nat(2)) == sr::nat_infinity());
}

TEST_CASE("tropical addition is min, product is numeric addition") {
  auto d = SemiringDescriptor::tropical();
  CHECK(sr::add(d, sr::tropical(5), sr::tropical(3)) == sr::tropical(3));
  CHECK(sr::mul(d, sr::tropical(5), sr::tropical(3)) == sr::tropical(8));
  CHECK(sr::add(d, sr::tropical_zero(), sr::tropical(3)) == sr::tropical(3));
  CHECK(sr::mul(d, sr::tropical_zero(), sr::tropical(3)) == sr::tropical_zero());
  CHECK(sr::one(d) == sr::tropical(0));
}

TEST_CASE("arctic addition is max with -inf as unit") {
  auto d = SemiringDescriptor::arctic();
  CHECK(sr::add(d, sr::arctic(2), sr::arctic(5)) == sr::arctic(5));
  CHECK(sr::add(d, sr::arctic_zero(), sr::arctic(5)) == sr::arctic(5));
  CHECK(sr::mul(d, sr::arctic_zero(), sr::arctic_top()) == sr::arctic_zero());
  CHECK(sr::mul(d, sr::arctic(2), sr::arctic(5)) == sr::arctic(7));
}

TEST_CASE("language concatenation") {
  auto d = SemiringDescriptor::language({"a", "b", "c", "d"});
  auto ab = sr::language(d, {"ab"});
  auto cd = sr::language(d, {"c", "d"});
  CHECK(sr::mul(d, ab, cd) == sr::language(d, {"abc", "abd"}));
  CHECK(sr::one(d) == sr::language(d, {""}));
  CHECK(sr::mul(d, sr::zero(d), ab) == sr::zero(d));
}

TEST_CASE("relation composition") {
  auto d = SemiringDescriptor::relation({"1", "2"});
  auto r = sr::relation(d, {{0, 1}});
  auto s = sr::relation(d, {{1, 0}});
  CHECK(sr::mul(d, r, s) == sr::relation(d, {{0, 0}}));
  CHECK(sr::one(d) == sr::relation(d, {{0, 0}, {1, 1}}));
}

TEST_CASE("matrix carrier multiplies with inner ops") {
  auto d = SemiringDescriptor::matrix(2, SemiringDescriptor::nat_inf());
  auto m = sr::matrix(d, {sr::nat(1), sr::nat(2), sr::nat(3), sr::nat(4)});
  CHECK(sr::mul(d, sr::one(d), m) == m);
  CHECK(sr::mul(d, m, sr::one(d)) == m);
  auto sq = sr::mul(d, m, m);
  CHECK(sq == sr::matrix(d, {sr::nat(7), sr::nat(10), sr::nat(15), sr::nat(22)}));
}

TEST_CASE("summation law base cases") {
  auto d = SemiringDescriptor::tropical();
  std::vector<SemiringElement> fam{sr::tropical(5), sr::tropical(3), sr::tropical(7)};
  CHECK(sr::sum(d, fam) == sr::tropical(3));
  CHECK(sr::sum(SemiringDescriptor::boolean(), {}) ==
        sr::zero(SemiringDescriptor::boolean()));
  auto n = SemiringDescriptor::nat_inf();
  std::vector<SemiringElement> ones{sr::nat(1), sr::nat(1), sr::nat(1), sr::nat(1)};
  CHECK(sr::sum(n, ones) == sr::nat(4));
}

TEST_CASE("repeat with symbolic infinite count") {
  auto b = SemiringDescriptor::boolean();
  CHECK(sr::repeat(b, Count::inf(), sr::boolean(true)) == sr::boolean(true));
  auto n = SemiringDescriptor::nat_inf();
  CHECK(sr::repeat(n, Count::inf(), sr::nat(0)) == sr::nat(0));
  CHECK(sr::repeat(n, Count::inf(), sr::nat(2)) == sr::nat_infinity());
  CHECK(sr::repeat(n, Count::of(3), sr::nat(2)) == sr::nat(6));
  auto t = SemiringDescriptor::tropical();
  CHECK(sr::repeat(t, Count::of(0), sr::tropical(4)) == sr::tropical_zero());
  CHECK(sr::repeat(t, Count::of(5), sr::tropical(4)) == sr::tropical(4));
}

TEST_CASE("carrier mismatch raises descriptor-mismatch") {
  auto b = SemiringDescriptor::boolean();
  CHECK_THROWS_AS(sr::add(b, sr::nat(1), sr::boolean(true)), Error);
}

TEST_CASE("law suite passes on every built-in carrier") {
  for (const auto& d : all_carriers()) {
    auto report = check_semiring_laws(d, 60, 1);
    INFO(carrier_name(d.carrier));
    CHECK(report.all_pass());
  }
}

TEST_CASE("corrupted product is flagged by the law suite") {
  auto d = SemiringDescriptor::nat_inf();
  SemiringOps ops = standard_ops(d);
  // Deliberately non-distributive: product adds 1 whenever both args nonzero.
  ops.mul = [d](const SemiringElement& a, const SemiringElement& b) {
    auto p = sr::mul(d, a, b);
    if (!sr::is_zero(d, a) && !sr::is_zero(d, b)) p = sr::add(d, p, sr::nat(1));
    return p;
  };
  auto report = check_semiring_laws(ops, 40, 3);
  CHECK_FALSE(report.all_pass());
  bool dist_flagged = false;
  for (const auto& c : report.checks)
    if (c.law.rfind("distributive", 0) == 0 || c.law.rfind("sum-distributive", 0) == 0)
      dist_flagged |= c.failures > 0;
  CHECK(dist_flagged);
}

TEST_CASE("element JSON round trip") {
  for (const auto& d : all_carriers()) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
      auto e = sr::sample(d, rng);
      auto j = sr::element_to_json(d, e);
      CHECK(sr::element_from_json(d, j) == e);
    }
    auto dj = sr::descriptor_to_json(d);
    CHECK(sr::descriptor_from_json(dj) == d);
  }
}
