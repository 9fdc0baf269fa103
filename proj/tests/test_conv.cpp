#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "postft/conv.hpp"

using namespace postft;

TEST_CASE("sum base cases") {
  auto p = polya_category();
  auto b = SemiringDescriptor::boolean();
  auto chi_a = conv::characteristic(p, b, p->mor_from_name("chi"));
  std::vector<ConvElement> fam{chi_a, chi_a};
  CHECK(conv::equal(conv::sum(p, b, fam), chi_a));
  CHECK(conv::is_zero(conv::sum(p, b, {})));

  auto n = SemiringDescriptor::nat_inf();
  auto x = conv::characteristic(p, n, p->mor_from_name("1"));
  auto y = conv::characteristic(p, n, p->mor_from_name("mu"));
  std::vector<ConvElement> fam2{x, y};
  auto s = conv::sum(p, n, fam2);
  CHECK(conv::at(s, p->mor_from_name("1")) == sr::nat(1));
  CHECK(conv::at(s, p->mor_from_name("mu")) == sr::nat(1));
}

TEST_CASE("the paper's two-object noncommutativity example, exactly") {
  auto arrow = arrow_category();
  auto b = SemiringDescriptor::boolean();
  Mor gamma = arrow->mor_from_name("gamma");
  Mor idy = arrow->mor_from_name("idY");

  ConvElement f = conv::zero(arrow, b);
  conv::set(f, gamma, sr::boolean(true));
  ConvElement g = conv::zero(arrow, b);
  conv::set(g, idy, sr::boolean(true));

  CHECK(conv::at(conv::comp_product(f, g), gamma) == sr::boolean(true));
  CHECK(conv::at(conv::comp_product(g, f), gamma) == sr::boolean(false));
}

TEST_CASE("characteristic convolution composes single terms") {
  auto z = integer_monoid_category();
  auto n = SemiringDescriptor::nat_inf();
  auto f = conv::characteristic(z, n, Mor::id(2));
  auto g = conv::characteristic(z, n, Mor::id(3));
  auto h = conv::comp_product(f, g);
  CHECK(conv::at(h, Mor::id(5)) == sr::nat(1));
  CHECK(h.vals.size() == 1);
}

TEST_CASE("monoidal unit and zero") {
  auto p = polya_category();
  auto n = SemiringDescriptor::nat_inf();
  std::mt19937_64 rng(3);
  ConvElement a = conv::zero(p, n);
  conv::set(a, p->mor_from_name("chi"), sr::nat(4));
  conv::set(a, p->mor_from_name("mu"), sr::nat(1));
  CHECK(conv::equal(conv::mon_product(a, conv::unit_m(p, n)), a));
  CHECK(conv::is_zero(conv::mon_product(conv::zero(p, n), a)));
}

TEST_CASE("polya-category product matches the exhaustive factorization scan") {
  auto p = polya_category();
  auto n = SemiringDescriptor::nat_inf();
  Mor one = p->mor_from_name("1");
  Mor chi = p->mor_from_name("chi");

  // (a at chi, a0 at 1) x (b at chi, b0 at 1) evaluated at chi is
  // a*b0 + a0*b.
  ConvElement f = conv::zero(p, n);
  conv::set(f, chi, sr::nat(3));   // a
  conv::set(f, one, sr::nat(5));   // a0
  ConvElement g = conv::zero(p, n);
  conv::set(g, chi, sr::nat(7));   // b
  conv::set(g, one, sr::nat(11));  // b0
  auto prod = conv::mon_product(f, g);
  CHECK(conv::at(prod, chi) == sr::nat(3 * 11 + 5 * 7));
}

TEST_CASE("integer-monoid convolution equals Laurent coefficient convolution") {
  auto z = integer_monoid_category();
  auto n = SemiringDescriptor::nat_inf();
  std::mt19937_64 rng(41);
  for (int it = 0; it < 200; ++it) {
    std::map<std::int64_t, Int> fc, gc;
    ConvElement f = conv::zero(z, n);
    ConvElement g = conv::zero(z, n);
    for (int i = 0; i < 3; ++i) {
      std::int64_t kf = static_cast<std::int64_t>(rng() % 11) - 5;
      std::int64_t kg = static_cast<std::int64_t>(rng() % 11) - 5;
      Int vf(rng() % 6), vg(rng() % 6);
      fc[kf] += vf;
      gc[kg] += vg;
      conv::set(f, Mor::id(kf), sr::add(n, conv::at(f, Mor::id(kf)), sr::nat(vf)));
      conv::set(g, Mor::id(kg), sr::add(n, conv::at(g, Mor::id(kg)), sr::nat(vg)));
    }
    // Direct Laurent convolution oracle.
    std::map<std::int64_t, Int> expect;
    for (const auto& [i, a] : fc)
      for (const auto& [j, b] : gc) expect[i + j] += a * b;
    auto prod = conv::mon_product(f, g);
    for (const auto& [k, v] : expect)
      CHECK(conv::at(prod, Mor::id(k)) == sr::nat(v));
    auto comp = conv::comp_product(f, g);
    CHECK(conv::equal(prod, comp));  // one object, compose = tensor
  }
}

TEST_CASE("law suite over the shipped category/semiring pairs") {
  CHECK(conv::check_conv_laws(polya_category(), SemiringDescriptor::nat_inf(), 100, 7)
            .all_pass());
  CHECK(conv::check_conv_laws(arrow_category(), SemiringDescriptor::boolean(), 100, 7)
            .all_pass());
  CHECK(conv::check_conv_laws(integer_monoid_category(), SemiringDescriptor::nat_inf(),
                              100, 7)
            .all_pass());
  CHECK(conv::check_conv_laws(grid_max_category(2), SemiringDescriptor::boolean(), 60, 7)
            .all_pass());
}

TEST_CASE("lazy composition unit over the matrix category") {
  auto m = matrix_category();
  auto n = SemiringDescriptor::nat_inf();
  ConvElement a = conv::zero(m, n);
  conv::set(a, Mor::mat(MatMor{2, 3, std::vector<Rat>(6, Rat(1))}), sr::nat(2));
  auto u = conv::unit_c(m, n);
  CHECK(conv::equal(conv::comp_product(a, u), a));
  CHECK(conv::equal(conv::comp_product(u, a), a));
  // Materializing the unit over infinitely many objects must refuse.
  CHECK_THROWS_AS(conv::add(a, u), Error);
}

TEST_CASE("mismatched carriers are rejected") {
  auto p = polya_category();
  auto a = conv::unit_m(p, SemiringDescriptor::boolean());
  auto b = conv::unit_m(p, SemiringDescriptor::nat_inf());
  CHECK_THROWS_AS(conv::add(a, b), Error);
}
