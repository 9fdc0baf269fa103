#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "postft/funvector.hpp"

using namespace postft;

namespace {

// Independent dense oracle for <f,g>(a,c) = sum_b f(a,b) g(b,c); kept loop
// based and index based on purpose so it shares nothing with the sparse path.
FunVector inner_oracle(const FunVector& f, const FunVector& g) {
  auto A = f.dom->factors()[0];
  auto B = f.dom->factors()[1];
  auto C = g.dom->factors()[1];
  FunVector out = fv::make(f.desc, GroundSet::product({A, C}));
  for (std::uint64_t a = 0; a < A->size(); ++a)
    for (std::uint64_t c = 0; c < C->size(); ++c) {
      SemiringElement acc = sr::zero(f.desc);
      for (std::uint64_t b = 0; b < B->size(); ++b) {
        auto lhs = fv::at(f, a * B->size() + b);
        auto rhs = fv::at(g, b * C->size() + c);
        acc = sr::add(f.desc, acc, sr::mul(f.desc, lhs, rhs));
      }
      fv::set(out, a * C->size() + c, acc);
    }
  return out;
}

FunVector random_vec(const SemiringDescriptor& d, const GroundSetPtr& dom,
                     std::mt19937_64& rng) {
  FunVector f = fv::make(d, dom);
  for (std::uint64_t k = 0; k < dom->size(); ++k)
    if (rng() % 2) fv::set(f, k, sr::sample(d, rng));
  return f;
}

}  // namespace

TEST_CASE("pointwise operations on characteristic vectors") {
  auto d = SemiringDescriptor::boolean();
  auto A = GroundSet::atom("A", {"x", "y"});
  auto chi_x = fv::characteristic(d, A, 0);
  auto chi_y = fv::characteristic(d, A, 1);
  CHECK(fv::equal(fv::pointwise(fv::Pointwise::Add, chi_x, chi_x), chi_x));
  CHECK(fv::pointwise(fv::Pointwise::Mul, chi_x, chi_y).vals.empty());
  auto zero = fv::make(d, A);
  CHECK(fv::equal(fv::pointwise(fv::Pointwise::Add, zero, chi_y), chi_y));
}

TEST_CASE("pullback cases") {
  auto d = SemiringDescriptor::nat_inf();
  auto A = GroundSet::atom("A", {"a0", "a1", "a2"});
  auto B = GroundSet::atom("B", {"b0", "b1"});
  std::mt19937_64 rng(11);
  auto g = random_vec(d, B, rng);

  std::vector<std::uint64_t> ident{0, 1};
  CHECK(fv::pullback(B, ident, g).vals == g.vals);

  std::vector<std::uint64_t> constant{1, 1, 1};
  auto c = fv::pullback(A, constant, g);
  for (std::uint64_t k = 0; k < 3; ++k) CHECK(fv::at(c, k) == fv::at(g, 1));

  std::vector<std::uint64_t> bad{0, 5, 0};
  CHECK_THROWS_AS(fv::pullback(A, bad, g), Error);
}

TEST_CASE("tensor of characteristic vectors and absorbing zero") {
  auto d = SemiringDescriptor::boolean();
  auto A = GroundSet::atom("A", {"x", "y"});
  auto B = GroundSet::atom("B", {"u", "v", "w"});
  auto chi_x = fv::characteristic(d, A, 0);
  auto chi_v = fv::characteristic(d, B, 1);
  auto t = fv::tensor(chi_x, chi_v);
  CHECK(t.vals.size() == 1);
  CHECK(fv::at(t, 0 * 3 + 1) == sr::boolean(true));
  CHECK(fv::tensor(chi_x, fv::make(d, B)).vals.empty());

  auto n = SemiringDescriptor::nat_inf();
  auto f = fv::make(n, A);
  fv::set(f, 0, sr::nat(2));
  auto g = fv::make(n, B);
  fv::set(g, 1, sr::nat(3));
  CHECK(fv::at(fv::tensor(f, g), 1) == sr::nat(6));
}

TEST_CASE("contraction of a four-factor product") {
  auto d = SemiringDescriptor::nat_inf();
  auto A = GroundSet::atom("A", {"a0"});
  auto B = GroundSet::atom("B", {"b0", "b1", "b2"});
  auto C = GroundSet::atom("C", {"c0"});
  auto dom = GroundSet::product({A, B, B, C});

  // Single diagonal term.
  auto f = fv::make(d, dom);
  fv::set(f, dom->join_key({0, 0, 0, 0}), sr::nat(1));
  auto g = fv::contract(f);
  CHECK(fv::at(g, 0) == sr::nat(1));

  // Support entirely off the diagonal sums to nothing.
  auto off = fv::make(d, dom);
  fv::set(off, dom->join_key({0, 0, 1, 0}), sr::nat(5));
  fv::set(off, dom->join_key({0, 2, 1, 0}), sr::nat(7));
  CHECK(fv::contract(off).vals.empty());

  // Constant diagonal over a 3-element middle factor counts it.
  auto diag = fv::make(d, dom);
  for (std::uint64_t b = 0; b < 3; ++b)
    fv::set(diag, dom->join_key({0, b, b, 0}), sr::nat(1));
  CHECK(fv::at(fv::contract(diag), 0) == sr::nat(3));
}

TEST_CASE("inner product against the dense oracle") {
  auto A = GroundSet::atom("A", {"a0", "a1", "a2"});
  auto B = GroundSet::atom("B", {"b0", "b1", "b2"});
  auto C = GroundSet::atom("C", {"c0", "c1", "c2"});
  for (auto d : {SemiringDescriptor::boolean(), SemiringDescriptor::nat_inf(),
                 SemiringDescriptor::tropical()}) {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 50; ++it) {
      auto f = random_vec(d, GroundSet::product({A, B}), rng);
      auto g = random_vec(d, GroundSet::product({B, C}), rng);
      CHECK(fv::equal(fv::inner(f, g), inner_oracle(f, g)));
      CHECK(fv::equal(fv::contract(fv::tensor(f, g)), inner_oracle(f, g)));
    }
  }
}

TEST_CASE("identity kernel acts as identity") {
  auto d = SemiringDescriptor::boolean();
  auto A = GroundSet::atom("A", {"a0", "a1"});
  auto C = GroundSet::atom("C", {"c0", "c1", "c2"});
  auto AA = GroundSet::product({A, A});
  auto delta = fv::make(d, AA);
  for (std::uint64_t i = 0; i < 2; ++i) fv::set(delta, i * 2 + i, sr::boolean(true));
  std::mt19937_64 rng(5);
  auto g = random_vec(d, GroundSet::product({A, C}), rng);
  CHECK(fv::equal(fv::inner(delta, g), g));
}

TEST_CASE("ones times ones counts the middle set") {
  auto d = SemiringDescriptor::nat_inf();
  auto A = GroundSet::atom("A", {"a0", "a1"});
  auto f = fv::make(d, GroundSet::product({A, A}));
  for (std::uint64_t k = 0; k < 4; ++k) fv::set(f, k, sr::nat(1));
  auto p = fv::inner(f, f);
  for (std::uint64_t k = 0; k < 4; ++k) CHECK(fv::at(p, k) == sr::nat(2));
}

TEST_CASE("fun-semialgebra law suite") {
  CHECK(fv::check_fun_laws(SemiringDescriptor::boolean(), 60, 2).all_pass());
  CHECK(fv::check_fun_laws(SemiringDescriptor::nat_inf(), 60, 2).all_pass());
}

TEST_CASE("corrupted contraction is flagged") {
  // Sums only half of the middle set: the half that actually carries support,
  // which makes the dropped terms depend on the operands.
  auto broken = [](const FunVector& f, const FunVector& g) {
    auto A = f.dom->factors()[0];
    auto B = f.dom->factors()[1];
    auto C = g.dom->factors()[1];
    std::vector<std::uint64_t> contributing;
    for (std::uint64_t b = 0; b < B->size(); ++b) {
      bool used = false;
      for (std::uint64_t a = 0; a < A->size() && !used; ++a)
        used = f.vals.count(a * B->size() + b) > 0;
      if (used) contributing.push_back(b);
    }
    contributing.resize((contributing.size() + 1) / 2);
    FunVector out = fv::make(f.desc, GroundSet::product({A, C}));
    for (std::uint64_t a = 0; a < A->size(); ++a)
      for (std::uint64_t c = 0; c < C->size(); ++c) {
        SemiringElement acc = sr::zero(f.desc);
        for (std::uint64_t b : contributing)
          acc = sr::add(f.desc, acc,
                        sr::mul(f.desc, fv::at(f, a * B->size() + b),
                                fv::at(g, b * C->size() + c)));
        fv::set(out, a * C->size() + c, acc);
      }
    return out;
  };
  auto report = fv::check_fun_laws(SemiringDescriptor::nat_inf(), 40, 9, broken);
  CHECK_FALSE(report.all_pass());
  bool assoc_or_bilinear = false;
  for (const auto& c : report.checks)
    if (c.law.rfind("inner-", 0) == 0) assoc_or_bilinear |= c.failures > 0;
  CHECK(assoc_or_bilinear);
}
