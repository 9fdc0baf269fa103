#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "postft/moncat.hpp"

using namespace postft;

TEST_CASE("composition basics") {
  auto z = integer_monoid_category();
  CHECK(*z->compose(Mor::id(3), Mor::id(4)) == Mor::id(7));
  CHECK(z->tensor(Mor::id(3), Mor::id(-5)) == Mor::id(-2));

  auto p = polya_category();
  Mor chi = p->mor_from_name("chi");
  CHECK(*p->compose(p->identity(0), chi) == chi);

  auto m = matrix_category();
  Mor a = Mor::mat(MatMor{2, 2, {Rat(1), Rat(2), Rat(3), Rat(4)}});
  CHECK(*m->compose(m->identity(2), a) == a);
  CHECK(m->tensor(m->identity(2), m->identity(3)) == m->identity(6));
}

TEST_CASE("grid-max tensor is max") {
  auto g = grid_max_category(2);
  CHECK(g->tensor(Mor::grid(Rat(1, 2)), Mor::grid(Rat(1))) == Mor::grid(Rat(1)));
  CHECK(g->contains(Mor::grid(Rat(1, 2))));
  CHECK_FALSE(g->contains(Mor::grid(Rat(1, 3))));
}

TEST_CASE("monoid-to-category rejects broken tables") {
  CHECK_THROWS_AS(monoid_to_category("bad", {"1", "a"}, {{0, 1}, {1, 0}}, 1), Error);
  // Non-associative magma on three elements.
  CHECK_THROWS_AS(
      monoid_to_category("bad", {"1", "a", "b"},
                         {{0, 1, 2}, {1, 2, 2}, {2, 1, 2}}, 0),
      Error);
  CHECK(f2_category()->is_monoid());
  CHECK(trivial_monoid_category()->morphisms().size() == 1);
}

TEST_CASE("factorization scans on the polya category") {
  auto p = polya_category();
  Mor one = p->mor_from_name("1");
  Mor chi = p->mor_from_name("chi");
  Mor mu = p->mor_from_name("mu");

  auto chi_pairs = factorizations(*p, chi, FactorMode::Tensor);
  REQUIRE(chi_pairs.size() == 2);
  CHECK(((chi_pairs[0] == std::pair{one, chi}) || (chi_pairs[0] == std::pair{chi, one})));

  auto mu_pairs = factorizations(*p, mu, FactorMode::Tensor);
  CHECK(mu_pairs.size() == 6);

  auto unit_comp = factorizations(*p, p->unit_identity(), FactorMode::Comp);
  bool has_unit_pair = false;
  for (const auto& [b, a] : unit_comp)
    has_unit_pair |= (b == p->unit_identity() && a == p->unit_identity());
  CHECK(has_unit_pair);

  CHECK_THROWS_AS(factorizations(*integer_monoid_category(), Mor::id(0), FactorMode::Comp),
                  Error);
}

TEST_CASE("CTC equals TCT exactly on one-object categories") {
  auto p = polya_category();
  for (const Mor& g : p->morphisms())
    for (const Mor& x1 : p->morphisms())
      for (const Mor& x2 : p->morphisms()) {
        auto sets = ctc_tct(*p, g, x1, x2);
        CHECK(sets.ctc == sets.tct);
      }
}

TEST_CASE("CTC is strictly smaller on the two-object arrow category") {
  auto c = arrow_category();
  Mor idx = c->mor_from_name("idX");
  Mor idy = c->mor_from_name("idY");
  Mor gamma = c->mor_from_name("gamma");

  auto sets = ctc_tct(*c, idy, idx, idy);
  CHECK(sets.ctc.size() < sets.tct.size());
  for (const auto& pr : sets.ctc)
    CHECK(std::count(sets.tct.begin(), sets.tct.end(), pr) == 1);

  auto empty = ctc_tct(*c, idx, gamma, gamma);
  CHECK(empty.ctc.empty());
  CHECK(empty.tct.empty());
}

TEST_CASE("axiom suite passes on the builtins") {
  CHECK(check_category_axioms(*polya_category(), 100, 5).all_pass());
  CHECK(check_category_axioms(*f2_category(), 100, 5).all_pass());
  CHECK(check_category_axioms(*arrow_category(), 100, 5).all_pass());
  CHECK(check_category_axioms(*integer_monoid_category(), 200, 5).all_pass());
  CHECK(check_category_axioms(*grid_max_category(2), 200, 5).all_pass());
  CHECK(check_category_axioms(*matrix_category(), 200, 5).all_pass());
}

TEST_CASE("broken interchange is flagged and rejected by the loader") {
  TableData d;
  d.name = "broken";
  d.objects = {"I"};
  d.mor_names = {"1", "a", "b"};
  d.mor_dom = {0, 0, 0};
  d.mor_cod = {0, 0, 0};
  d.identity_of = {0};
  d.unit = 0;
  // Composition: a o a = b, everything else collapses to the max label.
  auto idx = [](int i) { return i; };
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) d.comp[{x, y}] = std::max(idx(x), idx(y));
  d.comp[{1, 1}] = 2;
  d.tensor_obj_table = {{0}};
  // Tensor disagrees with composition in a way that breaks interchange.
  d.tensor_mor_table = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};

  auto cat = make_table_category(d, /*validate=*/false);
  auto report = check_category_axioms(*cat, 200, 7);
  CHECK_FALSE(report.all_pass());
  bool interchange_flagged = false;
  for (const auto& c : report.checks)
    if (c.law == "interchange") interchange_flagged |= c.failures > 0;
  CHECK(interchange_flagged);

  CHECK_THROWS_AS(make_table_category(d, /*validate=*/true), Error);
}

TEST_CASE("Kronecker product identities hold entry-exactly") {
  std::mt19937_64 rng(13);
  auto m = matrix_category();
  for (int it = 0; it < 40; ++it) {
    MatMor a = m->sample_morphism(rng).matrix();
    MatMor b = m->sample_morphism(rng).matrix();
    MatMor c = m->sample_morphism(rng).matrix();
    CHECK(mat_kron(mat_kron(a, b), c) == mat_kron(a, mat_kron(b, c)));

    // (A'B') (x) (A''B'') = (A' (x) A'')(B' (x) B'') with composable shapes.
    MatMor a2 = MatMor::zero(a.cols, b.rows);
    for (auto& x : a2.a) x = Rat(static_cast<std::int64_t>(rng() % 5) - 2);
    MatMor b2 = MatMor::zero(b.cols, c.rows);
    for (auto& x : b2.a) x = Rat(static_cast<std::int64_t>(rng() % 5) - 2);
    CHECK(mat_kron(mat_mul(a, a2), mat_mul(b, b2)) ==
          mat_mul(mat_kron(a, b), mat_kron(a2, b2)));
  }
}

TEST_CASE("category table JSON round trip and rejection") {
  auto p = polya_category();
  auto j = table_to_json(*p);
  auto q = category_from_json(j);
  CHECK(q->morphisms().size() == 3);
  CHECK(q->mor_name(*q->compose(q->mor_from_name("chi"), q->mor_from_name("chi"))) ==
        "mu");

  auto bad = j;
  bad["compose"][0][2] = "mu";  // corrupt one entry
  bad["compose"][1][2] = "mu";
  bad["compose"][2][2] = "chi";
  CHECK_THROWS_AS(category_from_json(bad), Error);
}

TEST_CASE("matrix representation checks") {
  // The all-ones representation of the polya monoid in dimension 1.
  MatrixRep rep;
  rep.source = polya_category();
  rep.object_dim = [](Obj) { return 1; };
  rep.morphism_matrix = [](const Mor&) { return MatMor::identity(1); };
  CHECK(check_matrix_rep(rep, 100, 3).all_pass());

  // rep(chi) = [2] breaks chi^2 = mu unless rep(mu) = [4], which then breaks
  // chi*mu = mu; rejected either way.
  MatrixRep bad = rep;
  bad.morphism_matrix = [](const Mor& m) {
    MatMor x = MatMor::identity(1);
    if (m.table_id() == 1) x.at(0, 0) = Rat(2);
    if (m.table_id() == 2) x.at(0, 0) = Rat(4);
    return x;
  };
  CHECK_FALSE(check_matrix_rep(bad, 100, 3).all_pass());

  // Integer monoid window k >= 0, rep(k) = [2^k].
  MatrixRep pow2;
  pow2.source = integer_monoid_category();
  pow2.object_dim = [](Obj) { return 1; };
  pow2.morphism_matrix = [](const Mor& m) {
    MatMor x = MatMor::identity(1);
    std::int64_t k = m.table_id();
    Rat v(1);
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) v *= 2;
    x.at(0, 0) = k >= 0 ? v : Rat(1) / v;
    return x;
  };
  CHECK(check_matrix_rep(pow2, 100, 3).all_pass());
}
