#include "postft/funvector.hpp"

#include <string>

namespace postft::fv {

namespace {

struct Ctx {
  const SemiringDescriptor& d;
  auto add() const {
    return [this](const SemiringElement& a, const SemiringElement& b) {
      return sr::add(d, a, b);
    };
  }
  auto mul() const {
    return [this](const SemiringElement& a, const SemiringElement& b) {
      return sr::mul(d, a, b);
    };
  }
  auto is_zero() const {
    return [this](const SemiringElement& a) { return sr::is_zero(d, a); };
  }
};

void require_same_desc(const FunVector& a, const FunVector& b) {
  if (a.desc != b.desc)
    fail(ErrorKind::DescriptorMismatch, "function vectors over different carriers");
}

FunVec<SemiringElement> view(const FunVector& f) { return {f.dom, f.vals}; }

FunVector wrap(const SemiringDescriptor& d, FunVec<SemiringElement> v) {
  return {d, std::move(v.dom), std::move(v.vals)};
}

}  // namespace

FunVector make(const SemiringDescriptor& desc, GroundSetPtr dom) {
  return {desc, std::move(dom), {}};
}

FunVector characteristic(const SemiringDescriptor& desc, GroundSetPtr dom,
                         std::uint64_t key) {
  FunVector f = make(desc, std::move(dom));
  set(f, key, sr::one(desc));
  return f;
}

void set(FunVector& f, std::uint64_t key, SemiringElement v) {
  sr::require_conforms(f.desc, v);
  auto fv = view(f);
  Ctx ctx{f.desc};
  fvg::set_entry(fv, key, std::move(v), ctx.is_zero());
  f.vals = std::move(fv.vals);
}

SemiringElement at(const FunVector& f, std::uint64_t key) {
  auto it = f.vals.find(key);
  if (it != f.vals.end()) return it->second;
  return sr::zero(f.desc);
}

bool equal(const FunVector& a, const FunVector& b) {
  return a.desc == b.desc && same_ground_set(*a.dom, *b.dom) && a.vals == b.vals;
}

FunVector pointwise(Pointwise kind, const FunVector& f, const FunVector& g) {
  require_same_desc(f, g);
  Ctx ctx{f.desc};
  if (kind == Pointwise::Add)
    return wrap(f.desc, fvg::pointwise_add(view(f), view(g), ctx.add(), ctx.is_zero()));
  return wrap(f.desc, fvg::pointwise_mul(view(f), view(g), ctx.mul(), ctx.is_zero()));
}

FunVector pullback(GroundSetPtr domain_a, const std::vector<std::uint64_t>& map,
                   const FunVector& g) {
  return wrap(g.desc, fvg::pullback(std::move(domain_a), map, view(g)));
}

FunVector tensor(const FunVector& f, const FunVector& g) {
  require_same_desc(f, g);
  Ctx ctx{f.desc};
  return wrap(f.desc, fvg::tensor(view(f), view(g), ctx.mul(), ctx.is_zero()));
}

FunVector contract(const FunVector& f) {
  Ctx ctx{f.desc};
  return wrap(f.desc, fvg::contract(view(f), ctx.add(), ctx.is_zero()));
}

FunVector inner(const FunVector& f, const FunVector& g) {
  require_same_desc(f, g);
  Ctx ctx{f.desc};
  return wrap(f.desc, fvg::inner(view(f), view(g), ctx.mul(), ctx.add(), ctx.is_zero()));
}

namespace {

FunVector random_vector(const SemiringDescriptor& d, const GroundSetPtr& dom,
                        std::mt19937_64& rng) {
  FunVector f = make(d, dom);
  auto n_entries = rng() % (dom->size() + 1);
  for (std::uint64_t i = 0; i < n_entries; ++i)
    set(f, rng() % dom->size(), sr::sample(d, rng));
  return f;
}

std::string render(const FunVector& f) {
  std::string s = "{";
  for (const auto& [k, v] : f.vals)
    s += f.dom->render_key(k) + ":" + sr::to_string(f.desc, v) + " ";
  return s + "}";
}

}  // namespace

LawReport check_fun_laws(const SemiringDescriptor& desc, int sample_count,
                         std::uint64_t seed, InnerFn inner_override) {
  std::mt19937_64 rng(seed);
  LawReport report;
  report.subject = std::string("fun-semialgebra/") + carrier_name(desc.carrier);

  InnerFn ip = inner_override
                   ? inner_override
                   : [](const FunVector& a, const FunVector& b) { return inner(a, b); };

  auto A = GroundSet::atom("A", {"a0", "a1", "a2"});
  auto B = GroundSet::atom("B", {"b0", "b1", "b2"});
  auto C = GroundSet::atom("C", {"c0", "c1"});
  auto D = GroundSet::atom("D", {"d0", "d1", "d2"});
  auto AB = GroundSet::product({A, B});
  auto BC = GroundSet::product({B, C});
  auto CD = GroundSet::product({C, D});
  auto star = GroundSet::atom("*", {"*"});

  for (int it = 0; it < sample_count; ++it) {
    FunVector f = random_vector(desc, AB, rng);
    FunVector f2 = random_vector(desc, AB, rng);
    FunVector g = random_vector(desc, BC, rng);
    FunVector g2 = random_vector(desc, BC, rng);
    FunVector h = random_vector(desc, CD, rng);
    auto witness = [&]() { return "f=" + render(f) + " g=" + render(g); };

    report.record("inner-associative",
                  equal(ip(ip(f, g), h), ip(f, ip(g, h))), witness);
    report.record(
        "inner-bilinear-left",
        equal(ip(pointwise(Pointwise::Add, f, f2), g),
              pointwise(Pointwise::Add, ip(f, g), ip(f2, g))),
        witness);
    report.record(
        "inner-bilinear-right",
        equal(ip(f, pointwise(Pointwise::Add, g, g2)),
              pointwise(Pointwise::Add, ip(f, g), ip(f, g2))),
        witness);

    // Unitor: tensoring with the one-point ground set is the identity.
    {
      FunVector unit = make(desc, star);
      set(unit, 0, sr::one(desc));
      FunVector fu = tensor(f, unit);
      FunVector uf = tensor(unit, f);
      bool ok = fu.vals == f.vals && uf.vals == f.vals;
      report.record("unitors", ok, witness);
    }

    // Braiding: the pullback along the swap bijection is an involution, and
    // for commutative carriers it carries f (x) g to g (x) f.
    {
      FunVector fa = random_vector(desc, A, rng);
      FunVector gb = random_vector(desc, B, rng);
      FunVector t = tensor(fa, gb);
      auto BA = GroundSet::product({B, A});
      std::vector<std::uint64_t> swap_ba(BA->size());
      for (std::uint64_t b = 0; b < B->size(); ++b)
        for (std::uint64_t a = 0; a < A->size(); ++a)
          swap_ba[b * A->size() + a] = a * B->size() + b;
      std::vector<std::uint64_t> swap_ab(t.dom->size());
      for (std::uint64_t a = 0; a < A->size(); ++a)
        for (std::uint64_t b = 0; b < B->size(); ++b)
          swap_ab[a * B->size() + b] = b * A->size() + a;
      FunVector braided = pullback(BA, swap_ba, t);
      FunVector back = pullback(t.dom, swap_ab, braided);
      report.record("braiding-involution", back.vals == t.vals, witness);
      if (desc.carrier != Carrier::Matrix)
        report.record("braiding-symmetry", equal(braided, tensor(gb, fa)), witness);
    }

    // Associator coherence: flattened re-bracketing is the identity on keys.
    {
      FunVector fa = random_vector(desc, A, rng);
      FunVector gb = random_vector(desc, B, rng);
      FunVector hc = random_vector(desc, C, rng);
      FunVector left = tensor(tensor(fa, gb), hc);
      FunVector right = tensor(fa, tensor(gb, hc));
      report.record("associator-identity", left.vals == right.vals, witness);
    }

    // Pullback is a semialgebra morphism and contravariantly functorial.
    {
      std::vector<std::uint64_t> phi(A->size());
      for (auto& x : phi) x = rng() % B->size();
      std::vector<std::uint64_t> psi(B->size());
      for (auto& x : psi) x = rng() % C->size();
      FunVector u = random_vector(desc, B, rng);
      FunVector v = random_vector(desc, B, rng);
      report.record(
          "pullback-additive",
          equal(pullback(A, phi, pointwise(Pointwise::Add, u, v)),
                pointwise(Pointwise::Add, pullback(A, phi, u), pullback(A, phi, v))),
          witness);
      report.record(
          "pullback-multiplicative",
          equal(pullback(A, phi, pointwise(Pointwise::Mul, u, v)),
                pointwise(Pointwise::Mul, pullback(A, phi, u), pullback(A, phi, v))),
          witness);
      FunVector w = random_vector(desc, C, rng);
      std::vector<std::uint64_t> comp(A->size());
      for (std::uint64_t i = 0; i < A->size(); ++i) comp[i] = psi[phi[i]];
      report.record("pullback-functorial",
                    equal(pullback(A, comp, w), pullback(A, phi, pullback(B, psi, w))),
                    witness);
    }
  }
  return report;
}

}  // namespace postft::fv
