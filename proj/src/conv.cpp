#include "postft/conv.hpp"

#include <nlohmann/json.hpp>

#include "postft/error.hpp"

namespace postft::conv {

namespace {

void require_compatible(const ConvElement& a, const ConvElement& b) {
  if (a.cat.get() != b.cat.get())
    fail(ErrorKind::InvalidArgument, "convolution elements over different categories");
  if (a.desc != b.desc)
    fail(ErrorKind::DescriptorMismatch, "convolution elements over different carriers");
}

// The lazy composition unit materializes over table categories (all
// identities) and over monoids (chi_{id_I}); elsewhere it only exists as the
// special-cased operand of comp_product.
ConvElement materialize_unit_c(const ConvElement& u) {
  ConvElement out = zero(u.cat, u.desc);
  if (u.cat->is_monoid()) {
    set(out, u.cat->unit_identity(), sr::one(u.desc));
    return out;
  }
  if (!u.cat->is_table())
    fail(ErrorKind::UnsupportedEnumeration,
         "composition unit has infinite support in " + u.cat->name());
  for (Obj x : u.cat->objects()) set(out, u.cat->identity(x), sr::one(u.desc));
  return out;
}

ConvElement concretize(const ConvElement& f) {
  return f.comp_unit ? materialize_unit_c(f) : f;
}

}  // namespace

ConvElement zero(CategoryPtr cat, const SemiringDescriptor& desc) {
  return {std::move(cat), desc, {}, false};
}

ConvElement characteristic(CategoryPtr cat, const SemiringDescriptor& desc,
                           const Mor& gamma) {
  if (!cat->contains(gamma))
    fail(ErrorKind::InvalidArgument, "morphism not in category " + cat->name());
  ConvElement f = zero(std::move(cat), desc);
  f.vals.emplace(gamma, sr::one(desc));
  return f;
}

ConvElement unit_m(CategoryPtr cat, const SemiringDescriptor& desc) {
  Mor id_i = cat->unit_identity();
  return characteristic(std::move(cat), desc, id_i);
}

ConvElement unit_c(CategoryPtr cat, const SemiringDescriptor& desc) {
  ConvElement f = zero(std::move(cat), desc);
  f.comp_unit = true;
  return f;
}

void set(ConvElement& f, const Mor& gamma, SemiringElement v) {
  if (!f.cat->contains(gamma))
    fail(ErrorKind::InvalidArgument, "morphism not in category " + f.cat->name());
  sr::require_conforms(f.desc, v);
  if (sr::is_zero(f.desc, v))
    f.vals.erase(gamma);
  else
    f.vals.insert_or_assign(gamma, std::move(v));
}

SemiringElement at(const ConvElement& f, const Mor& gamma) {
  if (f.comp_unit)
    return gamma == f.cat->identity(f.cat->dom(gamma)) ? sr::one(f.desc)
                                                       : sr::zero(f.desc);
  auto it = f.vals.find(gamma);
  return it != f.vals.end() ? it->second : sr::zero(f.desc);
}

bool is_zero(const ConvElement& f) { return !f.comp_unit && f.vals.empty(); }

bool equal(const ConvElement& a, const ConvElement& b) {
  require_compatible(a, b);
  if (a.comp_unit || b.comp_unit) {
    if (a.comp_unit && b.comp_unit) return true;
    return concretize(a).vals == concretize(b).vals;
  }
  return a.vals == b.vals;
}

ConvElement add(const ConvElement& f, const ConvElement& g) {
  require_compatible(f, g);
  ConvElement a = concretize(f);
  const ConvElement b = concretize(g);
  for (const auto& [m, v] : b.vals) {
    auto it = a.vals.find(m);
    if (it == a.vals.end()) {
      a.vals.emplace(m, v);
    } else {
      SemiringElement s = sr::add(a.desc, it->second, v);
      if (sr::is_zero(a.desc, s))
        a.vals.erase(it);
      else
        it->second = std::move(s);
    }
  }
  return a;
}

ConvElement sum(CategoryPtr cat, const SemiringDescriptor& desc,
                std::span<const ConvElement> family) {
  ConvElement acc = zero(std::move(cat), desc);
  for (const auto& f : family) acc = add(acc, f);
  return acc;
}

namespace {

// Shared accumulation: iterate both supports in sorted order, keep per-key
// term order deterministic.
template <class Pairing>
ConvElement convolve(const ConvElement& f, const ConvElement& g, Pairing&& pair_to) {
  require_compatible(f, g);
  ConvElement out = zero(f.cat, f.desc);
  for (const auto& [alpha, fa] : f.vals)
    for (const auto& [beta, gb] : g.vals) {
      auto gamma = pair_to(alpha, beta);
      if (!gamma) continue;
      // The convolution formulae multiply g(beta) * f(alpha) in S.
      SemiringElement term = sr::mul(f.desc, gb, fa);
      if (sr::is_zero(f.desc, term)) continue;
      auto it = out.vals.find(*gamma);
      if (it == out.vals.end()) {
        out.vals.emplace(*gamma, std::move(term));
      } else {
        SemiringElement s = sr::add(f.desc, it->second, term);
        if (sr::is_zero(f.desc, s))
          out.vals.erase(it);
        else
          it->second = std::move(s);
      }
    }
  return out;
}

}  // namespace

ConvElement comp_product(const ConvElement& f, const ConvElement& g) {
  require_compatible(f, g);
  if (f.comp_unit) return g.comp_unit ? f : g;
  if (g.comp_unit) return f;
  const Category& cat = *f.cat;
  return convolve(f, g, [&cat](const Mor& alpha, const Mor& beta) {
    return cat.compose(beta, alpha);  // beta o alpha
  });
}

ConvElement mon_product(const ConvElement& f, const ConvElement& g) {
  require_compatible(f, g);
  ConvElement a = concretize(f);
  ConvElement b = concretize(g);
  const Category& cat = *a.cat;
  return convolve(a, b, [&cat](const Mor& alpha, const Mor& beta) {
    return std::optional<Mor>(cat.tensor(alpha, beta));
  });
}

nlohmann::json to_json(const ConvElement& f) {
  nlohmann::json arr = nlohmann::json::array();
  ConvElement c = concretize(f);
  for (const auto& [m, v] : c.vals)
    arr.push_back({c.cat->mor_name(m), sr::element_to_json(c.desc, v)});
  return arr;
}

ConvElement from_json(CategoryPtr cat, const SemiringDescriptor& desc,
                      const nlohmann::json& j) {
  ConvElement f = zero(std::move(cat), desc);
  for (const auto& entry : j)
    set(f, f.cat->mor_from_name(entry.at(0).get<std::string>()),
        sr::element_from_json(desc, entry.at(1)));
  return f;
}

namespace {

ConvElement random_element(CategoryPtr cat, const SemiringDescriptor& desc,
                           std::mt19937_64& rng) {
  ConvElement f = zero(std::move(cat), desc);
  auto n = rng() % 4;
  for (std::uint64_t i = 0; i < n; ++i)
    set(f, f.cat->sample_morphism(rng), sr::sample(desc, rng));
  return f;
}

std::string render(const ConvElement& f) {
  std::string s = "{";
  for (const auto& [m, v] : f.vals)
    s += f.cat->mor_name(m) + ":" + sr::to_string(f.desc, v) + " ";
  return s + "}";
}

// Table-driven oracle: loop over every morphism and every factorization pair.
ConvElement table_product(const ConvElement& f, const ConvElement& g, FactorMode mode) {
  ConvElement out = zero(f.cat, f.desc);
  for (const Mor& gamma : f.cat->morphisms()) {
    SemiringElement acc = sr::zero(f.desc);
    for (const auto& [x, y] : factorizations(*f.cat, gamma, mode)) {
      // Comp mode returns (beta, alpha) with beta o alpha = gamma; tensor
      // mode returns (alpha, beta) with alpha (x) beta = gamma.
      const Mor& alpha = mode == FactorMode::Comp ? y : x;
      const Mor& beta = mode == FactorMode::Comp ? x : y;
      acc = sr::add(f.desc, acc, sr::mul(f.desc, at(g, beta), at(f, alpha)));
    }
    set(out, gamma, acc);
  }
  return out;
}

}  // namespace

LawReport check_conv_laws(CategoryPtr cat, const SemiringDescriptor& desc,
                          int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawReport report;
  report.subject = "conv/" + cat->name() + "/" + carrier_name(desc.carrier);

  ConvElement one_m = unit_m(cat, desc);
  bool unit_c_available = cat->is_table() || cat->is_monoid();

  for (int it = 0; it < samples; ++it) {
    ConvElement a = random_element(cat, desc, rng);
    ConvElement b = random_element(cat, desc, rng);
    ConvElement c = random_element(cat, desc, rng);
    auto witness = [&]() { return "a=" + render(a) + " b=" + render(b); };

    report.record("q-add-commutative", equal(add(a, b), add(b, a)), witness);
    report.record("q-comp-associative",
                  equal(comp_product(comp_product(a, b), c),
                        comp_product(a, comp_product(b, c))),
                  witness);
    report.record("q-mon-associative",
                  equal(mon_product(mon_product(a, b), c),
                        mon_product(a, mon_product(b, c))),
                  witness);
    report.record("q-mon-unit",
                  equal(mon_product(a, one_m), a) && equal(mon_product(one_m, a), a),
                  witness);
    if (unit_c_available) {
      ConvElement one_c = unit_c(cat, desc);
      report.record("q-comp-unit",
                    equal(comp_product(a, one_c), a) && equal(comp_product(one_c, a), a),
                    witness);
    }
    report.record("q-comp-distributes",
                  equal(comp_product(a, add(b, c)),
                        add(comp_product(a, b), comp_product(a, c))) &&
                      equal(comp_product(add(b, c), a),
                            add(comp_product(b, a), comp_product(c, a))),
                  witness);
    report.record("q-mon-distributes",
                  equal(mon_product(a, add(b, c)),
                        add(mon_product(a, b), mon_product(a, c))) &&
                      equal(mon_product(add(b, c), a),
                            add(mon_product(b, a), mon_product(c, a))),
                  witness);
    report.record("q-zero-absorbing",
                  is_zero(comp_product(a, zero(cat, desc))) &&
                      is_zero(mon_product(zero(cat, desc), a)),
                  witness);

    if (cat->is_table()) {
      report.record("support-vs-table-comp",
                    equal(comp_product(a, b), table_product(a, b, FactorMode::Comp)),
                    witness);
      report.record("support-vs-table-mon",
                    equal(mon_product(a, b), table_product(a, b, FactorMode::Tensor)),
                    witness);
    }

    if (cat->is_monoid()) {
      ConvElement d = random_element(cat, desc, rng);
      report.record("abcd-compatibility",
                    equal(comp_product(mon_product(a, b), mon_product(c, d)),
                          mon_product(comp_product(a, c), comp_product(b, d))),
                    witness);
    }
  }

  // The two-object witness: over the arrow category the composition product
  // is noncommutative even though the ground semiring is.
  {
    auto arrow = arrow_category();
    auto bool_desc = SemiringDescriptor::boolean();
    ConvElement f = zero(arrow, bool_desc);
    set(f, arrow->mor_from_name("gamma"), sr::boolean(true));
    ConvElement g = zero(arrow, bool_desc);
    set(g, arrow->mor_from_name("idY"), sr::boolean(true));
    Mor gamma = arrow->mor_from_name("gamma");
    bool witness_found = at(comp_product(f, g), gamma) == sr::boolean(true) &&
                         at(comp_product(g, f), gamma) == sr::boolean(false);
    report.record("noncommutativity-witness", witness_found,
                  [] { return std::string("(f.g)(gamma), (g.f)(gamma)"); });
  }
  return report;
}

}  // namespace postft::conv
