#pragma once

#include <map>
#include <span>

#include <nlohmann/json_fwd.hpp>

#include "postft/moncat.hpp"
#include "postft/semiring.hpp"

namespace postft {

// Element of Q_S(C): a finite-support function Mor(C) -> S. The bigrading by
// (dom, cod) pairs is implicit in the morphism keys. `comp_unit` marks the
// identity-supported unit of the composition semiring without materializing
// it (its support is infinite in rule-form categories with many objects).
struct ConvElement {
  CategoryPtr cat;
  SemiringDescriptor desc;
  std::map<Mor, SemiringElement> vals;
  bool comp_unit = false;
};

namespace conv {

ConvElement zero(CategoryPtr cat, const SemiringDescriptor& desc);
ConvElement characteristic(CategoryPtr cat, const SemiringDescriptor& desc,
                           const Mor& gamma);
ConvElement unit_m(CategoryPtr cat, const SemiringDescriptor& desc);  // chi_{id_I}
ConvElement unit_c(CategoryPtr cat, const SemiringDescriptor& desc);  // lazy

void set(ConvElement& f, const Mor& gamma, SemiringElement v);
SemiringElement at(const ConvElement& f, const Mor& gamma);
bool is_zero(const ConvElement& f);
bool equal(const ConvElement& a, const ConvElement& b);

ConvElement add(const ConvElement& f, const ConvElement& g);
ConvElement sum(CategoryPtr cat, const SemiringDescriptor& desc,
                std::span<const ConvElement> family);

// Composition product: (f . g)(gamma) = sum_{beta o alpha = gamma}
// g(beta) * f(alpha), computed support-driven over the operands.
ConvElement comp_product(const ConvElement& f, const ConvElement& g);

// Monoidal product: (f x g)(gamma) = sum_{alpha (x) beta = gamma}
// g(beta) * f(alpha), support-driven.
ConvElement mon_product(const ConvElement& f, const ConvElement& g);

nlohmann::json to_json(const ConvElement& f);
ConvElement from_json(CategoryPtr cat, const SemiringDescriptor& desc,
                      const nlohmann::json& j);

// Randomized law suite for both semiring structures on Q_S(C): semiring
// axioms for . and x, oracle equivalence of support-driven vs table-driven
// convolution on table categories, abcd-compatibility on one-object
// categories, and the two-object noncommutativity witness.
LawReport check_conv_laws(CategoryPtr cat, const SemiringDescriptor& desc,
                          int samples, std::uint64_t seed);

}  // namespace conv

}  // namespace postft
