#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "postft/number.hpp"

namespace postft {

// The built-in Eilenberg-complete carriers.
enum class Carrier {
  Boolean,
  NatInf,          // naturals with a saturating infinity
  RatInf,          // nonnegative exact rationals with infinity
  TropicalMinPlus, // (min, +), additive unit +inf
  ArcticMaxPlus,   // (max, +), additive unit -inf
  Language,        // finite word sets over a finite alphabet, (union, concat)
  Relation,        // binary relations over a finite base, (union, composition)
  Matrix,          // square matrices over an inner carrier
};

const char* carrier_name(Carrier c);

struct SemiringDescriptor {
  Carrier carrier = Carrier::Boolean;
  std::vector<std::string> alphabet;  // Language: nonempty, single-char symbols
  std::vector<std::string> base;      // Relation: nonempty
  int dim = 0;                        // Matrix: >= 1
  std::shared_ptr<const SemiringDescriptor> inner;  // Matrix

  static SemiringDescriptor boolean() { return {Carrier::Boolean, {}, {}, 0, nullptr}; }
  static SemiringDescriptor nat_inf() { return {Carrier::NatInf, {}, {}, 0, nullptr}; }
  static SemiringDescriptor rat_inf() { return {Carrier::RatInf, {}, {}, 0, nullptr}; }
  static SemiringDescriptor tropical() { return {Carrier::TropicalMinPlus, {}, {}, 0, nullptr}; }
  static SemiringDescriptor arctic() { return {Carrier::ArcticMaxPlus, {}, {}, 0, nullptr}; }
  static SemiringDescriptor language(std::vector<std::string> sigma);
  static SemiringDescriptor relation(std::vector<std::string> base_set);
  static SemiringDescriptor matrix(int dim, SemiringDescriptor inner_desc);

  // Additive idempotency (entrywise for matrices); drives the repeat law.
  bool additively_idempotent() const;
};

bool operator==(const SemiringDescriptor& a, const SemiringDescriptor& b);
inline bool operator!=(const SemiringDescriptor& a, const SemiringDescriptor& b) {
  return !(a == b);
}

struct SemiringElement;
using Words = std::set<std::string>;
using RelPairs = std::set<std::pair<int, int>>;
using Cells = std::vector<SemiringElement>;  // row-major dim*dim

struct SemiringElement {
  Carrier carrier = Carrier::Boolean;
  std::variant<bool, XNum, Words, RelPairs, Cells> payload;

  friend bool operator==(const SemiringElement&, const SemiringElement&);
  friend bool operator<(const SemiringElement&, const SemiringElement&);
};

namespace sr {

// Constructors; every element is canonical on construction (rationals in
// lowest terms via cpp_rational, sets deduplicated by std::set).
SemiringElement zero(const SemiringDescriptor& d);
SemiringElement one(const SemiringDescriptor& d);
SemiringElement boolean(bool b);
SemiringElement nat(Int n);
SemiringElement nat_infinity();
SemiringElement rational(Rat q);
SemiringElement rat_infinity();
SemiringElement tropical(Rat q);
SemiringElement tropical_zero();  // +inf
SemiringElement arctic(Rat q);
SemiringElement arctic_zero();  // -inf
SemiringElement arctic_top();   // +inf
SemiringElement language(const SemiringDescriptor& d, Words w);
SemiringElement relation(const SemiringDescriptor& d, RelPairs p);
SemiringElement matrix(const SemiringDescriptor& d, Cells entries);

bool conforms(const SemiringDescriptor& d, const SemiringElement& a);
void require_conforms(const SemiringDescriptor& d, const SemiringElement& a);

bool is_zero(const SemiringDescriptor& d, const SemiringElement& a);

SemiringElement add(const SemiringDescriptor& d, const SemiringElement& a,
                    const SemiringElement& b);
SemiringElement mul(const SemiringDescriptor& d, const SemiringElement& a,
                    const SemiringElement& b);

// The summation law applied to a finite family; empty -> zero.
SemiringElement sum(const SemiringDescriptor& d,
                    std::span<const SemiringElement> family);

// The summation law applied to a constant family of `count` copies of `a`.
SemiringElement repeat(const SemiringDescriptor& d, const Count& count,
                       const SemiringElement& a);

std::string to_string(const SemiringDescriptor& d, const SemiringElement& a);

nlohmann::json descriptor_to_json(const SemiringDescriptor& d);
SemiringDescriptor descriptor_from_json(const nlohmann::json& j);
nlohmann::json element_to_json(const SemiringDescriptor& d, const SemiringElement& a);
SemiringElement element_from_json(const SemiringDescriptor& d, const nlohmann::json& j);

// Deterministic bounded sampler for the law suites.
SemiringElement sample(const SemiringDescriptor& d, std::mt19937_64& rng);

}  // namespace sr

}  // namespace postft
