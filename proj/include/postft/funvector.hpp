#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "postft/groundset.hpp"
#include "postft/laws.hpp"
#include "postft/semiring.hpp"

namespace postft {

// Sparse finitely supported map GroundSet -> V with implicit zero. The value
// type is generic: the module-level API instantiates it with SemiringElement,
// the engine instantiates it with convolution-semiring elements.
template <class V>
struct FunVec {
  GroundSetPtr dom;
  std::map<std::uint64_t, V> vals;
};

namespace fvg {

template <class V, class IsZero>
void set_entry(FunVec<V>& f, std::uint64_t key, V value, IsZero&& is_zero) {
  if (key >= f.dom->size()) fail(ErrorKind::GroundSetMismatch, "key out of range");
  if (is_zero(value))
    f.vals.erase(key);
  else
    f.vals.insert_or_assign(key, std::move(value));
}

template <class V, class Add, class IsZero>
FunVec<V> pointwise_add(const FunVec<V>& f, const FunVec<V>& g, Add&& add,
                        IsZero&& is_zero) {
  if (!same_ground_set(*f.dom, *g.dom))
    fail(ErrorKind::GroundSetMismatch, "pointwise add on different ground sets");
  FunVec<V> out{f.dom, f.vals};
  for (const auto& [k, v] : g.vals) {
    auto it = out.vals.find(k);
    if (it == out.vals.end()) {
      out.vals.emplace(k, v);
    } else {
      V s = add(it->second, v);
      if (is_zero(s))
        out.vals.erase(it);
      else
        it->second = std::move(s);
    }
  }
  return out;
}

template <class V, class Mul, class IsZero>
FunVec<V> pointwise_mul(const FunVec<V>& f, const FunVec<V>& g, Mul&& mul,
                        IsZero&& is_zero) {
  if (!same_ground_set(*f.dom, *g.dom))
    fail(ErrorKind::GroundSetMismatch, "pointwise mul on different ground sets");
  FunVec<V> out{f.dom, {}};
  for (const auto& [k, v] : f.vals) {
    auto it = g.vals.find(k);
    if (it == g.vals.end()) continue;
    V p = mul(v, it->second);
    if (!is_zero(p)) out.vals.emplace(k, std::move(p));
  }
  return out;
}

// Contravariant pullback along a total map A -> B given as a key table.
template <class V>
FunVec<V> pullback(GroundSetPtr domain_a, const std::vector<std::uint64_t>& map,
                   const FunVec<V>& g) {
  if (map.size() != domain_a->size())
    fail(ErrorKind::GroundSetMismatch, "map not total on domain");
  FunVec<V> out{domain_a, {}};
  for (std::uint64_t a = 0; a < map.size(); ++a) {
    if (map[a] >= g.dom->size())
      fail(ErrorKind::GroundSetMismatch, "map value outside codomain");
    auto it = g.vals.find(map[a]);
    if (it != g.vals.end()) out.vals.emplace(a, it->second);
  }
  return out;
}

// Left-associative flattening: the result's factor list concatenates the
// operands' factor lists while it fits the 2..4 bound, and nests otherwise.
inline GroundSetPtr tensor_domain(const GroundSetPtr& a, const GroundSetPtr& b) {
  std::vector<GroundSetPtr> factors;
  auto push = [&](const GroundSetPtr& g) {
    if (g->is_atom())
      factors.push_back(g);
    else
      for (const auto& f : g->factors()) factors.push_back(f);
  };
  push(a);
  push(b);
  if (factors.size() <= 4) return GroundSet::product(std::move(factors));
  return GroundSet::product({a, b});
}

template <class V, class Mul, class IsZero>
FunVec<V> tensor(const FunVec<V>& f, const FunVec<V>& g, Mul&& mul, IsZero&& is_zero) {
  FunVec<V> out{tensor_domain(f.dom, g.dom), {}};
  for (const auto& [ka, va] : f.vals)
    for (const auto& [kb, vb] : g.vals) {
      V p = mul(va, vb);
      if (!is_zero(p)) out.vals.emplace(ka * g.dom->size() + kb, std::move(p));
    }
  return out;
}

// Contraction over the repeated middle factor of a 4-factor product
// (A,B,B,C) -> (A,C): out(a,c) = sum_b F(a,b,b,c).
template <class V, class Add, class IsZero>
FunVec<V> contract(const FunVec<V>& f, Add&& add, IsZero&& is_zero) {
  if (f.dom->is_atom() || f.dom->factors().size() != 4)
    fail(ErrorKind::GroundSetMismatch, "contraction needs a 4-factor product");
  const auto& fac = f.dom->factors();
  if (!same_ground_set(*fac[1], *fac[2]))
    fail(ErrorKind::GroundSetMismatch, "middle factors differ");
  FunVec<V> out{GroundSet::product({fac[0], fac[3]}), {}};
  for (const auto& [k, v] : f.vals) {
    auto parts = f.dom->split_key(k);
    if (parts[1] != parts[2]) continue;
    std::uint64_t key = parts[0] * fac[3]->size() + parts[3];
    auto it = out.vals.find(key);
    if (it == out.vals.end()) {
      out.vals.emplace(key, v);
    } else {
      V s = add(it->second, v);
      if (is_zero(s))
        out.vals.erase(it);
      else
        it->second = std::move(s);
    }
  }
  return out;
}

// Inner product <f,g>(a,c) = sum_b f(a,b) * g(b,c) for f on (A,B), g on (B,C).
template <class V, class Mul, class Add, class IsZero>
FunVec<V> inner(const FunVec<V>& f, const FunVec<V>& g, Mul&& mul, Add&& add,
                IsZero&& is_zero) {
  if (f.dom->is_atom() || g.dom->is_atom() || f.dom->factors().size() != 2 ||
      g.dom->factors().size() != 2)
    fail(ErrorKind::GroundSetMismatch, "inner product needs 2-factor operands");
  const auto& fa = f.dom->factors();
  const auto& ga = g.dom->factors();
  if (!same_ground_set(*fa[1], *ga[0]))
    fail(ErrorKind::GroundSetMismatch, "middle factors differ");
  FunVec<V> out{GroundSet::product({fa[0], ga[1]}), {}};
  for (const auto& [kf, vf] : f.vals) {
    std::uint64_t a = kf / fa[1]->size();
    std::uint64_t b = kf % fa[1]->size();
    for (const auto& [kg, vg] : g.vals) {
      if (kg / ga[1]->size() != b) continue;
      std::uint64_t c = kg % ga[1]->size();
      V p = mul(vf, vg);
      if (is_zero(p)) continue;
      std::uint64_t key = a * ga[1]->size() + c;
      auto it = out.vals.find(key);
      if (it == out.vals.end()) {
        out.vals.emplace(key, std::move(p));
      } else {
        V s = add(it->second, p);
        if (is_zero(s))
          out.vals.erase(it);
        else
          it->second = std::move(s);
      }
    }
  }
  return out;
}

}  // namespace fvg

// SemiringElement-valued function vectors: the module-level surface.
struct FunVector {
  SemiringDescriptor desc;
  GroundSetPtr dom;
  std::map<std::uint64_t, SemiringElement> vals;
};

namespace fv {

FunVector make(const SemiringDescriptor& desc, GroundSetPtr dom);
FunVector characteristic(const SemiringDescriptor& desc, GroundSetPtr dom,
                         std::uint64_t key);
void set(FunVector& f, std::uint64_t key, SemiringElement v);
SemiringElement at(const FunVector& f, std::uint64_t key);
bool equal(const FunVector& a, const FunVector& b);

enum class Pointwise { Add, Mul };
FunVector pointwise(Pointwise kind, const FunVector& f, const FunVector& g);
FunVector pullback(GroundSetPtr domain_a, const std::vector<std::uint64_t>& map,
                   const FunVector& g);
FunVector tensor(const FunVector& f, const FunVector& g);
FunVector contract(const FunVector& f);
FunVector inner(const FunVector& f, const FunVector& g);

using InnerFn = std::function<FunVector(const FunVector&, const FunVector&)>;

// Randomized checks of contraction associativity, bilinearity, unitors, the
// braiding/associator coherence, and morphism behaviour of pullbacks; an
// override slots in a corrupted contraction as a negative control.
LawReport check_fun_laws(const SemiringDescriptor& desc, int sample_count,
                         std::uint64_t seed, InnerFn inner_override = {});

}  // namespace fv

}  // namespace postft
