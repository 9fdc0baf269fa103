#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "postft/moncat.hpp"
#include "postft/semiring.hpp"

namespace postft {

// A field is a canonical integer encoding whose meaning belongs to the model:
// per-component or per-vertex grid indices for graph labelings, multiplicity
// tuples for multisubsets, subset masks for configuration fields. Fields on
// closed objects are fixed-length tuples (one slot per boundary point).
struct Field {
  std::vector<int> v;
  auto operator<=>(const Field&) const = default;
};

// --- combinatorial bordism carriers -----------------------------------------

struct GraphBordism {
  int n = 0;                              // vertices 0..n-1
  std::vector<std::pair<int, int>> edges; // normalized a<b, sorted, unique
  std::vector<int> in, out;               // disjoint degree-1 vertex lists
};

struct MultisetBordism {
  std::vector<std::pair<std::int64_t, int>> primes;  // sorted, multiplicity >= 1
};

struct PolyaContext;  // group action data, shared by all bordisms of an instance

struct PolyaBordism {
  std::shared_ptr<const PolyaContext> ctx;
  std::vector<int> subset;  // sorted indices into the ambient coloring set
};

struct CatalogBordism {
  std::vector<std::string> in, out;
  std::int64_t sigma = 0;
};

using Bordism = std::variant<GraphBordism, MultisetBordism, PolyaBordism, CatalogBordism>;

struct GraphClosed {
  int points = 0;
};
struct EmptyClosed {};
struct CatalogClosed {
  std::vector<std::string> labels;
};

using Closed = std::variant<GraphClosed, EmptyClosed, CatalogClosed>;

bool closed_equal(const Closed& a, const Closed& b);

// A model homeomorphism, encoded as an index bijection whose meaning belongs
// to the model (vertex map, prime-slot map, coloring map, ...).
struct Homeo {
  std::vector<int> map;
};

// Boundary restriction of a bordism homeomorphism: point bijections on the
// incoming and outgoing closed pieces.
struct BoundaryMaps {
  std::vector<int> in_map, out_map;
};

// --- the bordism model contract ---------------------------------------------

class BordismModel {
 public:
  virtual ~BordismModel() = default;
  virtual std::string name() const = 0;

  virtual Closed in_boundary(const Bordism&) const = 0;
  virtual Closed out_boundary(const Bordism&) const = 0;
  virtual Closed empty_closed() const = 0;
  virtual Closed closed_union(const Closed&, const Closed&) const = 0;

  virtual Bordism disjoint_union(const Bordism&, const Bordism&) const = 0;
  // Positional gluing of out(W') onto in(W''); empty when illegal.
  virtual std::optional<Bordism> glue(const Bordism& w1, const Bordism& w2) const = 0;
  virtual std::optional<Bordism> cylinder(const Closed&) const = 0;
  // The three bordism readings of the cylinder on M: (M -> M),
  // (empty -> M u M) and (M u M -> empty).
  virtual std::optional<std::array<Bordism, 3>> cylinder_bends(const Closed&) const;

  // Pieces are the model's codimension-0 parts (components, prime slots,
  // configuration elements); subsets of them form subbordisms.
  virtual int piece_count(const Bordism&) const = 0;
  virtual Bordism sub_bordism(const Bordism&, const std::vector<int>& pieces) const = 0;
  // Positions of the subbordism's boundary points inside the ambient in/out.
  virtual std::pair<std::vector<int>, std::vector<int>> sub_boundary_positions(
      const Bordism&, const std::vector<int>& pieces) const = 0;

  // Boundary-preserving model isomorphisms W -> W2.
  virtual std::vector<Homeo> isomorphisms(const Bordism& w, const Bordism& w2) const = 0;
  virtual BoundaryMaps boundary_maps(const Homeo&, const Bordism& w,
                                     const Bordism& w2) const = 0;

  virtual Bordism sample_bordism(std::mt19937_64& rng) const = 0;
  virtual std::pair<Bordism, Bordism> sample_glue_pair(std::mt19937_64& rng) const = 0;
  virtual Closed sample_closed(std::mt19937_64& rng) const = 0;

  virtual nlohmann::json render_bordism(const Bordism&) const = 0;
  virtual Bordism parse_bordism(const nlohmann::json&) const = 0;
};

// --- the system-of-fields contract ------------------------------------------

class FieldsSystem {
 public:
  virtual ~FieldsSystem() = default;
  virtual std::string name() const = 0;

  virtual std::vector<Field> fields_on_bordism(const Bordism&) const = 0;
  // Lexicographic over boundary points; disjoint unions enumerate as ordered
  // pairs, which realizes the FDISJ bijection by index arithmetic.
  virtual std::vector<Field> fields_on_closed(const Closed&) const = 0;
  virtual int closed_field_len(const Closed&) const = 0;

  virtual std::pair<Field, Field> restrict_to_boundary(const Bordism&,
                                                       const Field&) const = 0;
  virtual Field restrict_to_sub(const Bordism&, const Field&,
                                const std::vector<int>& pieces) const = 0;

  virtual Field pullback(const Homeo&, const Bordism& w, const Bordism& w2,
                         const Field& on_w2) const = 0;

  // FDISJ: split and join across the model's ordered disjoint union.
  virtual std::pair<Field, Field> split_union(const Bordism& w, const Bordism& w2,
                                              const Field& on_union) const = 0;
  virtual Field join_union(const Bordism& w, const Bordism& w2, const Field& f,
                           const Field& f2) const = 0;

  // FGLUE: the bijection F(W) <-> F(W') x_{F(N)} F(W'').
  virtual std::optional<Field> glue_fields(const Bordism& w1, const Bordism& w2,
                                           const Field& f1, const Field& f2) const = 0;
  virtual std::pair<Field, Field> unglue_fields(const Bordism& w1, const Bordism& w2,
                                                const Field& glued) const = 0;

  // Partition of fields_on_closed(M) into isotopy classes; singletons unless
  // the instance declares a coarser partition.
  virtual std::vector<std::vector<int>> isotopy_classes(const Closed& M) const;

  virtual nlohmann::json render_field(const Field&) const;
};

// --- the action-exponential contract ----------------------------------------

class ActionSystem {
 public:
  virtual ~ActionSystem() = default;
  virtual CategoryPtr category() const = 0;
  virtual Mor act(const Bordism& W, const Field& F) const = 0;
};

struct TftInstance {
  std::string name;
  SemiringDescriptor ground;
  CategoryPtr cat;
  std::shared_ptr<const BordismModel> model;
  std::shared_ptr<const FieldsSystem> fields;
  std::shared_ptr<const ActionSystem> action;
  // Model homeomorphisms include no subdivision moves, so cylinder
  // idempotency and projection-fixes-state-sums hold only for field systems
  // that cannot see subdivision; instances declare that here.
  bool subdivision_invariant = true;
};

}  // namespace postft
