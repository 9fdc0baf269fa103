#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "postft/laws.hpp"
#include "postft/number.hpp"

namespace postft {

using Obj = std::int64_t;  // table object index / matrix dimension / 0 for monoids

// Exact rational matrix, a morphism from dimension `cols` to dimension `rows`.
struct MatMor {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<Rat> a;  // row-major

  Rat& at(std::int64_t i, std::int64_t j) { return a[static_cast<size_t>(i * cols + j)]; }
  const Rat& at(std::int64_t i, std::int64_t j) const {
    return a[static_cast<size_t>(i * cols + j)];
  }
  static MatMor identity(std::int64_t d);
  static MatMor zero(std::int64_t rows, std::int64_t cols);

  friend bool operator==(const MatMor&, const MatMor&) = default;
  friend bool operator<(const MatMor& x, const MatMor& y) {
    if (x.rows != y.rows) return x.rows < y.rows;
    if (x.cols != y.cols) return x.cols < y.cols;
    return x.a < y.a;
  }
};

MatMor mat_mul(const MatMor& later, const MatMor& earlier);
MatMor mat_kron(const MatMor& x, const MatMor& y);

// A morphism: table id, integer label, grid value, or a matrix; always
// interpreted relative to its category.
struct Mor {
  std::variant<std::int64_t, Rat, MatMor> v;

  static Mor id(std::int64_t i) { return {i}; }
  static Mor grid(Rat q) { return {std::move(q)}; }
  static Mor mat(MatMor m) { return {std::move(m)}; }

  std::int64_t table_id() const { return std::get<std::int64_t>(v); }
  const Rat& grid_value() const { return std::get<Rat>(v); }
  const MatMor& matrix() const { return std::get<MatMor>(v); }

  friend bool operator==(const Mor&, const Mor&) = default;
  friend bool operator<(const Mor& x, const Mor& y) { return x.v < y.v; }
};

// A small strict monoidal category, table form (finite, enumerable) or rule
// form (compose/tensor as computed functions; no factorization enumeration).
class Category {
 public:
  virtual ~Category() = default;
  virtual std::string name() const = 0;
  virtual bool is_table() const = 0;
  virtual bool is_monoid() const = 0;  // single object

  virtual Obj dom(const Mor&) const = 0;
  virtual Obj cod(const Mor&) const = 0;
  virtual Mor identity(Obj) const = 0;
  virtual Obj unit_object() const = 0;
  Mor unit_identity() const { return identity(unit_object()); }

  // later o earlier; empty when not composable.
  virtual std::optional<Mor> compose(const Mor& later, const Mor& earlier) const = 0;
  virtual Mor tensor(const Mor&, const Mor&) const = 0;
  virtual Obj tensor_obj(Obj, Obj) const = 0;

  virtual bool contains(const Mor&) const = 0;
  virtual std::string mor_name(const Mor&) const = 0;
  virtual Mor mor_from_name(const std::string&) const;

  // Table form only; rule form raises unsupported-enumeration.
  virtual const std::vector<Mor>& morphisms() const;
  virtual std::vector<Obj> objects() const;

  // Bounded deterministic sampler for law suites.
  virtual Mor sample_morphism(std::mt19937_64& rng) const = 0;
};

using CategoryPtr = std::shared_ptr<const Category>;

struct TableData {
  std::string name;
  std::vector<std::string> objects;
  std::vector<std::string> mor_names;
  std::vector<int> mor_dom, mor_cod;
  std::vector<int> identity_of;                    // per object
  std::map<std::pair<int, int>, int> comp;         // (later, earlier) -> result
  std::vector<std::vector<int>> tensor_obj_table;  // [a][b]
  std::vector<std::vector<int>> tensor_mor_table;  // [a][b]
  int unit = 0;
};

// validate=true runs the axiom suite and rejects broken tables; fixtures for
// negative controls pass validate=false.
CategoryPtr make_table_category(TableData data, bool validate = true);

CategoryPtr integer_monoid_category();
CategoryPtr grid_max_category(int k);  // values {0, 1/k, ..., 1}, tensor = max
CategoryPtr trivial_monoid_category();
CategoryPtr matrix_category();

// One-object category of a commutative monoid given by its multiplication
// table; rejects tables that fail associativity, commutativity or unitality.
CategoryPtr monoid_to_category(const std::string& name,
                               const std::vector<std::string>& elements,
                               const std::vector<std::vector<int>>& table,
                               int unit_index);

CategoryPtr polya_category();  // {1, chi, mu}
CategoryPtr f2_category();     // multiplicative monoid of the 2-element field
CategoryPtr arrow_category();  // two objects X -> Y, tensor with unit X

enum class FactorMode { Comp, Tensor };
std::vector<std::pair<Mor, Mor>> factorizations(const Category& cat, const Mor& gamma,
                                                FactorMode mode);

// CTC / TCT pair sets for fixed xi' and xi''.
struct CtcTct {
  std::vector<std::pair<Mor, Mor>> ctc;
  std::vector<std::pair<Mor, Mor>> tct;
};
CtcTct ctc_tct(const Category& cat, const Mor& gamma, const Mor& xi1, const Mor& xi2);

LawReport check_category_axioms(const Category& cat, int samples, std::uint64_t seed);

nlohmann::json table_to_json(const Category& cat);
CategoryPtr category_from_json(const nlohmann::json& j, bool validate = true);

// Strict monoidal representation into the matrix category.
struct MatrixRep {
  CategoryPtr source;
  std::function<std::int64_t(Obj)> object_dim;
  std::function<MatMor(const Mor&)> morphism_matrix;
};

// Functoriality + strict monoidality checks: identities, composition,
// tensor/Kronecker compatibility, unit object to dimension 1. Exhaustive on
// tables, sampled on rule categories.
LawReport check_matrix_rep(const MatrixRep& rep, int samples, std::uint64_t seed);

}  // namespace postft
