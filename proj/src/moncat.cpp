#include "postft/moncat.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "postft/error.hpp"

namespace postft {

MatMor MatMor::identity(std::int64_t d) {
  MatMor m{d, d, std::vector<Rat>(static_cast<size_t>(d * d), Rat(0))};
  for (std::int64_t i = 0; i < d; ++i) m.at(i, i) = Rat(1);
  return m;
}

MatMor MatMor::zero(std::int64_t rows, std::int64_t cols) {
  return MatMor{rows, cols, std::vector<Rat>(static_cast<size_t>(rows * cols), Rat(0))};
}

MatMor mat_mul(const MatMor& later, const MatMor& earlier) {
  if (later.cols != earlier.rows)
    fail(ErrorKind::InvalidArgument, "matrix dimensions do not compose");
  MatMor out = MatMor::zero(later.rows, earlier.cols);
  for (std::int64_t i = 0; i < later.rows; ++i)
    for (std::int64_t k = 0; k < later.cols; ++k) {
      const Rat& lik = later.at(i, k);
      if (lik == 0) continue;
      for (std::int64_t j = 0; j < earlier.cols; ++j)
        out.at(i, j) += lik * earlier.at(k, j);
    }
  return out;
}

MatMor mat_kron(const MatMor& x, const MatMor& y) {
  MatMor out = MatMor::zero(x.rows * y.rows, x.cols * y.cols);
  for (std::int64_t i1 = 0; i1 < x.rows; ++i1)
    for (std::int64_t j1 = 0; j1 < x.cols; ++j1) {
      const Rat& v = x.at(i1, j1);
      if (v == 0) continue;
      for (std::int64_t i2 = 0; i2 < y.rows; ++i2)
        for (std::int64_t j2 = 0; j2 < y.cols; ++j2)
          out.at(i1 * y.rows + i2, j1 * y.cols + j2) = v * y.at(i2, j2);
    }
  return out;
}

Mor Category::mor_from_name(const std::string& s) const {
  fail(ErrorKind::InvalidInput, "cannot parse morphism '" + s + "' in " + name());
}

const std::vector<Mor>& Category::morphisms() const {
  fail(ErrorKind::UnsupportedEnumeration,
       name() + " is rule-form; morphism enumeration is not supported");
}

std::vector<Obj> Category::objects() const {
  fail(ErrorKind::UnsupportedEnumeration,
       name() + " is rule-form; object enumeration is not supported");
}

namespace {

class TableCategory final : public Category {
 public:
  explicit TableCategory(TableData d) : d_(std::move(d)) {
    for (size_t i = 0; i < d_.mor_names.size(); ++i)
      mors_.push_back(Mor::id(static_cast<std::int64_t>(i)));
  }

  std::string name() const override { return d_.name; }
  bool is_table() const override { return true; }
  bool is_monoid() const override { return d_.objects.size() == 1; }

  Obj dom(const Mor& m) const override { return d_.mor_dom.at(idx(m)); }
  Obj cod(const Mor& m) const override { return d_.mor_cod.at(idx(m)); }
  Mor identity(Obj x) const override {
    return Mor::id(d_.identity_of.at(static_cast<size_t>(x)));
  }
  Obj unit_object() const override { return d_.unit; }

  std::optional<Mor> compose(const Mor& later, const Mor& earlier) const override {
    if (cod(earlier) != dom(later)) return std::nullopt;
    auto it = d_.comp.find({static_cast<int>(idx(later)), static_cast<int>(idx(earlier))});
    if (it == d_.comp.end())
      fail(ErrorKind::InvalidInput, "incomplete composition table in " + d_.name);
    return Mor::id(it->second);
  }

  Mor tensor(const Mor& a, const Mor& b) const override {
    return Mor::id(d_.tensor_mor_table.at(idx(a)).at(idx(b)));
  }
  Obj tensor_obj(Obj a, Obj b) const override {
    return d_.tensor_obj_table.at(static_cast<size_t>(a)).at(static_cast<size_t>(b));
  }

  bool contains(const Mor& m) const override {
    return std::holds_alternative<std::int64_t>(m.v) && m.table_id() >= 0 &&
           m.table_id() < static_cast<std::int64_t>(d_.mor_names.size());
  }
  std::string mor_name(const Mor& m) const override { return d_.mor_names.at(idx(m)); }
  Mor mor_from_name(const std::string& s) const override {
    auto it = std::find(d_.mor_names.begin(), d_.mor_names.end(), s);
    if (it == d_.mor_names.end())
      fail(ErrorKind::InvalidInput, "unknown morphism '" + s + "' in " + d_.name);
    return Mor::id(it - d_.mor_names.begin());
  }

  const std::vector<Mor>& morphisms() const override { return mors_; }
  std::vector<Obj> objects() const override {
    std::vector<Obj> out(d_.objects.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Obj>(i);
    return out;
  }

  Mor sample_morphism(std::mt19937_64& rng) const override {
    return mors_[rng() % mors_.size()];
  }

  const TableData& data() const { return d_; }

 private:
  size_t idx(const Mor& m) const {
    if (!contains(m)) fail(ErrorKind::InvalidInput, "morphism not in " + d_.name);
    return static_cast<size_t>(m.table_id());
  }
  TableData d_;
  std::vector<Mor> mors_;
};

class IntegerMonoidCategory final : public Category {
 public:
  std::string name() const override { return "integer-monoid"; }
  bool is_table() const override { return false; }
  bool is_monoid() const override { return true; }
  Obj dom(const Mor&) const override { return 0; }
  Obj cod(const Mor&) const override { return 0; }
  Mor identity(Obj) const override { return Mor::id(0); }
  Obj unit_object() const override { return 0; }
  std::optional<Mor> compose(const Mor& b, const Mor& a) const override {
    return Mor::id(b.table_id() + a.table_id());
  }
  Mor tensor(const Mor& a, const Mor& b) const override {
    return Mor::id(a.table_id() + b.table_id());
  }
  Obj tensor_obj(Obj, Obj) const override { return 0; }
  bool contains(const Mor& m) const override {
    return std::holds_alternative<std::int64_t>(m.v);
  }
  std::string mor_name(const Mor& m) const override {
    return std::to_string(m.table_id());
  }
  Mor mor_from_name(const std::string& s) const override {
    try {
      return Mor::id(std::stoll(s));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "not an integer morphism: " + s);
    }
  }
  Mor sample_morphism(std::mt19937_64& rng) const override {
    return Mor::id(static_cast<std::int64_t>(rng() % 21) - 10);
  }
};

class GridMaxCategory final : public Category {
 public:
  explicit GridMaxCategory(int k) : k_(k) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "grid needs k >= 1");
  }
  std::string name() const override { return "grid-max-monoid(" + std::to_string(k_) + ")"; }
  bool is_table() const override { return false; }
  bool is_monoid() const override { return true; }
  Obj dom(const Mor&) const override { return 0; }
  Obj cod(const Mor&) const override { return 0; }
  Mor identity(Obj) const override { return Mor::grid(Rat(0)); }
  Obj unit_object() const override { return 0; }
  std::optional<Mor> compose(const Mor& b, const Mor& a) const override {
    return Mor::grid(std::max(b.grid_value(), a.grid_value()));
  }
  Mor tensor(const Mor& a, const Mor& b) const override {
    return Mor::grid(std::max(a.grid_value(), b.grid_value()));
  }
  Obj tensor_obj(Obj, Obj) const override { return 0; }
  bool contains(const Mor& m) const override {
    if (!std::holds_alternative<Rat>(m.v)) return false;
    const Rat& q = m.grid_value();
    Rat scaled = q * Rat(k_);
    return q >= 0 && q <= 1 && denominator(scaled) == 1;
  }
  std::string mor_name(const Mor& m) const override {
    return rat_to_string(m.grid_value());
  }
  Mor mor_from_name(const std::string& s) const override {
    return Mor::grid(rat_from_string(s));
  }
  Mor sample_morphism(std::mt19937_64& rng) const override {
    return Mor::grid(Rat(Int(rng() % (k_ + 1)), Int(k_)));
  }

 private:
  int k_;
};

class MatrixCategory final : public Category {
 public:
  std::string name() const override { return "matrix-category"; }
  bool is_table() const override { return false; }
  bool is_monoid() const override { return false; }
  Obj dom(const Mor& m) const override { return m.matrix().cols; }
  Obj cod(const Mor& m) const override { return m.matrix().rows; }
  Mor identity(Obj d) const override { return Mor::mat(MatMor::identity(d)); }
  Obj unit_object() const override { return 1; }
  std::optional<Mor> compose(const Mor& b, const Mor& a) const override {
    if (b.matrix().cols != a.matrix().rows) return std::nullopt;
    return Mor::mat(mat_mul(b.matrix(), a.matrix()));
  }
  Mor tensor(const Mor& a, const Mor& b) const override {
    return Mor::mat(mat_kron(a.matrix(), b.matrix()));
  }
  Obj tensor_obj(Obj a, Obj b) const override { return a * b; }
  bool contains(const Mor& m) const override {
    return std::holds_alternative<MatMor>(m.v);
  }
  std::string mor_name(const Mor& m) const override {
    const MatMor& x = m.matrix();
    std::ostringstream os;
    os << "[";
    for (std::int64_t i = 0; i < x.rows; ++i) {
      os << (i ? ";[" : "[");
      for (std::int64_t j = 0; j < x.cols; ++j)
        os << (j ? "," : "") << rat_to_string(x.at(i, j));
      os << "]";
    }
    os << "]";
    return os.str();
  }
  Mor sample_morphism(std::mt19937_64& rng) const override {
    std::int64_t r = 1 + rng() % 3;
    std::int64_t c = 1 + rng() % 3;
    MatMor m = MatMor::zero(r, c);
    for (auto& x : m.a) x = Rat(static_cast<std::int64_t>(rng() % 5) - 2);
    return Mor::mat(std::move(m));
  }
};

void require_valid(const Category& cat);

}  // namespace

CategoryPtr make_table_category(TableData data, bool validate) {
  const size_t n_mor = data.mor_names.size();
  const size_t n_obj = data.objects.size();
  if (data.mor_dom.size() != n_mor || data.mor_cod.size() != n_mor ||
      data.identity_of.size() != n_obj || data.tensor_obj_table.size() != n_obj ||
      data.tensor_mor_table.size() != n_mor)
    fail(ErrorKind::InvalidInput, "inconsistent category table sizes");
  auto cat = std::make_shared<TableCategory>(std::move(data));
  if (validate) require_valid(*cat);
  return cat;
}

CategoryPtr integer_monoid_category() {
  static CategoryPtr c = std::make_shared<IntegerMonoidCategory>();
  return c;
}

CategoryPtr grid_max_category(int k) { return std::make_shared<GridMaxCategory>(k); }

CategoryPtr matrix_category() {
  static CategoryPtr c = std::make_shared<MatrixCategory>();
  return c;
}

CategoryPtr monoid_to_category(const std::string& name,
                               const std::vector<std::string>& elements,
                               const std::vector<std::vector<int>>& table,
                               int unit_index) {
  const int n = static_cast<int>(elements.size());
  if (n == 0 || unit_index < 0 || unit_index >= n)
    fail(ErrorKind::InvalidInput, "bad monoid data");
  if (static_cast<int>(table.size()) != n)
    fail(ErrorKind::InvalidInput, "monoid table not square");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::InvalidInput, "monoid table not square");
    for (int x : row)
      if (x < 0 || x >= n) fail(ErrorKind::InvalidInput, "monoid table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (table[unit_index][a] != a || table[a][unit_index] != a)
      fail(ErrorKind::InvalidInput, "monoid unit is not neutral");
    for (int b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a])
        fail(ErrorKind::InvalidInput, "monoid is not commutative");
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(ErrorKind::InvalidInput, "monoid is not associative");
    }
  }

  TableData d;
  d.name = name;
  d.objects = {"I"};
  d.mor_names = elements;
  d.mor_dom.assign(elements.size(), 0);
  d.mor_cod.assign(elements.size(), 0);
  d.identity_of = {unit_index};
  d.unit = 0;
  d.tensor_obj_table = {{0}};
  d.tensor_mor_table.resize(elements.size());
  for (int a = 0; a < n; ++a) {
    d.tensor_mor_table[a].resize(elements.size());
    for (int b = 0; b < n; ++b) {
      d.comp[{a, b}] = table[a][b];
      d.tensor_mor_table[a][b] = table[a][b];
    }
  }
  return make_table_category(std::move(d));
}

CategoryPtr trivial_monoid_category() {
  static CategoryPtr c = monoid_to_category("trivial-monoid", {"1"}, {{0}}, 0);
  return c;
}

CategoryPtr polya_category() {
  // 1, chi, mu with chi^2 = mu, chi*mu = mu, mu^2 = mu.
  static CategoryPtr c = monoid_to_category(
      "polya", {"1", "chi", "mu"}, {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0);
  return c;
}

CategoryPtr f2_category() {
  static CategoryPtr c = monoid_to_category("f2", {"0", "1"}, {{0, 0}, {0, 1}}, 1);
  return c;
}

CategoryPtr arrow_category() {
  TableData d;
  d.name = "arrow";
  d.objects = {"X", "Y"};
  d.mor_names = {"idX", "idY", "gamma"};
  d.mor_dom = {0, 1, 0};
  d.mor_cod = {0, 1, 1};
  d.identity_of = {0, 1};
  d.unit = 0;
  d.comp[{0, 0}] = 0;  // idX o idX
  d.comp[{1, 1}] = 1;  // idY o idY
  d.comp[{1, 2}] = 2;  // idY o gamma
  d.comp[{2, 0}] = 2;  // gamma o idX
  d.tensor_obj_table = {{0, 1}, {1, 1}};
  // X is the strict unit; Y (x) Y = Y forces every tensor with codomain and
  // domain Y to collapse onto idY or gamma.
  d.tensor_mor_table = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
  static CategoryPtr c = make_table_category(std::move(d));
  return c;
}

std::vector<std::pair<Mor, Mor>> factorizations(const Category& cat, const Mor& gamma,
                                                FactorMode mode) {
  if (!cat.is_table())
    fail(ErrorKind::UnsupportedEnumeration,
         "factorization enumeration requires a table category");
  std::vector<std::pair<Mor, Mor>> out;
  for (const Mor& a : cat.morphisms())
    for (const Mor& b : cat.morphisms()) {
      if (mode == FactorMode::Comp) {
        auto c = cat.compose(b, a);  // b o a
        if (c && *c == gamma) out.emplace_back(b, a);
      } else {
        if (cat.tensor(a, b) == gamma) out.emplace_back(a, b);
      }
    }
  return out;
}

CtcTct ctc_tct(const Category& cat, const Mor& gamma, const Mor& xi1, const Mor& xi2) {
  if (!cat.is_table())
    fail(ErrorKind::UnsupportedEnumeration, "CTC/TCT sets require a table category");
  CtcTct out;
  for (const Mor& e1 : cat.morphisms())
    for (const Mor& e2 : cat.morphisms()) {
      auto c1 = cat.compose(e1, xi1);
      auto c2 = cat.compose(e2, xi2);
      if (c1 && c2 && cat.tensor(*c1, *c2) == gamma) out.ctc.emplace_back(e1, e2);
      auto t = cat.compose(cat.tensor(e1, e2), cat.tensor(xi1, xi2));
      if (t && *t == gamma) out.tct.emplace_back(e1, e2);
    }
  return out;
}

LawReport check_category_axioms(const Category& cat, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawReport report;
  report.subject = "category/" + cat.name();

  auto witness = [&](const Mor& a, const Mor& b) {
    return [&cat, a, b]() { return cat.mor_name(a) + ", " + cat.mor_name(b); };
  };

  std::vector<Mor> pool;
  bool exhaustive = cat.is_table() && cat.morphisms().size() <= 200;
  if (exhaustive) {
    pool = cat.morphisms();
  } else {
    for (int i = 0; i < samples; ++i) pool.push_back(cat.sample_morphism(rng));
  }

  // Identity and unit laws per morphism.
  for (const Mor& a : pool) {
    auto left = cat.compose(cat.identity(cat.cod(a)), a);
    auto right = cat.compose(a, cat.identity(cat.dom(a)));
    report.record("identity-neutral", left && *left == a && right && *right == a,
                  witness(a, a));
    Mor u = cat.unit_identity();
    report.record("strict-unit",
                  cat.tensor(a, u) == a && cat.tensor(u, a) == a &&
                      cat.tensor_obj(cat.dom(a), cat.unit_object()) == cat.dom(a) &&
                      cat.tensor_obj(cat.unit_object(), cat.dom(a)) == cat.dom(a),
                  witness(a, u));
  }

  // Triple laws; exhaustive over small tables, sampled otherwise.
  long triple_budget = exhaustive
                           ? static_cast<long>(pool.size() * pool.size() * pool.size())
                           : samples;
  bool triple_exhaustive = exhaustive && triple_budget <= 2'000'000;
  auto run_triple = [&](const Mor& a, const Mor& b, const Mor& c) {
    // Associativity of composition where defined.
    auto ba = cat.compose(b, a);
    auto cb = cat.compose(c, b);
    if (ba && cb) {
      auto l = cat.compose(c, *ba);
      auto r = cat.compose(*cb, a);
      report.record("compose-associative", l && r && *l == *r, witness(a, c));
    }
    // Strict associativity of the tensor.
    report.record("tensor-associative",
                  cat.tensor(cat.tensor(a, b), c) == cat.tensor(a, cat.tensor(b, c)),
                  witness(a, c));
    report.record(
        "tensor-objects-associative",
        cat.tensor_obj(cat.tensor_obj(cat.dom(a), cat.dom(b)), cat.dom(c)) ==
            cat.tensor_obj(cat.dom(a), cat.tensor_obj(cat.dom(b), cat.dom(c))),
        witness(a, c));
  };
  if (triple_exhaustive) {
    for (const Mor& a : pool)
      for (const Mor& b : pool)
        for (const Mor& c : pool) run_triple(a, b, c);
  } else {
    for (int i = 0; i < samples; ++i)
      run_triple(pool[rng() % pool.size()], pool[rng() % pool.size()],
                 pool[rng() % pool.size()]);
  }

  // Interchange on composable quadruples.
  auto run_interchange = [&](const Mor& x1, const Mor& e1, const Mor& x2, const Mor& e2) {
    auto c1 = cat.compose(e1, x1);
    auto c2 = cat.compose(e2, x2);
    if (!c1 || !c2) return;
    Mor lhs = cat.tensor(*c1, *c2);
    auto rhs = cat.compose(cat.tensor(e1, e2), cat.tensor(x1, x2));
    report.record("interchange", rhs && lhs == *rhs, witness(x1, x2));
  };
  if (exhaustive && pool.size() <= 30) {
    for (const Mor& a : pool)
      for (const Mor& b : pool)
        for (const Mor& c : pool)
          for (const Mor& d : pool) run_interchange(a, b, c, d);
  } else {
    for (int i = 0; i < samples; ++i)
      run_interchange(pool[rng() % pool.size()], pool[rng() % pool.size()],
                      pool[rng() % pool.size()], pool[rng() % pool.size()]);
  }

  // Identities are tensor-compatible: id_X (x) id_Y = id_{X (x) Y}.
  for (const Mor& a : pool) {
    Obj x = cat.dom(a);
    Obj y = cat.cod(a);
    report.record("identity-tensor",
                  cat.tensor(cat.identity(x), cat.identity(y)) ==
                      cat.identity(cat.tensor_obj(x, y)),
                  witness(a, a));
  }
  return report;
}

namespace {
void require_valid(const Category& cat) {
  auto report = check_category_axioms(cat, 200, 17);
  if (!report.all_pass()) {
    std::string what = "category table rejected: ";
    for (const auto& c : report.checks)
      if (c.failures) what += c.law + " (" + c.first_counterexample + ") ";
    fail(ErrorKind::InvalidInput, what);
  }
}
}  // namespace

nlohmann::json table_to_json(const Category& cat) {
  if (!cat.is_table())
    fail(ErrorKind::UnsupportedEnumeration, "only table categories serialize");
  const auto& tc = dynamic_cast<const TableCategory&>(cat);
  const TableData& d = tc.data();
  nlohmann::json j;
  j["name"] = d.name;
  j["objects"] = d.objects;
  nlohmann::json mors = nlohmann::json::array();
  for (size_t i = 0; i < d.mor_names.size(); ++i)
    mors.push_back({{"id", d.mor_names[i]},
                    {"dom", d.objects[static_cast<size_t>(d.mor_dom[i])]},
                    {"cod", d.objects[static_cast<size_t>(d.mor_cod[i])]}});
  j["morphisms"] = mors;
  nlohmann::json ids = nlohmann::json::object();
  for (size_t i = 0; i < d.objects.size(); ++i)
    ids[d.objects[i]] = d.mor_names[static_cast<size_t>(d.identity_of[i])];
  j["identities"] = ids;
  nlohmann::json comp = nlohmann::json::array();
  for (const auto& [k, v] : d.comp)
    comp.push_back({d.mor_names[static_cast<size_t>(k.first)],
                    d.mor_names[static_cast<size_t>(k.second)],
                    d.mor_names[static_cast<size_t>(v)]});
  j["compose"] = comp;
  j["unit"] = d.objects[static_cast<size_t>(d.unit)];
  nlohmann::json tob = nlohmann::json::array();
  for (size_t a = 0; a < d.objects.size(); ++a)
    for (size_t b = 0; b < d.objects.size(); ++b)
      tob.push_back({d.objects[a], d.objects[b],
                     d.objects[static_cast<size_t>(d.tensor_obj_table[a][b])]});
  j["tensor_objects"] = tob;
  nlohmann::json tmor = nlohmann::json::array();
  for (size_t a = 0; a < d.mor_names.size(); ++a)
    for (size_t b = 0; b < d.mor_names.size(); ++b)
      tmor.push_back({d.mor_names[a], d.mor_names[b],
                      d.mor_names[static_cast<size_t>(d.tensor_mor_table[a][b])]});
  j["tensor"] = tmor;
  return j;
}

CategoryPtr category_from_json(const nlohmann::json& j, bool validate) {
  TableData d;
  d.name = j.value("name", "category");
  d.objects = j.at("objects").get<std::vector<std::string>>();
  auto obj_index = [&](const std::string& s) {
    auto it = std::find(d.objects.begin(), d.objects.end(), s);
    if (it == d.objects.end()) fail(ErrorKind::InvalidInput, "unknown object " + s);
    return static_cast<int>(it - d.objects.begin());
  };
  for (const auto& m : j.at("morphisms")) {
    d.mor_names.push_back(m.at("id").get<std::string>());
    d.mor_dom.push_back(obj_index(m.at("dom").get<std::string>()));
    d.mor_cod.push_back(obj_index(m.at("cod").get<std::string>()));
  }
  auto mor_index = [&](const std::string& s) {
    auto it = std::find(d.mor_names.begin(), d.mor_names.end(), s);
    if (it == d.mor_names.end()) fail(ErrorKind::InvalidInput, "unknown morphism " + s);
    return static_cast<int>(it - d.mor_names.begin());
  };
  d.identity_of.assign(d.objects.size(), -1);
  for (const auto& [obj, mor] : j.at("identities").items())
    d.identity_of[static_cast<size_t>(obj_index(obj))] = mor_index(mor.get<std::string>());
  for (int id : d.identity_of)
    if (id < 0) fail(ErrorKind::InvalidInput, "object without identity");
  for (const auto& t : j.at("compose"))
    d.comp[{mor_index(t.at(0).get<std::string>()), mor_index(t.at(1).get<std::string>())}] =
        mor_index(t.at(2).get<std::string>());
  d.unit = obj_index(j.at("unit").get<std::string>());
  d.tensor_obj_table.assign(d.objects.size(), std::vector<int>(d.objects.size(), -1));
  for (const auto& t : j.at("tensor_objects"))
    d.tensor_obj_table[static_cast<size_t>(obj_index(t.at(0).get<std::string>()))]
                      [static_cast<size_t>(obj_index(t.at(1).get<std::string>()))] =
        obj_index(t.at(2).get<std::string>());
  d.tensor_mor_table.assign(d.mor_names.size(), std::vector<int>(d.mor_names.size(), -1));
  for (const auto& t : j.at("tensor"))
    d.tensor_mor_table[static_cast<size_t>(mor_index(t.at(0).get<std::string>()))]
                      [static_cast<size_t>(mor_index(t.at(1).get<std::string>()))] =
        mor_index(t.at(2).get<std::string>());
  for (const auto& row : d.tensor_obj_table)
    for (int x : row)
      if (x < 0) fail(ErrorKind::InvalidInput, "incomplete tensor table on objects");
  for (const auto& row : d.tensor_mor_table)
    for (int x : row)
      if (x < 0) fail(ErrorKind::InvalidInput, "incomplete tensor table on morphisms");
  return make_table_category(std::move(d), validate);
}

LawReport check_matrix_rep(const MatrixRep& rep, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawReport report;
  report.subject = "matrix-rep/" + rep.source->name();
  const Category& src = *rep.source;

  std::vector<Mor> pool;
  if (src.is_table() && src.morphisms().size() <= 30) {
    pool = src.morphisms();
  } else {
    for (int i = 0; i < samples; ++i) pool.push_back(src.sample_morphism(rng));
  }

  report.record("unit-object-to-dim-1", rep.object_dim(src.unit_object()) == 1,
                [] { return std::string("rep(I) != 1"); });

  auto witness = [&](const Mor& a, const Mor& b) {
    return [&src, a, b]() { return src.mor_name(a) + ", " + src.mor_name(b); };
  };

  for (const Mor& a : pool) {
    MatMor ra = rep.morphism_matrix(a);
    report.record("object-compatible",
                  ra.cols == rep.object_dim(src.dom(a)) &&
                      ra.rows == rep.object_dim(src.cod(a)),
                  witness(a, a));
  }
  for (Obj x : src.is_table() ? src.objects() : std::vector<Obj>{src.unit_object()}) {
    report.record("identity-preserved",
                  rep.morphism_matrix(src.identity(x)) ==
                      MatMor::identity(rep.object_dim(x)),
                  [&] { return "object " + std::to_string(x); });
  }
  for (const Mor& a : pool)
    for (const Mor& b : pool) {
      auto ba = src.compose(b, a);
      if (ba)
        report.record("composition-preserved",
                      rep.morphism_matrix(*ba) ==
                          mat_mul(rep.morphism_matrix(b), rep.morphism_matrix(a)),
                      witness(a, b));
      report.record("tensor-preserved",
                    rep.morphism_matrix(src.tensor(a, b)) ==
                        mat_kron(rep.morphism_matrix(a), rep.morphism_matrix(b)),
                    witness(a, b));
      report.record("tensor-object-preserved",
                    rep.object_dim(src.tensor_obj(src.dom(a), src.dom(b))) ==
                        rep.object_dim(src.dom(a)) * rep.object_dim(src.dom(b)),
                    witness(a, b));
    }
  return report;
}

}  // namespace postft
