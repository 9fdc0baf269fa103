#include "postft/semiring.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "postft/error.hpp"

namespace postft {

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidInput, "not a rational: " + s);
  }
}

const char* carrier_name(Carrier c) {
  switch (c) {
    case Carrier::Boolean: return "boolean";
    case Carrier::NatInf: return "nat-inf";
    case Carrier::RatInf: return "nonneg-rat-inf";
    case Carrier::TropicalMinPlus: return "tropical-min-plus";
    case Carrier::ArcticMaxPlus: return "arctic-max-plus";
    case Carrier::Language: return "formal-language";
    case Carrier::Relation: return "binary-relation";
    case Carrier::Matrix: return "matrix";
  }
  return "?";
}

SemiringDescriptor SemiringDescriptor::language(std::vector<std::string> sigma) {
  if (sigma.empty()) fail(ErrorKind::InvalidArgument, "empty alphabet");
  for (const auto& s : sigma)
    if (s.size() != 1)
      fail(ErrorKind::InvalidArgument, "alphabet symbols must be single characters");
  std::sort(sigma.begin(), sigma.end());
  if (std::adjacent_find(sigma.begin(), sigma.end()) != sigma.end())
    fail(ErrorKind::InvalidArgument, "duplicate alphabet symbol");
  SemiringDescriptor d;
  d.carrier = Carrier::Language;
  d.alphabet = std::move(sigma);
  return d;
}

SemiringDescriptor SemiringDescriptor::relation(std::vector<std::string> base_set) {
  if (base_set.empty()) fail(ErrorKind::InvalidArgument, "empty relation base");
  SemiringDescriptor d;
  d.carrier = Carrier::Relation;
  d.base = std::move(base_set);
  return d;
}

static int matrix_depth(const SemiringDescriptor& d) {
  if (d.carrier != Carrier::Matrix) return 0;
  return 1 + matrix_depth(*d.inner);
}

SemiringDescriptor SemiringDescriptor::matrix(int dim, SemiringDescriptor inner_desc) {
  if (dim < 1) fail(ErrorKind::InvalidArgument, "matrix dim must be >= 1");
  SemiringDescriptor d;
  d.carrier = Carrier::Matrix;
  d.dim = dim;
  d.inner = std::make_shared<SemiringDescriptor>(std::move(inner_desc));
  if (matrix_depth(d) > 2) fail(ErrorKind::InvalidArgument, "matrix nesting deeper than 2");
  return d;
}

bool SemiringDescriptor::additively_idempotent() const {
  switch (carrier) {
    case Carrier::Boolean:
    case Carrier::TropicalMinPlus:
    case Carrier::ArcticMaxPlus:
    case Carrier::Language:
    case Carrier::Relation:
      return true;
    case Carrier::NatInf:
    case Carrier::RatInf:
      return false;
    case Carrier::Matrix:
      return inner->additively_idempotent();
  }
  return false;
}

bool operator==(const SemiringDescriptor& a, const SemiringDescriptor& b) {
  if (a.carrier != b.carrier) return false;
  switch (a.carrier) {
    case Carrier::Language: return a.alphabet == b.alphabet;
    case Carrier::Relation: return a.base == b.base;
    case Carrier::Matrix: return a.dim == b.dim && *a.inner == *b.inner;
    default: return true;
  }
}

bool operator==(const SemiringElement& a, const SemiringElement& b) {
  return a.carrier == b.carrier && a.payload == b.payload;
}

bool operator<(const SemiringElement& a, const SemiringElement& b) {
  if (a.carrier != b.carrier) return a.carrier < b.carrier;
  return a.payload < b.payload;
}

namespace sr {

static const XNum& num(const SemiringElement& a) { return std::get<XNum>(a.payload); }

SemiringElement boolean(bool b) { return {Carrier::Boolean, b}; }

SemiringElement nat(Int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "negative natural");
  return {Carrier::NatInf, XNum::finite(Rat(std::move(n)))};
}
SemiringElement nat_infinity() { return {Carrier::NatInf, XNum::pos_inf()}; }

SemiringElement rational(Rat q) {
  if (q < 0) fail(ErrorKind::InvalidArgument, "negative rational");
  return {Carrier::RatInf, XNum::finite(std::move(q))};
}
SemiringElement rat_infinity() { return {Carrier::RatInf, XNum::pos_inf()}; }

SemiringElement tropical(Rat q) {
  if (q < 0) fail(ErrorKind::InvalidArgument, "negative tropical value");
  return {Carrier::TropicalMinPlus, XNum::finite(std::move(q))};
}
SemiringElement tropical_zero() { return {Carrier::TropicalMinPlus, XNum::pos_inf()}; }

SemiringElement arctic(Rat q) {
  if (q < 0) fail(ErrorKind::InvalidArgument, "negative arctic value");
  return {Carrier::ArcticMaxPlus, XNum::finite(std::move(q))};
}
SemiringElement arctic_zero() { return {Carrier::ArcticMaxPlus, XNum::neg_inf()}; }
SemiringElement arctic_top() { return {Carrier::ArcticMaxPlus, XNum::pos_inf()}; }

SemiringElement language(const SemiringDescriptor& d, Words w) {
  SemiringElement e{Carrier::Language, std::move(w)};
  require_conforms(d, e);
  return e;
}

SemiringElement relation(const SemiringDescriptor& d, RelPairs p) {
  SemiringElement e{Carrier::Relation, std::move(p)};
  require_conforms(d, e);
  return e;
}

SemiringElement matrix(const SemiringDescriptor& d, Cells entries) {
  SemiringElement e{Carrier::Matrix, std::move(entries)};
  require_conforms(d, e);
  return e;
}

SemiringElement zero(const SemiringDescriptor& d) {
  switch (d.carrier) {
    case Carrier::Boolean: return boolean(false);
    case Carrier::NatInf: return nat(0);
    case Carrier::RatInf: return rational(Rat(0));
    case Carrier::TropicalMinPlus: return tropical_zero();
    case Carrier::ArcticMaxPlus: return arctic_zero();
    case Carrier::Language: return {Carrier::Language, Words{}};
    case Carrier::Relation: return {Carrier::Relation, RelPairs{}};
    case Carrier::Matrix: {
      Cells c(static_cast<size_t>(d.dim) * d.dim, zero(*d.inner));
      return {Carrier::Matrix, std::move(c)};
    }
  }
  fail(ErrorKind::InvalidArgument, "bad carrier");
}

SemiringElement one(const SemiringDescriptor& d) {
  switch (d.carrier) {
    case Carrier::Boolean: return boolean(true);
    case Carrier::NatInf: return nat(1);
    case Carrier::RatInf: return rational(Rat(1));
    case Carrier::TropicalMinPlus: return tropical(Rat(0));
    case Carrier::ArcticMaxPlus: return arctic(Rat(0));
    case Carrier::Language: return {Carrier::Language, Words{""}};
    case Carrier::Relation: {
      RelPairs diag;
      for (int i = 0; i < static_cast<int>(d.base.size()); ++i) diag.emplace(i, i);
      return {Carrier::Relation, std::move(diag)};
    }
    case Carrier::Matrix: {
      Cells c(static_cast<size_t>(d.dim) * d.dim, zero(*d.inner));
      for (int i = 0; i < d.dim; ++i) c[static_cast<size_t>(i) * d.dim + i] = one(*d.inner);
      return {Carrier::Matrix, std::move(c)};
    }
  }
  fail(ErrorKind::InvalidArgument, "bad carrier");
}

static bool is_natural(const Rat& q) { return denominator(q) == 1 && q >= 0; }

bool conforms(const SemiringDescriptor& d, const SemiringElement& a) {
  if (a.carrier != d.carrier) return false;
  switch (d.carrier) {
    case Carrier::Boolean:
      return std::holds_alternative<bool>(a.payload);
    case Carrier::NatInf: {
      if (!std::holds_alternative<XNum>(a.payload)) return false;
      const XNum& x = num(a);
      return x.cls == 1 || (x.cls == 0 && is_natural(x.q));
    }
    case Carrier::RatInf: {
      if (!std::holds_alternative<XNum>(a.payload)) return false;
      const XNum& x = num(a);
      return x.cls == 1 || (x.cls == 0 && x.q >= 0);
    }
    case Carrier::TropicalMinPlus: {
      if (!std::holds_alternative<XNum>(a.payload)) return false;
      const XNum& x = num(a);
      return x.cls == 1 || (x.cls == 0 && x.q >= 0);
    }
    case Carrier::ArcticMaxPlus: {
      if (!std::holds_alternative<XNum>(a.payload)) return false;
      const XNum& x = num(a);
      return x.cls != 0 || x.q >= 0;
    }
    case Carrier::Language: {
      if (!std::holds_alternative<Words>(a.payload)) return false;
      for (const auto& w : std::get<Words>(a.payload))
        for (char ch : w)
          if (std::find(d.alphabet.begin(), d.alphabet.end(), std::string(1, ch)) ==
              d.alphabet.end())
            return false;
      return true;
    }
    case Carrier::Relation: {
      if (!std::holds_alternative<RelPairs>(a.payload)) return false;
      int n = static_cast<int>(d.base.size());
      for (auto [i, j] : std::get<RelPairs>(a.payload))
        if (i < 0 || j < 0 || i >= n || j >= n) return false;
      return true;
    }
    case Carrier::Matrix: {
      if (!std::holds_alternative<Cells>(a.payload)) return false;
      const Cells& c = std::get<Cells>(a.payload);
      if (c.size() != static_cast<size_t>(d.dim) * d.dim) return false;
      for (const auto& e : c)
        if (!conforms(*d.inner, e)) return false;
      return true;
    }
  }
  return false;
}

void require_conforms(const SemiringDescriptor& d, const SemiringElement& a) {
  if (!conforms(d, a))
    fail(ErrorKind::DescriptorMismatch,
         std::string("element does not conform to carrier ") + carrier_name(d.carrier));
}

bool is_zero(const SemiringDescriptor& d, const SemiringElement& a) {
  return a == zero(d);
}

SemiringElement add(const SemiringDescriptor& d, const SemiringElement& a,
                    const SemiringElement& b) {
  require_conforms(d, a);
  require_conforms(d, b);
  switch (d.carrier) {
    case Carrier::Boolean:
      return boolean(std::get<bool>(a.payload) || std::get<bool>(b.payload));
    case Carrier::NatInf:
    case Carrier::RatInf:
      return {d.carrier, xplus(num(a), num(b))};
    case Carrier::TropicalMinPlus:
      return {d.carrier, xmin(num(a), num(b))};
    case Carrier::ArcticMaxPlus:
      return {d.carrier, xmax(num(a), num(b))};
    case Carrier::Language: {
      Words w = std::get<Words>(a.payload);
      const Words& v = std::get<Words>(b.payload);
      w.insert(v.begin(), v.end());
      return {d.carrier, std::move(w)};
    }
    case Carrier::Relation: {
      RelPairs p = std::get<RelPairs>(a.payload);
      const RelPairs& q = std::get<RelPairs>(b.payload);
      p.insert(q.begin(), q.end());
      return {d.carrier, std::move(p)};
    }
    case Carrier::Matrix: {
      const Cells& x = std::get<Cells>(a.payload);
      const Cells& y = std::get<Cells>(b.payload);
      Cells out;
      out.reserve(x.size());
      for (size_t i = 0; i < x.size(); ++i) out.push_back(add(*d.inner, x[i], y[i]));
      return {d.carrier, std::move(out)};
    }
  }
  fail(ErrorKind::InvalidArgument, "bad carrier");
}

SemiringElement mul(const SemiringDescriptor& d, const SemiringElement& a,
                    const SemiringElement& b) {
  require_conforms(d, a);
  require_conforms(d, b);
  switch (d.carrier) {
    case Carrier::Boolean:
      return boolean(std::get<bool>(a.payload) && std::get<bool>(b.payload));
    case Carrier::NatInf:
    case Carrier::RatInf: {
      const XNum& x = num(a);
      const XNum& y = num(b);
      // 0 annihilates infinity in these carriers.
      if ((x.cls == 0 && x.q == 0) || (y.cls == 0 && y.q == 0))
        return zero(d);
      if (x.cls == 1 || y.cls == 1) return {d.carrier, XNum::pos_inf()};
      return {d.carrier, XNum::finite(x.q * y.q)};
    }
    case Carrier::TropicalMinPlus: {
      // Product is numeric addition; the additive unit +inf absorbs.
      const XNum& x = num(a);
      const XNum& y = num(b);
      if (x.cls == 1 || y.cls == 1) return tropical_zero();
      return tropical(x.q + y.q);
    }
    case Carrier::ArcticMaxPlus: {
      const XNum& x = num(a);
      const XNum& y = num(b);
      if (x.cls == -1 || y.cls == -1) return arctic_zero();
      if (x.cls == 1 || y.cls == 1) return arctic_top();
      return arctic(x.q + y.q);
    }
    case Carrier::Language: {
      const Words& u = std::get<Words>(a.payload);
      const Words& v = std::get<Words>(b.payload);
      Words out;
      for (const auto& w1 : u)
        for (const auto& w2 : v) out.insert(w1 + w2);
      return {d.carrier, std::move(out)};
    }
    case Carrier::Relation: {
      const RelPairs& r = std::get<RelPairs>(a.payload);
      const RelPairs& s = std::get<RelPairs>(b.payload);
      RelPairs out;
      for (auto [i, k] : r)
        for (auto [k2, j] : s)
          if (k == k2) out.emplace(i, j);
      return {d.carrier, std::move(out)};
    }
    case Carrier::Matrix: {
      const Cells& x = std::get<Cells>(a.payload);
      const Cells& y = std::get<Cells>(b.payload);
      int n = d.dim;
      Cells out(static_cast<size_t>(n) * n, zero(*d.inner));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          SemiringElement acc = zero(*d.inner);
          for (int k = 0; k < n; ++k)
            acc = add(*d.inner, acc,
                      mul(*d.inner, x[static_cast<size_t>(i) * n + k],
                          y[static_cast<size_t>(k) * n + j]));
          out[static_cast<size_t>(i) * n + j] = std::move(acc);
        }
      return {d.carrier, std::move(out)};
    }
  }
  fail(ErrorKind::InvalidArgument, "bad carrier");
}

SemiringElement sum(const SemiringDescriptor& d,
                    std::span<const SemiringElement> family) {
  SemiringElement acc = zero(d);
  for (const auto& e : family) acc = add(d, acc, e);
  return acc;
}

SemiringElement repeat(const SemiringDescriptor& d, const Count& count,
                       const SemiringElement& a) {
  require_conforms(d, a);
  if (!count.infinite && count.n == 0) return zero(d);
  if (is_zero(d, a)) return zero(d);  // a sum of zeros is zero for any index set
  switch (d.carrier) {
    case Carrier::Boolean:
    case Carrier::TropicalMinPlus:
    case Carrier::ArcticMaxPlus:
    case Carrier::Language:
    case Carrier::Relation:
      return a;  // idempotent addition
    case Carrier::NatInf:
    case Carrier::RatInf: {
      if (count.infinite) return {d.carrier, XNum::pos_inf()};
      const XNum& x = num(a);
      if (x.cls == 1) return {d.carrier, XNum::pos_inf()};
      return {d.carrier, XNum::finite(x.q * Rat(count.n))};
    }
    case Carrier::Matrix: {
      const Cells& c = std::get<Cells>(a.payload);
      Cells out;
      out.reserve(c.size());
      for (const auto& e : c) out.push_back(repeat(*d.inner, count, e));
      return {d.carrier, std::move(out)};
    }
  }
  fail(ErrorKind::InvalidArgument, "bad carrier");
}

static std::string xnum_to_string(const XNum& x) {
  if (x.cls == 1) return "inf";
  if (x.cls == -1) return "-inf";
  return rat_to_string(x.q);
}

std::string to_string(const SemiringDescriptor& d, const SemiringElement& a) {
  switch (d.carrier) {
    case Carrier::Boolean: return std::get<bool>(a.payload) ? "1" : "0";
    case Carrier::NatInf:
    case Carrier::RatInf:
    case Carrier::TropicalMinPlus:
    case Carrier::ArcticMaxPlus:
      return xnum_to_string(num(a));
    case Carrier::Language: {
      std::string s = "{";
      bool first = true;
      for (const auto& w : std::get<Words>(a.payload)) {
        if (!first) s += ",";
        first = false;
        s += w.empty() ? "eps" : w;
      }
      return s + "}";
    }
    case Carrier::Relation: {
      std::string s = "{";
      bool first = true;
      for (auto [i, j] : std::get<RelPairs>(a.payload)) {
        if (!first) s += ",";
        first = false;
        s += "(" + d.base[static_cast<size_t>(i)] + "," + d.base[static_cast<size_t>(j)] + ")";
      }
      return s + "}";
    }
    case Carrier::Matrix: {
      const Cells& c = std::get<Cells>(a.payload);
      std::string s = "[";
      for (int i = 0; i < d.dim; ++i) {
        s += i ? ";[" : "[";
        for (int j = 0; j < d.dim; ++j) {
          if (j) s += ",";
          s += to_string(*d.inner, c[static_cast<size_t>(i) * d.dim + j]);
        }
        s += "]";
      }
      return s + "]";
    }
  }
  return "?";
}

nlohmann::json descriptor_to_json(const SemiringDescriptor& d) {
  nlohmann::json j;
  j["carrier"] = carrier_name(d.carrier);
  if (d.carrier == Carrier::Language) j["alphabet"] = d.alphabet;
  if (d.carrier == Carrier::Relation) j["base"] = d.base;
  if (d.carrier == Carrier::Matrix) {
    j["dim"] = d.dim;
    j["inner"] = descriptor_to_json(*d.inner);
  }
  return j;
}

SemiringDescriptor descriptor_from_json(const nlohmann::json& j) {
  std::string c = j.at("carrier").get<std::string>();
  if (c == "boolean") return SemiringDescriptor::boolean();
  if (c == "nat-inf") return SemiringDescriptor::nat_inf();
  if (c == "nonneg-rat-inf") return SemiringDescriptor::rat_inf();
  if (c == "tropical-min-plus") return SemiringDescriptor::tropical();
  if (c == "arctic-max-plus") return SemiringDescriptor::arctic();
  if (c == "formal-language")
    return SemiringDescriptor::language(j.at("alphabet").get<std::vector<std::string>>());
  if (c == "binary-relation")
    return SemiringDescriptor::relation(j.at("base").get<std::vector<std::string>>());
  if (c == "matrix")
    return SemiringDescriptor::matrix(j.at("dim").get<int>(),
                                      descriptor_from_json(j.at("inner")));
  fail(ErrorKind::InvalidInput, "unknown carrier: " + c);
}

static nlohmann::json xnum_to_json(const XNum& x) {
  if (x.cls != 0) return x.cls > 0 ? "inf" : "-inf";
  return rat_to_string(x.q);
}

static XNum xnum_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return XNum::finite(Rat(j.get<long long>()));
  std::string s = j.get<std::string>();
  if (s == "inf") return XNum::pos_inf();
  if (s == "-inf") return XNum::neg_inf();
  return XNum::finite(rat_from_string(s));
}

nlohmann::json element_to_json(const SemiringDescriptor& d, const SemiringElement& a) {
  switch (d.carrier) {
    case Carrier::Boolean: return std::get<bool>(a.payload) ? 1 : 0;
    case Carrier::NatInf:
    case Carrier::RatInf:
    case Carrier::TropicalMinPlus:
    case Carrier::ArcticMaxPlus:
      return xnum_to_json(num(a));
    case Carrier::Language: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& w : std::get<Words>(a.payload)) arr.push_back(w);
      return arr;
    }
    case Carrier::Relation: {
      nlohmann::json arr = nlohmann::json::array();
      for (auto [i, j] : std::get<RelPairs>(a.payload))
        arr.push_back({d.base[static_cast<size_t>(i)], d.base[static_cast<size_t>(j)]});
      return arr;
    }
    case Carrier::Matrix: {
      const Cells& c = std::get<Cells>(a.payload);
      nlohmann::json rows = nlohmann::json::array();
      for (int i = 0; i < d.dim; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < d.dim; ++j)
          row.push_back(element_to_json(*d.inner, c[static_cast<size_t>(i) * d.dim + j]));
        rows.push_back(row);
      }
      return rows;
    }
  }
  return nullptr;
}

SemiringElement element_from_json(const SemiringDescriptor& d, const nlohmann::json& j) {
  switch (d.carrier) {
    case Carrier::Boolean: {
      if (j.is_boolean()) return boolean(j.get<bool>());
      return boolean(j.get<int>() != 0);
    }
    case Carrier::NatInf:
    case Carrier::RatInf:
    case Carrier::TropicalMinPlus:
    case Carrier::ArcticMaxPlus: {
      SemiringElement e{d.carrier, xnum_from_json(j)};
      require_conforms(d, e);
      return e;
    }
    case Carrier::Language: {
      Words w;
      for (const auto& x : j) w.insert(x.get<std::string>());
      return language(d, std::move(w));
    }
    case Carrier::Relation: {
      RelPairs p;
      for (const auto& pr : j) {
        auto find = [&](const std::string& s) {
          auto it = std::find(d.base.begin(), d.base.end(), s);
          if (it == d.base.end()) fail(ErrorKind::InvalidInput, "unknown base element " + s);
          return static_cast<int>(it - d.base.begin());
        };
        p.emplace(find(pr.at(0).get<std::string>()), find(pr.at(1).get<std::string>()));
      }
      return relation(d, std::move(p));
    }
    case Carrier::Matrix: {
      Cells c;
      for (const auto& row : j)
        for (const auto& x : row) c.push_back(element_from_json(*d.inner, x));
      return matrix(d, std::move(c));
    }
  }
  fail(ErrorKind::InvalidInput, "bad carrier");
}

// Bounded draws via modulo keep the suites reproducible across platforms.
static std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

SemiringElement sample(const SemiringDescriptor& d, std::mt19937_64& rng) {
  switch (d.carrier) {
    case Carrier::Boolean:
      return boolean(draw(rng, 2) == 1);
    case Carrier::NatInf: {
      if (draw(rng, 8) == 0) return nat_infinity();
      return nat(Int(draw(rng, 10)));
    }
    case Carrier::RatInf: {
      if (draw(rng, 8) == 0) return rat_infinity();
      return rational(Rat(Int(draw(rng, 12)), Int(1 + draw(rng, 5))));
    }
    case Carrier::TropicalMinPlus: {
      if (draw(rng, 8) == 0) return tropical_zero();
      return tropical(Rat(Int(draw(rng, 12)), Int(1 + draw(rng, 4))));
    }
    case Carrier::ArcticMaxPlus: {
      auto r = draw(rng, 10);
      if (r == 0) return arctic_zero();
      if (r == 1) return arctic_top();
      return arctic(Rat(Int(draw(rng, 12)), Int(1 + draw(rng, 4))));
    }
    case Carrier::Language: {
      Words w;
      auto n_words = draw(rng, 4);
      for (std::uint64_t i = 0; i < n_words; ++i) {
        std::string word;
        auto len = draw(rng, 4);
        for (std::uint64_t k = 0; k < len; ++k)
          word += d.alphabet[draw(rng, d.alphabet.size())];
        w.insert(word);
      }
      return {Carrier::Language, std::move(w)};
    }
    case Carrier::Relation: {
      RelPairs p;
      int n = static_cast<int>(d.base.size());
      auto n_pairs = draw(rng, static_cast<std::uint64_t>(n) * n + 1);
      for (std::uint64_t i = 0; i < n_pairs; ++i)
        p.emplace(static_cast<int>(draw(rng, n)), static_cast<int>(draw(rng, n)));
      return {Carrier::Relation, std::move(p)};
    }
    case Carrier::Matrix: {
      Cells c;
      c.reserve(static_cast<size_t>(d.dim) * d.dim);
      for (int i = 0; i < d.dim * d.dim; ++i) c.push_back(sample(*d.inner, rng));
      return {Carrier::Matrix, std::move(c)};
    }
  }
  fail(ErrorKind::InvalidArgument, "bad carrier");
}

}  // namespace sr
}  // namespace postft
