#include "postft/laws.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace postft {

bool LawReport::all_pass() const { return total_failures() == 0; }

long LawReport::total_failures() const {
  long n = 0;
  for (const auto& c : checks) n += c.failures;
  return n;
}

LawCheck& LawReport::open(const std::string& law) {
  for (auto& c : checks)
    if (c.law == law) return c;
  checks.push_back(LawCheck{law, 0, 0, ""});
  return checks.back();
}

void LawReport::record(const std::string& law, bool ok,
                       std::function<std::string()> witness) {
  LawCheck& c = open(law);
  ++c.cases;
  if (!ok) {
    ++c.failures;
    if (c.first_counterexample.empty()) c.first_counterexample = witness();
  }
}

nlohmann::json LawReport::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["all_pass"] = all_pass();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["law"] = c.law;
    e["cases"] = c.cases;
    e["failures"] = c.failures;
    if (!c.first_counterexample.empty()) e["counterexample"] = c.first_counterexample;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j;
}

SemiringOps standard_ops(const SemiringDescriptor& d) {
  SemiringOps ops;
  ops.desc = d;
  ops.zero = sr::zero(d);
  ops.one = sr::one(d);
  ops.add = [d](const SemiringElement& a, const SemiringElement& b) {
    return sr::add(d, a, b);
  };
  ops.mul = [d](const SemiringElement& a, const SemiringElement& b) {
    return sr::mul(d, a, b);
  };
  ops.sum = [d](std::span<const SemiringElement> f) { return sr::sum(d, f); };
  ops.repeat = [d](const Count& c, const SemiringElement& a) {
    return sr::repeat(d, c, a);
  };
  ops.sample = [d](std::mt19937_64& rng) { return sr::sample(d, rng); };
  return ops;
}

namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::string show(const SemiringOps& ops, const SemiringElement& a) {
  return sr::to_string(ops.desc, a);
}

}  // namespace

LawReport check_semiring_laws(const SemiringOps& ops, int sample_count,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawReport report;
  report.subject = carrier_name(ops.desc.carrier);

  for (int it = 0; it < sample_count; ++it) {
    SemiringElement a = ops.sample(rng);
    SemiringElement b = ops.sample(rng);
    SemiringElement c = ops.sample(rng);
    auto pair_witness = [&](const char* tag) {
      return [&, tag]() {
        return std::string(tag) + ": a=" + show(ops, a) + " b=" + show(ops, b) +
               " c=" + show(ops, c);
      };
    };

    report.record("add-associative",
                  ops.add(ops.add(a, b), c) == ops.add(a, ops.add(b, c)),
                  pair_witness("(a+b)+c != a+(b+c)"));
    report.record("add-commutative", ops.add(a, b) == ops.add(b, a),
                  pair_witness("a+b != b+a"));
    report.record("add-unit", ops.add(ops.zero, a) == a && ops.add(a, ops.zero) == a,
                  pair_witness("0+a != a"));
    report.record("mul-associative",
                  ops.mul(ops.mul(a, b), c) == ops.mul(a, ops.mul(b, c)),
                  pair_witness("(ab)c != a(bc)"));
    report.record("mul-unit", ops.mul(ops.one, a) == a && ops.mul(a, ops.one) == a,
                  pair_witness("1a != a or a1 != a"));
    report.record("zero-absorbing",
                  ops.mul(ops.zero, a) == ops.zero && ops.mul(a, ops.zero) == ops.zero,
                  pair_witness("0a != 0 or a0 != 0"));
    report.record(
        "distributive-left",
        ops.mul(a, ops.add(b, c)) == ops.add(ops.mul(a, b), ops.mul(a, c)),
        pair_witness("a(b+c) != ab+ac"));
    report.record(
        "distributive-right",
        ops.mul(ops.add(b, c), a) == ops.add(ops.mul(b, a), ops.mul(c, a)),
        pair_witness("(b+c)a != ba+ca"));

    // Zerosumfree: a+b = 0 forces a = b = 0.
    bool zsf = ops.add(a, b) != ops.zero || (a == ops.zero && b == ops.zero);
    report.record("zerosumfree", zsf, pair_witness("a+b=0 with a or b nonzero"));

    // Summation-law base cases.
    std::vector<SemiringElement> fam0;
    std::vector<SemiringElement> fam1{a};
    std::vector<SemiringElement> fam2{a, b};
    report.record("sum-empty", ops.sum(fam0) == ops.zero,
                  [&]() { return std::string("sum over empty set != 0"); });
    report.record("sum-singleton", ops.sum(fam1) == a, pair_witness("sum{a} != a"));
    report.record("sum-pair", ops.sum(fam2) == ops.add(a, b),
                  pair_witness("sum{a,b} != a+b"));

    // Partition law on a random family of size <= 16, random 2-level split.
    {
      auto n = 1 + draw(rng, 16);
      std::vector<SemiringElement> fam;
      fam.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) fam.push_back(ops.sample(rng));
      auto blocks = 1 + draw(rng, n);
      std::vector<std::vector<SemiringElement>> part(blocks);
      for (std::uint64_t i = 0; i < n; ++i)
        part[draw(rng, blocks)].push_back(fam[i]);
      std::vector<SemiringElement> block_sums;
      block_sums.reserve(blocks);
      for (const auto& blk : part) block_sums.push_back(ops.sum(blk));
      report.record("sum-partition", ops.sum(block_sums) == ops.sum(fam), [&]() {
        std::string s = "family of size " + std::to_string(n) + ": ";
        for (const auto& e : fam) s += show(ops, e) + " ";
        return s;
      });

      // Infinite distributivity restricted to finite families.
      std::vector<SemiringElement> scaled_l, scaled_r;
      for (const auto& e : fam) {
        scaled_l.push_back(ops.mul(a, e));
        scaled_r.push_back(ops.mul(e, a));
      }
      report.record("sum-distributive-left",
                    ops.sum(scaled_l) == ops.mul(a, ops.sum(fam)),
                    pair_witness("sum(a*fam) != a*sum(fam)"));
      report.record("sum-distributive-right",
                    ops.sum(scaled_r) == ops.mul(ops.sum(fam), a),
                    pair_witness("sum(fam*a) != sum(fam)*a"));
    }

    // Fubini on a random rectangular family.
    {
      auto rows = 1 + draw(rng, 4);
      auto cols = 1 + draw(rng, 4);
      std::vector<std::vector<SemiringElement>> grid(rows);
      for (auto& row : grid)
        for (std::uint64_t j = 0; j < cols; ++j) row.push_back(ops.sample(rng));
      std::vector<SemiringElement> row_sums, col_sums;
      for (const auto& row : grid) row_sums.push_back(ops.sum(row));
      for (std::uint64_t j = 0; j < cols; ++j) {
        std::vector<SemiringElement> col;
        for (const auto& row : grid) col.push_back(row[j]);
        col_sums.push_back(ops.sum(col));
      }
      report.record("sum-fubini", ops.sum(row_sums) == ops.sum(col_sums),
                    [&]() { return std::string("row-first != column-first"); });
    }

    // Repeat law: finite additivity, infinite count, and agreement with sums.
    {
      Int m(draw(rng, 5));
      Int n(draw(rng, 5));
      SemiringElement lhs = ops.repeat(Count::of(m + n), a);
      SemiringElement rhs = ops.add(ops.repeat(Count::of(m), a), ops.repeat(Count::of(n), a));
      report.record("repeat-additive", lhs == rhs, pair_witness("repeat(m+n) split"));

      std::vector<SemiringElement> copies(static_cast<size_t>(m.convert_to<long>()), a);
      report.record("repeat-agrees-with-sum",
                    ops.repeat(Count::of(m), a) == ops.sum(copies),
                    pair_witness("repeat(m,a) != iterated sum"));
      report.record("repeat-inf-zero",
                    ops.repeat(Count::inf(), ops.zero) == ops.zero,
                    [&]() { return std::string("inf * 0 != 0"); });
    }
  }
  return report;
}

}  // namespace postft
