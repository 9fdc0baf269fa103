#include "postft/groundset.hpp"

#include <algorithm>
#include <set>

namespace postft {

GroundSetPtr GroundSet::atom(std::string name, std::vector<std::string> labels) {
  if (labels.empty()) fail(ErrorKind::InvalidArgument, "empty ground set " + name);
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    fail(ErrorKind::InvalidArgument, "duplicate keys in ground set " + name);
  auto g = std::shared_ptr<GroundSet>(new GroundSet());
  g->name_ = std::move(name);
  g->labels_ = std::move(labels);
  g->size_ = g->labels_.size();
  return g;
}

GroundSetPtr GroundSet::product(std::vector<GroundSetPtr> factors) {
  if (factors.size() < 2 || factors.size() > 4)
    fail(ErrorKind::InvalidArgument, "ground-set products take 2..4 factors");
  auto g = std::shared_ptr<GroundSet>(new GroundSet());
  g->size_ = 1;
  for (const auto& f : factors) g->size_ *= f->size();
  g->name_ = "(";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) g->name_ += "x";
    g->name_ += factors[i]->name();
  }
  g->name_ += ")";
  g->factors_ = std::move(factors);
  return g;
}

void GroundSet::collect_leaves(std::vector<const GroundSet*>& out) const {
  if (is_atom()) {
    out.push_back(this);
    return;
  }
  for (const auto& f : factors_) f->collect_leaves(out);
}

std::vector<const GroundSet*> GroundSet::leaves() const {
  std::vector<const GroundSet*> out;
  collect_leaves(out);
  return out;
}

std::vector<std::uint64_t> GroundSet::split_key(std::uint64_t key) const {
  if (is_atom()) return {key};
  std::vector<std::uint64_t> parts(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    parts[i] = key % factors_[i]->size();
    key /= factors_[i]->size();
  }
  return parts;
}

std::uint64_t GroundSet::join_key(const std::vector<std::uint64_t>& parts) const {
  if (is_atom()) return parts.at(0);
  if (parts.size() != factors_.size())
    fail(ErrorKind::GroundSetMismatch, "key arity mismatch");
  std::uint64_t key = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (parts[i] >= factors_[i]->size())
      fail(ErrorKind::GroundSetMismatch, "key out of range");
    key = key * factors_[i]->size() + parts[i];
  }
  return key;
}

std::string GroundSet::render_key(std::uint64_t key) const {
  if (is_atom()) return labels_.at(key);
  auto parts = split_key(key);
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += factors_[i]->render_key(parts[i]);
  }
  return s + ")";
}

bool same_ground_set(const GroundSet& a, const GroundSet& b) {
  auto la = a.leaves();
  auto lb = b.leaves();
  if (la.size() != lb.size()) return false;
  for (size_t i = 0; i < la.size(); ++i) {
    if (la[i] == lb[i]) continue;
    if (la[i]->name() != lb[i]->name() || la[i]->labels() != lb[i]->labels())
      return false;
  }
  return true;
}

}  // namespace postft
