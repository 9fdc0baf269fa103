#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "postft/error.hpp"

namespace postft {

class GroundSet;
using GroundSetPtr = std::shared_ptr<const GroundSet>;

// A finite ground set: an atom (named list of distinct keys) or an ordered
// product of 2..4 factor ground sets. Keys are flat row-major indices over
// the leaf atoms, so re-bracketing a product is the identity on keys (the
// associator costs nothing).
class GroundSet {
 public:
  static GroundSetPtr atom(std::string name, std::vector<std::string> labels);
  static GroundSetPtr product(std::vector<GroundSetPtr> factors);

  bool is_atom() const { return factors_.empty(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<GroundSetPtr>& factors() const { return factors_; }

  std::uint64_t size() const { return size_; }

  // Leaf atoms in left-to-right order.
  void collect_leaves(std::vector<const GroundSet*>& out) const;
  std::vector<const GroundSet*> leaves() const;

  // Row-major key arithmetic over the immediate factors.
  std::vector<std::uint64_t> split_key(std::uint64_t key) const;
  std::uint64_t join_key(const std::vector<std::uint64_t>& parts) const;

  std::string render_key(std::uint64_t key) const;

 private:
  GroundSet() = default;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<GroundSetPtr> factors_;
  std::uint64_t size_ = 0;
};

// Structural equality on the flattened leaf sequence.
bool same_ground_set(const GroundSet& a, const GroundSet& b);

}  // namespace postft
