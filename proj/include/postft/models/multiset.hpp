#pragma once

#include "postft/fields.hpp"

namespace postft {

MultisetBordism multiset_of(std::int64_t n);  // prime factorization, 1 <= n <= 10^6
std::int64_t multiset_value(const MultisetBordism& w);

class MultisetModel final : public BordismModel {
 public:
  std::string name() const override { return "prime-multisets"; }
  Closed in_boundary(const Bordism&) const override { return EmptyClosed{}; }
  Closed out_boundary(const Bordism&) const override { return EmptyClosed{}; }
  Closed empty_closed() const override { return EmptyClosed{}; }
  Closed closed_union(const Closed&, const Closed&) const override {
    return EmptyClosed{};
  }
  Bordism disjoint_union(const Bordism&, const Bordism&) const override;
  std::optional<Bordism> glue(const Bordism&, const Bordism&) const override;
  std::optional<Bordism> cylinder(const Closed&) const override;
  std::optional<std::array<Bordism, 3>> cylinder_bends(const Closed&) const override;
  int piece_count(const Bordism&) const override;
  Bordism sub_bordism(const Bordism&, const std::vector<int>&) const override;
  std::pair<std::vector<int>, std::vector<int>> sub_boundary_positions(
      const Bordism&, const std::vector<int>&) const override {
    return {};
  }
  std::vector<Homeo> isomorphisms(const Bordism&, const Bordism&) const override;
  BoundaryMaps boundary_maps(const Homeo&, const Bordism&, const Bordism&) const override {
    return {};
  }
  Bordism sample_bordism(std::mt19937_64&) const override;
  std::pair<Bordism, Bordism> sample_glue_pair(std::mt19937_64&) const override;
  Closed sample_closed(std::mt19937_64&) const override { return EmptyClosed{}; }
  nlohmann::json render_bordism(const Bordism&) const override;
  Bordism parse_bordism(const nlohmann::json&) const override;
};

// Fields are multisubsets: one multiplicity slot per prime slot of the
// bordism, 0 <= chosen <= multiplicity.
class MultisetFields final : public FieldsSystem {
 public:
  std::string name() const override { return "divisor-fields"; }
  std::vector<Field> fields_on_bordism(const Bordism&) const override;
  std::vector<Field> fields_on_closed(const Closed&) const override {
    return {Field{{}}};
  }
  int closed_field_len(const Closed&) const override { return 0; }
  std::pair<Field, Field> restrict_to_boundary(const Bordism&, const Field&) const override {
    return {Field{{}}, Field{{}}};
  }
  Field restrict_to_sub(const Bordism&, const Field&,
                        const std::vector<int>&) const override;
  Field pullback(const Homeo&, const Bordism&, const Bordism&, const Field&) const override;
  std::pair<Field, Field> split_union(const Bordism&, const Bordism&,
                                      const Field&) const override;
  Field join_union(const Bordism&, const Bordism&, const Field&, const Field&) const override;
  std::optional<Field> glue_fields(const Bordism&, const Bordism&, const Field&,
                                   const Field&) const override;
  std::pair<Field, Field> unglue_fields(const Bordism&, const Bordism&,
                                        const Field&) const override;
};

}  // namespace postft
