#pragma once

#include "postft/fields.hpp"

namespace postft {

// Validation: degree-1 vertices are exactly the boundary, interior vertices
// have degree 2, so components are arcs and (simple) cycles.
void validate_graph(const GraphBordism& g);

// Component decomposition, components ordered by least vertex.
struct GraphComponents {
  std::vector<int> comp_of_vertex;
  int count = 0;
};
GraphComponents graph_components(const GraphBordism& g);

class GraphModel final : public BordismModel {
 public:
  // Sampler knobs: boundaries are kept small so state spaces stay enumerable.
  struct SampleLimits {
    int max_components = 3;
    int max_arc_edges = 3;
    int max_boundary_side = 2;
  };
  explicit GraphModel(SampleLimits limits = {}) : limits_(limits) {}

  std::string name() const override { return "graph-1d"; }
  Closed in_boundary(const Bordism&) const override;
  Closed out_boundary(const Bordism&) const override;
  Closed empty_closed() const override { return GraphClosed{0}; }
  Closed closed_union(const Closed&, const Closed&) const override;
  Bordism disjoint_union(const Bordism&, const Bordism&) const override;
  std::optional<Bordism> glue(const Bordism&, const Bordism&) const override;
  std::optional<Bordism> cylinder(const Closed&) const override;
  std::optional<std::array<Bordism, 3>> cylinder_bends(const Closed&) const override;
  int piece_count(const Bordism&) const override;
  Bordism sub_bordism(const Bordism&, const std::vector<int>& pieces) const override;
  std::pair<std::vector<int>, std::vector<int>> sub_boundary_positions(
      const Bordism&, const std::vector<int>& pieces) const override;
  std::vector<Homeo> isomorphisms(const Bordism&, const Bordism&) const override;
  BoundaryMaps boundary_maps(const Homeo&, const Bordism&, const Bordism&) const override;
  Bordism sample_bordism(std::mt19937_64&) const override;
  std::pair<Bordism, Bordism> sample_glue_pair(std::mt19937_64&) const override;
  Closed sample_closed(std::mt19937_64&) const override;
  nlohmann::json render_bordism(const Bordism&) const override;
  Bordism parse_bordism(const nlohmann::json&) const override;

 private:
  SampleLimits limits_;
};

// Graph labelings with values in a grid of `value_count` slots.
//  - locally constant: one value per component;
//  - step: one value per vertex, adjacent values differing by at most one
//    grid slot (the discrete unit-step constraint).
class GraphFields final : public FieldsSystem {
 public:
  enum class Mode { LocallyConstant, Step };
  GraphFields(Mode mode, int value_count) : mode_(mode), g_(value_count) {}

  std::string name() const override;
  std::vector<Field> fields_on_bordism(const Bordism&) const override;
  std::vector<Field> fields_on_closed(const Closed&) const override;
  int closed_field_len(const Closed&) const override;
  std::pair<Field, Field> restrict_to_boundary(const Bordism&, const Field&) const override;
  Field restrict_to_sub(const Bordism&, const Field&,
                        const std::vector<int>& pieces) const override;
  Field pullback(const Homeo&, const Bordism&, const Bordism&,
                 const Field&) const override;
  std::pair<Field, Field> split_union(const Bordism&, const Bordism&,
                                      const Field&) const override;
  Field join_union(const Bordism&, const Bordism&, const Field&,
                   const Field&) const override;
  std::optional<Field> glue_fields(const Bordism&, const Bordism&, const Field&,
                                   const Field&) const override;
  std::pair<Field, Field> unglue_fields(const Bordism&, const Bordism&,
                                        const Field&) const override;

  Mode mode() const { return mode_; }
  int value_count() const { return g_; }

 private:
  Mode mode_;
  int g_;
};

}  // namespace postft
