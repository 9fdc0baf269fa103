#include "postft/models/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace postft {

namespace {

const GraphBordism& g_of(const Bordism& b) { return std::get<GraphBordism>(b); }

std::vector<int> degrees(const GraphBordism& g) {
  std::vector<int> deg(static_cast<size_t>(g.n), 0);
  for (auto [a, b] : g.edges) {
    ++deg[static_cast<size_t>(a)];
    ++deg[static_cast<size_t>(b)];
  }
  return deg;
}

GraphBordism normalized(GraphBordism g) {
  for (auto& [a, b] : g.edges)
    if (a > b) std::swap(a, b);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// Positional identification of out(w1) with in(w2); empty on any degree or
// simplicity violation (a double edge would be a 2-cycle, which the simple
// graph carrier cannot hold).
struct GluedGraph {
  GraphBordism w;
  std::vector<int> map1, map2;  // vertex maps from w1 and w2 into w
};

std::optional<GluedGraph> glue_graphs(const GraphBordism& w1, const GraphBordism& w2) {
  if (w1.out.size() != w2.in.size()) return std::nullopt;
  GluedGraph out;
  out.map1.resize(static_cast<size_t>(w1.n));
  std::iota(out.map1.begin(), out.map1.end(), 0);
  out.map2.assign(static_cast<size_t>(w2.n), -1);
  for (size_t i = 0; i < w2.in.size(); ++i)
    out.map2[static_cast<size_t>(w2.in[i])] = w1.out[i];
  int next = w1.n;
  for (int v = 0; v < w2.n; ++v)
    if (out.map2[static_cast<size_t>(v)] < 0) out.map2[static_cast<size_t>(v)] = next++;
  out.w.n = next;
  out.w.edges = w1.edges;
  for (auto [a, b] : w2.edges)
    out.w.edges.emplace_back(out.map2[static_cast<size_t>(a)],
                             out.map2[static_cast<size_t>(b)]);
  out.w = normalized(std::move(out.w));
  if (std::adjacent_find(out.w.edges.begin(), out.w.edges.end()) != out.w.edges.end())
    return std::nullopt;
  out.w.in = w1.in;
  for (int v : w2.out) out.w.out.push_back(out.map2[static_cast<size_t>(v)]);
  try {
    validate_graph(out.w);
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

std::vector<std::vector<int>> component_vertices(const GraphBordism& g,
                                                 const GraphComponents& c) {
  std::vector<std::vector<int>> out(static_cast<size_t>(c.count));
  for (int v = 0; v < g.n; ++v)
    out[static_cast<size_t>(c.comp_of_vertex[static_cast<size_t>(v)])].push_back(v);
  return out;
}

}  // namespace

void validate_graph(const GraphBordism& g) {
  std::set<int> boundary(g.in.begin(), g.in.end());
  for (int v : g.out)
    if (!boundary.insert(v).second)
      fail(ErrorKind::InvalidInput, "boundary lists overlap");
  if (boundary.size() != g.in.size() + g.out.size())
    fail(ErrorKind::InvalidInput, "duplicate boundary vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : g.edges) {
    if (a == b) fail(ErrorKind::InvalidInput, "self-loop");
    if (a < 0 || b < 0 || a >= g.n || b >= g.n)
      fail(ErrorKind::InvalidInput, "edge endpoint out of range");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      fail(ErrorKind::InvalidInput, "duplicate edge");
  }
  auto deg = degrees(g);
  for (int v = 0; v < g.n; ++v) {
    int d = deg[static_cast<size_t>(v)];
    bool is_boundary = boundary.count(v) > 0;
    if (is_boundary && d != 1)
      fail(ErrorKind::InvalidInput, "boundary vertex of degree != 1");
    if (!is_boundary && d == 1)
      fail(ErrorKind::InvalidInput, "degree-1 vertex missing from boundary");
    if (!is_boundary && (d == 0 || d > 2))
      fail(ErrorKind::InvalidInput, "interior vertex of degree != 2");
  }
}

GraphComponents graph_components(const GraphBordism& g) {
  std::vector<int> parent(static_cast<size_t>(g.n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (auto [a, b] : g.edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
  }
  GraphComponents c;
  c.comp_of_vertex.assign(static_cast<size_t>(g.n), -1);
  std::vector<int> root_to_comp(static_cast<size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v) {
    int r = find(v);
    if (root_to_comp[static_cast<size_t>(r)] < 0) root_to_comp[static_cast<size_t>(r)] = c.count++;
    c.comp_of_vertex[static_cast<size_t>(v)] = root_to_comp[static_cast<size_t>(r)];
  }
  return c;
}

Closed GraphModel::in_boundary(const Bordism& b) const {
  return GraphClosed{static_cast<int>(g_of(b).in.size())};
}
Closed GraphModel::out_boundary(const Bordism& b) const {
  return GraphClosed{static_cast<int>(g_of(b).out.size())};
}

Closed GraphModel::closed_union(const Closed& a, const Closed& b) const {
  return GraphClosed{std::get<GraphClosed>(a).points + std::get<GraphClosed>(b).points};
}

Bordism GraphModel::disjoint_union(const Bordism& a, const Bordism& b) const {
  const GraphBordism& x = g_of(a);
  const GraphBordism& y = g_of(b);
  GraphBordism u;
  u.n = x.n + y.n;
  u.edges = x.edges;
  for (auto [p, q] : y.edges) u.edges.emplace_back(p + x.n, q + x.n);
  std::sort(u.edges.begin(), u.edges.end());
  u.in = x.in;
  for (int v : y.in) u.in.push_back(v + x.n);
  u.out = x.out;
  for (int v : y.out) u.out.push_back(v + x.n);
  return u;
}

std::optional<Bordism> GraphModel::glue(const Bordism& a, const Bordism& b) const {
  auto glued = glue_graphs(g_of(a), g_of(b));
  if (!glued) return std::nullopt;
  return Bordism{std::move(glued->w)};
}

std::optional<Bordism> GraphModel::cylinder(const Closed& m) const {
  int k = std::get<GraphClosed>(m).points;
  GraphBordism g;
  g.n = 2 * k;
  for (int i = 0; i < k; ++i) {
    g.edges.emplace_back(i, k + i);
    g.in.push_back(i);
    g.out.push_back(k + i);
  }
  return Bordism{std::move(g)};
}

std::optional<std::array<Bordism, 3>> GraphModel::cylinder_bends(const Closed& m) const {
  auto cyl = cylinder(m);
  GraphBordism c = g_of(*cyl);
  GraphBordism bend_out = c;  // empty -> M u M
  bend_out.out = c.in;
  bend_out.out.insert(bend_out.out.end(), c.out.begin(), c.out.end());
  bend_out.in.clear();
  GraphBordism bend_in = c;  // M u M -> empty
  bend_in.in = c.in;
  bend_in.in.insert(bend_in.in.end(), c.out.begin(), c.out.end());
  bend_in.out.clear();
  return std::array<Bordism, 3>{c, bend_out, bend_in};
}

int GraphModel::piece_count(const Bordism& b) const {
  return graph_components(g_of(b)).count;
}

Bordism GraphModel::sub_bordism(const Bordism& b, const std::vector<int>& pieces) const {
  const GraphBordism& g = g_of(b);
  auto comps = graph_components(g);
  std::set<int> chosen(pieces.begin(), pieces.end());
  std::vector<int> new_id(static_cast<size_t>(g.n), -1);
  GraphBordism s;
  for (int v = 0; v < g.n; ++v)
    if (chosen.count(comps.comp_of_vertex[static_cast<size_t>(v)]))
      new_id[static_cast<size_t>(v)] = s.n++;
  for (auto [a, bb] : g.edges)
    if (new_id[static_cast<size_t>(a)] >= 0)
      s.edges.emplace_back(new_id[static_cast<size_t>(a)], new_id[static_cast<size_t>(bb)]);
  for (int v : g.in)
    if (new_id[static_cast<size_t>(v)] >= 0) s.in.push_back(new_id[static_cast<size_t>(v)]);
  for (int v : g.out)
    if (new_id[static_cast<size_t>(v)] >= 0) s.out.push_back(new_id[static_cast<size_t>(v)]);
  return s;
}

std::pair<std::vector<int>, std::vector<int>> GraphModel::sub_boundary_positions(
    const Bordism& b, const std::vector<int>& pieces) const {
  const GraphBordism& g = g_of(b);
  auto comps = graph_components(g);
  std::set<int> chosen(pieces.begin(), pieces.end());
  std::pair<std::vector<int>, std::vector<int>> out;
  for (size_t i = 0; i < g.in.size(); ++i)
    if (chosen.count(comps.comp_of_vertex[static_cast<size_t>(g.in[i])]))
      out.first.push_back(static_cast<int>(i));
  for (size_t i = 0; i < g.out.size(); ++i)
    if (chosen.count(comps.comp_of_vertex[static_cast<size_t>(g.out[i])]))
      out.second.push_back(static_cast<int>(i));
  return out;
}

std::vector<Homeo> GraphModel::isomorphisms(const Bordism& a, const Bordism& b) const {
  const GraphBordism& x = g_of(a);
  const GraphBordism& y = g_of(b);
  std::vector<Homeo> result;
  if (x.n != y.n || x.edges.size() != y.edges.size() || x.in.size() != y.in.size() ||
      x.out.size() != y.out.size())
    return result;
  std::set<std::pair<int, int>> y_edges(y.edges.begin(), y.edges.end());
  std::set<int> y_in(y.in.begin(), y.in.end());
  std::set<int> y_out(y.out.begin(), y.out.end());
  std::set<int> x_in(x.in.begin(), x.in.end());
  std::set<int> x_out(x.out.begin(), x.out.end());
  auto dx = degrees(x);
  auto dy = degrees(y);

  std::vector<int> map(static_cast<size_t>(x.n), -1);
  std::vector<bool> used(static_cast<size_t>(y.n), false);
  std::vector<std::vector<int>> adj(static_cast<size_t>(x.n));
  for (auto [p, q] : x.edges) {
    adj[static_cast<size_t>(p)].push_back(q);
    adj[static_cast<size_t>(q)].push_back(p);
  }

  std::function<void(int)> rec = [&](int v) {
    if (v == x.n) {
      result.push_back(Homeo{map});
      return;
    }
    for (int w = 0; w < y.n; ++w) {
      if (used[static_cast<size_t>(w)]) continue;
      if (dx[static_cast<size_t>(v)] != dy[static_cast<size_t>(w)]) continue;
      if (x_in.count(v) != y_in.count(w) || x_out.count(v) != y_out.count(w)) continue;
      bool ok = true;
      for (int u : adj[static_cast<size_t>(v)]) {
        int mu = map[static_cast<size_t>(u)];
        if (mu < 0) continue;
        if (!y_edges.count({std::min(w, mu), std::max(w, mu)})) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(v)] = w;
      used[static_cast<size_t>(w)] = true;
      rec(v + 1);
      map[static_cast<size_t>(v)] = -1;
      used[static_cast<size_t>(w)] = false;
    }
  };
  if (x.n <= 12) rec(0);
  return result;
}

BoundaryMaps GraphModel::boundary_maps(const Homeo& phi, const Bordism& a,
                                       const Bordism& b) const {
  const GraphBordism& x = g_of(a);
  const GraphBordism& y = g_of(b);
  BoundaryMaps maps;
  auto position = [](const std::vector<int>& list, int v) {
    return static_cast<int>(std::find(list.begin(), list.end(), v) - list.begin());
  };
  for (int v : x.in) maps.in_map.push_back(position(y.in, phi.map[static_cast<size_t>(v)]));
  for (int v : x.out)
    maps.out_map.push_back(position(y.out, phi.map[static_cast<size_t>(v)]));
  return maps;
}

Bordism GraphModel::sample_bordism(std::mt19937_64& rng) const {
  GraphBordism g;
  int in_used = 0, out_used = 0;
  int n_arcs = 1 + static_cast<int>(rng() % 2);
  bool with_cycle = (rng() % 3) == 0;
  int edge_budget = 8;
  for (int a = 0; a < n_arcs; ++a) {
    int len = 1 + static_cast<int>(rng() % limits_.max_arc_edges);
    len = std::min(len, edge_budget);
    if (len < 1) break;
    edge_budget -= len;
    int first = g.n;
    for (int i = 0; i <= len; ++i) {
      if (i) g.edges.emplace_back(g.n - 1, g.n);
      ++g.n;
    }
    int last = g.n - 1;
    // Endpoint sides, respecting the per-side caps.
    for (int endpoint : {first, last}) {
      bool to_in = (rng() % 2) == 0;
      if (to_in && in_used >= limits_.max_boundary_side) to_in = false;
      if (!to_in && out_used >= limits_.max_boundary_side) to_in = true;
      if (to_in && in_used >= limits_.max_boundary_side) to_in = false;
      if (to_in) {
        g.in.push_back(endpoint);
        ++in_used;
      } else {
        g.out.push_back(endpoint);
        ++out_used;
      }
    }
  }
  if (with_cycle && edge_budget >= 3) {
    int len = 3 + static_cast<int>(rng() % 2);
    len = std::min(len, edge_budget);
    int first = g.n;
    for (int i = 0; i < len; ++i) {
      if (i) g.edges.emplace_back(g.n - 1, g.n);
      ++g.n;
    }
    g.edges.emplace_back(first, g.n - 1);
  }
  if (g.n == 0) {
    g.n = 2;
    g.edges = {{0, 1}};
    g.in = {0};
    g.out = {1};
  }
  validate_graph(g);
  return g;
}

std::pair<Bordism, Bordism> GraphModel::sample_glue_pair(std::mt19937_64& rng) const {
  int r = 1 + static_cast<int>(rng() % 2);
  // r through-arcs per side; occasionally a spare cycle on one side.
  auto make_side = [&]() {
    GraphBordism g;
    for (int i = 0; i < r; ++i) {
      int len = 1 + static_cast<int>(rng() % 2);
      int first = g.n;
      for (int j = 0; j <= len; ++j) {
        if (j) g.edges.emplace_back(g.n - 1, g.n);
        ++g.n;
      }
      g.in.push_back(first);
      g.out.push_back(g.n - 1);
    }
    if (rng() % 4 == 0) {
      int first = g.n;
      for (int i = 0; i < 3; ++i) {
        if (i) g.edges.emplace_back(g.n - 1, g.n);
        ++g.n;
      }
      g.edges.emplace_back(first, g.n - 1);
    }
    validate_graph(g);
    return g;
  };
  return {Bordism{make_side()}, Bordism{make_side()}};
}

Closed GraphModel::sample_closed(std::mt19937_64& rng) const {
  return GraphClosed{1 + static_cast<int>(rng() % 2)};
}

nlohmann::json GraphModel::render_bordism(const Bordism& b) const {
  const GraphBordism& g = g_of(b);
  nlohmann::json j;
  j["vertices"] = g.n;
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, bb] : g.edges) edges.push_back({a, bb});
  j["edges"] = edges;
  j["in"] = g.in;
  j["out"] = g.out;
  return j;
}

Bordism GraphModel::parse_bordism(const nlohmann::json& j) const {
  GraphBordism g;
  if (j.at("vertices").is_number()) {
    g.n = j.at("vertices").get<int>();
  } else {
    g.n = static_cast<int>(j.at("vertices").size());
  }
  for (const auto& e : j.at("edges"))
    g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  g.in = j.at("in").get<std::vector<int>>();
  g.out = j.at("out").get<std::vector<int>>();
  g = normalized(std::move(g));
  validate_graph(g);
  return g;
}

// --- fields -------------------------------------------------------------

std::string GraphFields::name() const {
  return mode_ == Mode::LocallyConstant ? "graph-locally-constant" : "graph-step";
}

namespace {

// Valid step labelings of one component: adjacent values differ by at most
// one grid slot.
std::vector<std::vector<int>> step_labelings(const std::vector<int>& verts,
                                             const std::vector<std::pair<int, int>>& edges,
                                             int g) {
  std::vector<int> order = verts;  // ascending vertex ids
  std::vector<std::vector<int>> adjacency(verts.size());
  auto pos_of = [&](int v) {
    return static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
  };
  for (auto [a, b] : edges) {
    auto ia = pos_of(a);
    auto ib = pos_of(b);
    if (ia < static_cast<int>(order.size()) && ib < static_cast<int>(order.size())) {
      adjacency[static_cast<size_t>(ia)].push_back(ib);
      adjacency[static_cast<size_t>(ib)].push_back(ia);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur(order.size(), -1);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == order.size()) {
      out.push_back(cur);
      return;
    }
    for (int val = 0; val < g; ++val) {
      bool ok = true;
      for (int nb : adjacency[i]) {
        if (cur[static_cast<size_t>(nb)] < 0) continue;
        if (std::abs(cur[static_cast<size_t>(nb)] - val) > 1) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur[i] = val;
      rec(i + 1);
      cur[i] = -1;
    }
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<Field> GraphFields::fields_on_bordism(const Bordism& b) const {
  const GraphBordism& g = std::get<GraphBordism>(b);
  auto comps = graph_components(g);
  std::vector<Field> out;
  if (mode_ == Mode::LocallyConstant) {
    std::vector<int> cur(static_cast<size_t>(comps.count), 0);
    while (true) {
      out.push_back(Field{cur});
      int i = comps.count - 1;
      while (i >= 0 && cur[static_cast<size_t>(i)] == g_ - 1) cur[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++cur[static_cast<size_t>(i)];
    }
    if (comps.count == 0) return {Field{{}}};
    return out;
  }
  // Step mode: product of per-component labelings, assembled per vertex.
  std::vector<std::vector<int>> comp_verts(static_cast<size_t>(comps.count));
  for (int v = 0; v < g.n; ++v)
    comp_verts[static_cast<size_t>(comps.comp_of_vertex[static_cast<size_t>(v)])].push_back(v);
  std::vector<std::vector<std::vector<int>>> per_comp;
  for (int c = 0; c < comps.count; ++c) {
    std::vector<std::pair<int, int>> comp_edges;
    for (auto [a, bb] : g.edges)
      if (comps.comp_of_vertex[static_cast<size_t>(a)] == c) comp_edges.emplace_back(a, bb);
    per_comp.push_back(step_labelings(comp_verts[static_cast<size_t>(c)], comp_edges, g_));
  }
  std::vector<int> pick(static_cast<size_t>(comps.count), 0);
  while (true) {
    Field f;
    f.v.assign(static_cast<size_t>(g.n), 0);
    for (int c = 0; c < comps.count; ++c) {
      const auto& lab = per_comp[static_cast<size_t>(c)][static_cast<size_t>(pick[static_cast<size_t>(c)])];
      for (size_t i = 0; i < comp_verts[static_cast<size_t>(c)].size(); ++i)
        f.v[static_cast<size_t>(comp_verts[static_cast<size_t>(c)][i])] = lab[i];
    }
    out.push_back(std::move(f));
    int i = comps.count - 1;
    while (i >= 0 &&
           pick[static_cast<size_t>(i)] + 1 >=
               static_cast<int>(per_comp[static_cast<size_t>(i)].size()))
      pick[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++pick[static_cast<size_t>(i)];
  }
  if (comps.count == 0) return {Field{{}}};
  return out;
}

std::vector<Field> GraphFields::fields_on_closed(const Closed& m) const {
  int pts = std::get<GraphClosed>(m).points;
  std::vector<Field> out;
  std::vector<int> cur(static_cast<size_t>(pts), 0);
  while (true) {
    out.push_back(Field{cur});
    int i = pts - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == g_ - 1) cur[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
  return out;
}

int GraphFields::closed_field_len(const Closed& m) const {
  return std::get<GraphClosed>(m).points;
}

std::pair<Field, Field> GraphFields::restrict_to_boundary(const Bordism& b,
                                                          const Field& f) const {
  const GraphBordism& g = std::get<GraphBordism>(b);
  Field fin, fout;
  if (mode_ == Mode::LocallyConstant) {
    auto comps = graph_components(g);
    for (int v : g.in)
      fin.v.push_back(f.v[static_cast<size_t>(comps.comp_of_vertex[static_cast<size_t>(v)])]);
    for (int v : g.out)
      fout.v.push_back(f.v[static_cast<size_t>(comps.comp_of_vertex[static_cast<size_t>(v)])]);
  } else {
    for (int v : g.in) fin.v.push_back(f.v[static_cast<size_t>(v)]);
    for (int v : g.out) fout.v.push_back(f.v[static_cast<size_t>(v)]);
  }
  return {fin, fout};
}

Field GraphFields::restrict_to_sub(const Bordism& b, const Field& f,
                                   const std::vector<int>& pieces) const {
  const GraphBordism& g = std::get<GraphBordism>(b);
  auto comps = graph_components(g);
  std::set<int> chosen(pieces.begin(), pieces.end());
  Field out;
  if (mode_ == Mode::LocallyConstant) {
    // Subgraph components inherit the ordering by least ambient vertex, which
    // is the ambient component order restricted to the chosen pieces.
    for (int c = 0; c < comps.count; ++c)
      if (chosen.count(c)) out.v.push_back(f.v[static_cast<size_t>(c)]);
  } else {
    for (int v = 0; v < g.n; ++v)
      if (chosen.count(comps.comp_of_vertex[static_cast<size_t>(v)]))
        out.v.push_back(f.v[static_cast<size_t>(v)]);
  }
  return out;
}

Field GraphFields::pullback(const Homeo& phi, const Bordism& a, const Bordism& b,
                            const Field& f) const {
  const GraphBordism& x = std::get<GraphBordism>(a);
  const GraphBordism& y = std::get<GraphBordism>(b);
  Field out;
  if (mode_ == Mode::LocallyConstant) {
    auto cx = graph_components(x);
    auto cy = graph_components(y);
    out.v.assign(static_cast<size_t>(cx.count), 0);
    for (int v = 0; v < x.n; ++v)
      out.v[static_cast<size_t>(cx.comp_of_vertex[static_cast<size_t>(v)])] =
          f.v[static_cast<size_t>(cy.comp_of_vertex[static_cast<size_t>(phi.map[static_cast<size_t>(v)])])];
  } else {
    out.v.assign(static_cast<size_t>(x.n), 0);
    for (int v = 0; v < x.n; ++v)
      out.v[static_cast<size_t>(v)] = f.v[static_cast<size_t>(phi.map[static_cast<size_t>(v)])];
  }
  return out;
}

std::pair<Field, Field> GraphFields::split_union(const Bordism& a, const Bordism& b,
                                                 const Field& f) const {
  size_t cut;
  if (mode_ == Mode::LocallyConstant) {
    cut = static_cast<size_t>(graph_components(std::get<GraphBordism>(a)).count);
  } else {
    cut = static_cast<size_t>(std::get<GraphBordism>(a).n);
  }
  Field f1, f2;
  f1.v.assign(f.v.begin(), f.v.begin() + static_cast<long>(cut));
  f2.v.assign(f.v.begin() + static_cast<long>(cut), f.v.end());
  return {f1, f2};
}

Field GraphFields::join_union(const Bordism&, const Bordism&, const Field& f,
                              const Field& f2) const {
  Field out = f;
  out.v.insert(out.v.end(), f2.v.begin(), f2.v.end());
  return out;
}

std::optional<Field> GraphFields::glue_fields(const Bordism& a, const Bordism& b,
                                              const Field& f1, const Field& f2) const {
  auto glued = glue_graphs(std::get<GraphBordism>(a), std::get<GraphBordism>(b));
  if (!glued) fail(ErrorKind::InvalidArgument, "bordisms do not glue");
  const GraphBordism& x = std::get<GraphBordism>(a);
  const GraphBordism& y = std::get<GraphBordism>(b);
  // Restrictions must agree on the glued boundary.
  auto [fin1, fout1] = restrict_to_boundary(a, f1);
  auto [fin2, fout2] = restrict_to_boundary(b, f2);
  if (fout1 != fin2) return std::nullopt;
  Field out;
  if (mode_ == Mode::LocallyConstant) {
    auto cw = graph_components(glued->w);
    auto cx = graph_components(x);
    auto cy = graph_components(y);
    out.v.assign(static_cast<size_t>(cw.count), -1);
    for (int v = 0; v < x.n; ++v)
      out.v[static_cast<size_t>(cw.comp_of_vertex[static_cast<size_t>(glued->map1[static_cast<size_t>(v)])])] =
          f1.v[static_cast<size_t>(cx.comp_of_vertex[static_cast<size_t>(v)])];
    for (int v = 0; v < y.n; ++v) {
      int w_comp = cw.comp_of_vertex[static_cast<size_t>(glued->map2[static_cast<size_t>(v)])];
      int val = f2.v[static_cast<size_t>(cy.comp_of_vertex[static_cast<size_t>(v)])];
      if (out.v[static_cast<size_t>(w_comp)] >= 0 && out.v[static_cast<size_t>(w_comp)] != val)
        return std::nullopt;  // inconsistent across a merged component
      out.v[static_cast<size_t>(w_comp)] = val;
    }
  } else {
    out.v.assign(static_cast<size_t>(glued->w.n), -1);
    for (int v = 0; v < x.n; ++v)
      out.v[static_cast<size_t>(glued->map1[static_cast<size_t>(v)])] = f1.v[static_cast<size_t>(v)];
    for (int v = 0; v < y.n; ++v) {
      int w = glued->map2[static_cast<size_t>(v)];
      if (out.v[static_cast<size_t>(w)] >= 0 && out.v[static_cast<size_t>(w)] != f2.v[static_cast<size_t>(v)])
        return std::nullopt;
      out.v[static_cast<size_t>(w)] = f2.v[static_cast<size_t>(v)];
    }
  }
  return out;
}

std::pair<Field, Field> GraphFields::unglue_fields(const Bordism& a, const Bordism& b,
                                                   const Field& f) const {
  auto glued = glue_graphs(std::get<GraphBordism>(a), std::get<GraphBordism>(b));
  if (!glued) fail(ErrorKind::InvalidArgument, "bordisms do not glue");
  const GraphBordism& x = std::get<GraphBordism>(a);
  const GraphBordism& y = std::get<GraphBordism>(b);
  Field f1, f2;
  if (mode_ == Mode::LocallyConstant) {
    auto cw = graph_components(glued->w);
    auto cx = graph_components(x);
    auto cy = graph_components(y);
    f1.v.assign(static_cast<size_t>(cx.count), 0);
    for (int v = 0; v < x.n; ++v)
      f1.v[static_cast<size_t>(cx.comp_of_vertex[static_cast<size_t>(v)])] =
          f.v[static_cast<size_t>(cw.comp_of_vertex[static_cast<size_t>(glued->map1[static_cast<size_t>(v)])])];
    f2.v.assign(static_cast<size_t>(cy.count), 0);
    for (int v = 0; v < y.n; ++v)
      f2.v[static_cast<size_t>(cy.comp_of_vertex[static_cast<size_t>(v)])] =
          f.v[static_cast<size_t>(cw.comp_of_vertex[static_cast<size_t>(glued->map2[static_cast<size_t>(v)])])];
  } else {
    for (int v = 0; v < x.n; ++v)
      f1.v.push_back(f.v[static_cast<size_t>(glued->map1[static_cast<size_t>(v)])]);
    for (int v = 0; v < y.n; ++v)
      f2.v.push_back(f.v[static_cast<size_t>(glued->map2[static_cast<size_t>(v)])]);
  }
  return {f1, f2};
}

}  // namespace postft
