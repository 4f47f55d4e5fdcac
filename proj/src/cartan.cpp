#include "demazure/cartan.hpp"

#include <nlohmann/json.hpp>

namespace demazure {

void DynkinGraph::validate() const {
  if (vertices < 1) {
    throw Error(ErrorCode::invalid_graph, "graph needs at least one vertex");
  }
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= vertices || j >= vertices) {
      throw Error(ErrorCode::invalid_graph, "edge endpoint out of range");
    }
    if (i == j) {
      throw Error(ErrorCode::invalid_graph, "loop edges are not allowed");
    }
  }
}

DynkinGraph DynkinGraph::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input, std::string("bad graph JSON: ") + e.what());
  }
  DynkinGraph g;
  try {
    g.vertices = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
      g.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input, std::string("bad graph JSON: ") + e.what());
  }
  g.validate();
  return g;
}

CartanMatrix::CartanMatrix(const DynkinGraph& g) : n_(g.vertices) {
  g.validate();
  a_.assign(static_cast<size_t>(n_) * n_, 0);
  for (int i = 0; i < n_; ++i) a_[static_cast<size_t>(i) * n_ + i] = 2;
  for (auto [i, j] : g.edges) {
    a_[static_cast<size_t>(i) * n_ + j] -= 1;
    a_[static_cast<size_t>(j) * n_ + i] -= 1;
  }
}

long long CartanMatrix::row_dot(int i, const DimVector& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw Error(ErrorCode::bad_input, "dimension vector has wrong length");
  }
  long long s = 0;
  for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
  return s;
}

CartanMatrix cartan_from_graph(const DynkinGraph& g) { return CartanMatrix(g); }

long long pairing(const CartanMatrix& C, const Weight& mu, int i) {
  if (i < 0 || i >= C.rank()) {
    throw Error(ErrorCode::bad_input, "vertex index out of range");
  }
  if (static_cast<int>(mu.d.size()) != C.rank() ||
      static_cast<int>(mu.v.size()) != C.rank()) {
    throw Error(ErrorCode::bad_input, "weight has wrong length");
  }
  return mu.d[i] - C.row_dot(i, mu.v);
}

Weight simple_reflection(const CartanMatrix& C, int i, const Weight& mu) {
  Weight out = mu;
  out.v[i] += pairing(C, mu, i);
  return out;
}

DynkinGraph sl2_affine_graph() { return DynkinGraph{2, {{0, 1}, {0, 1}}}; }

DynkinGraph a2_graph() { return DynkinGraph{2, {{0, 1}}}; }

DynkinGraph a2_affine_graph() { return DynkinGraph{3, {{0, 1}, {1, 2}, {0, 2}}}; }

DynkinGraph d4_star_graph() { return DynkinGraph{4, {{0, 1}, {0, 2}, {0, 3}}}; }

}  // namespace demazure
