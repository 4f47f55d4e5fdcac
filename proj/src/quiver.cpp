#include "demazure/quiver.hpp"

#include <nlohmann/json.hpp>

#include "demazure/sl2.hpp"

namespace demazure {

namespace {

size_t total_dim(const DimVector& v) {
  size_t s = 0;
  for (long long x : v) s += static_cast<size_t>(x);
  return s;
}

size_t dims_of(const std::vector<Mat>& spaces) {
  size_t s = 0;
  for (const Mat& m : spaces) s += m.cols();
  return s;
}

Rat parse_entry(const nlohmann::json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return rat_from_int(j.get<long long>());
  throw Error(ErrorCode::bad_input,
              "matrix entries must be integers or \"p/q\" strings");
}

Mat parse_matrix(const nlohmann::json& j, size_t rows, size_t cols,
                 const std::string& what) {
  if (!j.is_array() || j.size() != rows) {
    throw Error(ErrorCode::bad_input, what + ": expected " +
                                          std::to_string(rows) + " rows");
  }
  Mat m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) {
      throw Error(ErrorCode::bad_input, what + ": expected " +
                                            std::to_string(cols) + " columns");
    }
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = parse_entry(j[r][c]);
  }
  return m;
}

}  // namespace

DoubledQuiver::DoubledQuiver(const DynkinGraph& g,
                             std::optional<std::vector<int>> orientation)
    : graph_(g) {
  graph_.validate();
  int edges = static_cast<int>(graph_.edges.size());
  out_.resize(static_cast<size_t>(2 * edges));
  inc_.resize(static_cast<size_t>(2 * edges));
  eps_.assign(static_cast<size_t>(2 * edges), -1);
  for (int k = 0; k < edges; ++k) {
    auto [i, j] = graph_.edges[static_cast<size_t>(k)];
    out_[static_cast<size_t>(2 * k)] = i;
    inc_[static_cast<size_t>(2 * k)] = j;
    out_[static_cast<size_t>(2 * k + 1)] = j;
    inc_[static_cast<size_t>(2 * k + 1)] = i;
  }
  if (!orientation) {
    for (int k = 0; k < edges; ++k) eps_[static_cast<size_t>(2 * k)] = 1;
    return;
  }
  std::vector<bool> edge_oriented(static_cast<size_t>(edges), false);
  for (int a : *orientation) {
    if (a < 0 || a >= 2 * edges) {
      throw Error(ErrorCode::bad_input, "orientation arrow id out of range");
    }
    size_t e = static_cast<size_t>(a / 2);
    if (edge_oriented[e]) {
      throw Error(ErrorCode::bad_input, "orientation picks an edge twice");
    }
    edge_oriented[e] = true;
    eps_[static_cast<size_t>(a)] = 1;
  }
  for (bool b : edge_oriented) {
    if (!b) {
      throw Error(ErrorCode::bad_input, "orientation misses an edge");
    }
  }
}

QuiverRep QuiverRep::zero(const DoubledQuiver& q, DimVector v, DimVector d) {
  QuiverRep rep;
  rep.v = std::move(v);
  rep.d = std::move(d);
  for (int a = 0; a < q.arrow_count(); ++a) {
    rep.x.emplace_back(static_cast<size_t>(rep.v[q.inc(a)]),
                       static_cast<size_t>(rep.v[q.out(a)]));
  }
  for (int i = 0; i < q.vertex_count(); ++i) {
    rep.t.emplace_back(static_cast<size_t>(rep.d[i]),
                       static_cast<size_t>(rep.v[i]));
  }
  rep.check_shapes(q);
  return rep;
}

void QuiverRep::check_shapes(const DoubledQuiver& q) const {
  int n = q.vertex_count();
  if (static_cast<int>(v.size()) != n || static_cast<int>(d.size()) != n) {
    throw Error(ErrorCode::bad_input, "rep dimension vectors have wrong length");
  }
  for (long long k : v) {
    if (k < 0) throw Error(ErrorCode::bad_input, "negative dimension in v");
  }
  for (long long k : d) {
    if (k < 0) throw Error(ErrorCode::bad_input, "negative dimension in d");
  }
  if (static_cast<int>(x.size()) != q.arrow_count() ||
      static_cast<int>(t.size()) != n) {
    throw Error(ErrorCode::bad_input, "rep is missing matrices");
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (x[static_cast<size_t>(a)].rows() != static_cast<size_t>(v[q.inc(a)]) ||
        x[static_cast<size_t>(a)].cols() != static_cast<size_t>(v[q.out(a)])) {
      throw Error(ErrorCode::bad_input, "arrow matrix shape mismatch");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (t[static_cast<size_t>(i)].rows() != static_cast<size_t>(d[i]) ||
        t[static_cast<size_t>(i)].cols() != static_cast<size_t>(v[i])) {
      throw Error(ErrorCode::bad_input, "framing matrix shape mismatch");
    }
  }
}

std::vector<Mat> moment_residual(const DoubledQuiver& q, const QuiverRep& rep) {
  rep.check_shapes(q);
  std::vector<Mat> psi;
  psi.reserve(static_cast<size_t>(q.vertex_count()));
  for (int i = 0; i < q.vertex_count(); ++i) {
    Mat acc(static_cast<size_t>(rep.v[i]), static_cast<size_t>(rep.v[i]));
    for (int a = 0; a < q.arrow_count(); ++a) {
      if (q.inc(a) != i) continue;
      Mat prod = rep.x[static_cast<size_t>(a)] *
                 rep.x[static_cast<size_t>(q.bar(a))];
      acc = (q.eps(a) > 0) ? acc + prod : acc - prod;
    }
    psi.push_back(std::move(acc));
  }
  return psi;
}

std::optional<int> nilpotency_order(const DoubledQuiver& q,
                                    const QuiverRep& rep) {
  rep.check_shapes(q);
  int n = q.vertex_count();
  std::vector<Mat> w;
  for (int i = 0; i < n; ++i) {
    w.push_back(Mat::identity(static_cast<size_t>(rep.v[i])));
  }
  size_t dim = dims_of(w);
  int order = 0;
  while (dim != 0) {
    std::vector<Mat> next;
    for (int i = 0; i < n; ++i) {
      Mat acc(static_cast<size_t>(rep.v[i]), 0);
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.inc(a) != i) continue;
        acc = hstack(acc, rep.x[static_cast<size_t>(a)] *
                              w[static_cast<size_t>(q.out(a))]);
      }
      next.push_back(colspace_basis(acc));
    }
    size_t next_dim = dims_of(next);
    if (next_dim == dim) return std::nullopt;  // chain stagnated above zero
    w = std::move(next);
    dim = next_dim;
    ++order;
  }
  return order;
}

bool is_nilpotent(const DoubledQuiver& q, const QuiverRep& rep) {
  return nilpotency_order(q, rep).has_value();
}

bool is_stable(const DoubledQuiver& q, const QuiverRep& rep) {
  rep.check_shapes(q);
  int n = q.vertex_count();
  std::vector<Mat> s;
  for (int i = 0; i < n; ++i) {
    s.push_back(kernel_basis(rep.t[static_cast<size_t>(i)]));
  }
  while (true) {
    std::vector<Mat> next;
    for (int i = 0; i < n; ++i) {
      Mat cur = s[static_cast<size_t>(i)];
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.out(a) != i) continue;
        cur = intersect_columns(
            cur, preimage_basis(rep.x[static_cast<size_t>(a)],
                                s[static_cast<size_t>(q.inc(a))]));
      }
      next.push_back(std::move(cur));
    }
    if (dims_of(next) == dims_of(s)) {
      return dims_of(next) == 0;
    }
    s = std::move(next);
  }
}

Rat nakajima_dim(const CartanMatrix& C, const DimVector& v,
                 const DimVector& d) {
  if (static_cast<int>(v.size()) != C.rank() ||
      static_cast<int>(d.size()) != C.rank()) {
    throw Error(ErrorCode::bad_input, "dimension vector length mismatch");
  }
  Rat acc = 0;
  for (int i = 0; i < C.rank(); ++i) {
    acc += rat_from_int(v[i]) * rat_from_int(2 * d[i] - C.row_dot(i, v));
  }
  return acc / 2;
}

DimVector extremal_dim_vector(const CartanMatrix& C, const DimVector& d,
                              const WeylWord& word) {
  return weight_action_v(C, reduce(C, word), d);
}

std::optional<WeylWord> find_extremal(const CartanMatrix& C, const DimVector& d,
                                      const DimVector& v, int Lmax) {
  for (const WeylWord& w : elements_up_to_length(C, Lmax)) {
    if (extremal_dim_vector(C, d, w) == v) return w;
  }
  return std::nullopt;
}

bool is_sl2_affine(const DynkinGraph& g) {
  if (g.vertices != 2 || g.edges.size() != 2) return false;
  for (auto [i, j] : g.edges) {
    if (i + j != 1) return false;
  }
  return true;
}

bool check_sl2_demazure_membership(const DoubledQuiver& q, const QuiverRep& rep,
                                   const WeylWord& w) {
  if (!is_sl2_affine(q.graph())) {
    throw Error(ErrorCode::not_a_variety_point,
                "membership check needs the affine sl2 doubled quiver");
  }
  rep.check_shapes(q);
  for (const Mat& psi : moment_residual(q, rep)) {
    if (!psi.is_zero()) {
      throw Error(ErrorCode::not_a_variety_point,
                  "moment map residual is nonzero");
    }
  }
  CartanMatrix C(q.graph());
  if (!is_stable(q, rep)) {
    throw Error(ErrorCode::not_a_variety_point, "representation is unstable");
  }
  WeylWord red = reduce(C, w);
  std::optional<int> order = nilpotency_order(q, rep);
  if (!order) return false;
  if (red.letters.empty()) return *order == 0;  // identity: only v = 0 remains
  char sign = (red.letters.back() == 1) ? '-' : '+';
  int m = sl2::m_bound(rep.d[0], rep.d[1], red.size(), sign);
  return *order <= m;
}

std::pair<DoubledQuiver, QuiverRep> rep_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input, std::string("bad rep JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("graph")) {
    throw Error(ErrorCode::bad_input, "rep JSON needs a \"graph\" object");
  }
  DynkinGraph g = DynkinGraph::from_json_text(j["graph"].dump());
  std::optional<std::vector<int>> orientation;
  if (j.contains("orientation")) {
    orientation = j["orientation"].get<std::vector<int>>();
  }
  DoubledQuiver q(g, orientation);

  QuiverRep rep;
  try {
    rep.v = j.at("v").get<DimVector>();
    rep.d = j.at("d").get<DimVector>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input, std::string("bad rep JSON: ") + e.what());
  }
  if (static_cast<int>(rep.v.size()) != g.vertices ||
      static_cast<int>(rep.d.size()) != g.vertices) {
    throw Error(ErrorCode::bad_input, "v/d length does not match vertex count");
  }
  QuiverRep zero = QuiverRep::zero(q, rep.v, rep.d);
  rep.x = zero.x;
  rep.t = zero.t;
  if (j.contains("x")) {
    for (auto& [key, val] : j["x"].items()) {
      int a = 0;
      try {
        a = std::stoi(key);
      } catch (const std::exception&) {
        throw Error(ErrorCode::bad_input, "arrow key is not an integer: " + key);
      }
      if (a < 0 || a >= q.arrow_count()) {
        throw Error(ErrorCode::bad_input, "arrow id out of range: " + key);
      }
      rep.x[static_cast<size_t>(a)] =
          parse_matrix(val, static_cast<size_t>(rep.v[q.inc(a)]),
                       static_cast<size_t>(rep.v[q.out(a)]), "x[" + key + "]");
    }
  }
  if (j.contains("t")) {
    for (auto& [key, val] : j["t"].items()) {
      int i = 0;
      try {
        i = std::stoi(key);
      } catch (const std::exception&) {
        throw Error(ErrorCode::bad_input, "vertex key is not an integer: " + key);
      }
      if (i < 0 || i >= g.vertices) {
        throw Error(ErrorCode::bad_input, "vertex id out of range: " + key);
      }
      rep.t[static_cast<size_t>(i)] =
          parse_matrix(val, static_cast<size_t>(rep.d[i]),
                       static_cast<size_t>(rep.v[i]), "t[" + key + "]");
    }
  }
  rep.check_shapes(q);
  return {std::move(q), std::move(rep)};
}

std::string rep_to_json_text(const DoubledQuiver& q, const QuiverRep& rep) {
  rep.check_shapes(q);
  nlohmann::json j;
  j["graph"]["vertices"] = q.graph().vertices;
  j["graph"]["edges"] = nlohmann::json::array();
  for (auto [a, b] : q.graph().edges) {
    j["graph"]["edges"].push_back({a, b});
  }
  std::vector<int> orientation;
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (q.eps(a) > 0) orientation.push_back(a);
  }
  j["orientation"] = orientation;
  j["v"] = rep.v;
  j["d"] = rep.d;
  j["x"] = nlohmann::json::object();
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Mat& m = rep.x[static_cast<size_t>(a)];
    if (m.is_zero()) continue;
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
      rows.push_back(row);
    }
    j["x"][std::to_string(a)] = rows;
  }
  j["t"] = nlohmann::json::object();
  for (int i = 0; i < q.vertex_count(); ++i) {
    const Mat& m = rep.t[static_cast<size_t>(i)];
    if (m.is_zero()) continue;
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).get_str());
      rows.push_back(row);
    }
    j["t"][std::to_string(i)] = rows;
  }
  return j.dump(2);
}

}  // namespace demazure
