#include "demazure/sl2.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace demazure::sl2 {

namespace {

// Signature order of the wall tuple: column-1 walls before column-0 walls.
// Fixed empirically against the closed-form Demazure dimensions and the
// subpyramid description of the Demazure sets; flipping it breaks both.
constexpr bool kColumnOneWallsFirst = true;

struct SignSymbol {
  int factor;
  char sign;
};

// Bracket reduction of a (+,-) string: returns the factor owning the leftmost
// surviving '+' (for f) and the rightmost surviving '-' (for e).
struct ReducedSignature {
  std::optional<int> f_factor;
  std::optional<int> e_factor;
};

ReducedSignature reduce_signature(const std::vector<SignSymbol>& syms) {
  std::vector<int> plus_stack;  // factors of unmatched '+'
  std::optional<int> last_minus;
  for (const SignSymbol& s : syms) {
    if (s.sign == '+') {
      plus_stack.push_back(s.factor);
    } else if (!plus_stack.empty()) {
      plus_stack.pop_back();
    } else {
      last_minus = s.factor;
    }
  }
  ReducedSignature out;
  if (!plus_stack.empty()) out.f_factor = plus_stack.front();
  out.e_factor = last_minus;
  return out;
}

int wall_phi(const Wall& w, int i, int flip) {
  int n = 0;
  Wall cur = w;
  while (std::optional<Wall> nxt = wall_f(cur, i, flip)) {
    cur = *nxt;
    ++n;
  }
  return n;
}

int wall_eps(const Wall& w, int i, int flip) {
  int n = 0;
  Wall cur = w;
  while (std::optional<Wall> nxt = wall_e(cur, i, flip)) {
    cur = *nxt;
    ++n;
  }
  return n;
}

int ground_label(const Wall& w, const ModelParams& p) {
  // The fundamental weight the factor carries: in the standard picture the
  // column-0 walls are the Lambda_1 factors, in the swapped picture the
  // Lambda_0 factors.
  if (w.start == 0) return p.swapped ? 0 : 1;
  return p.swapped ? 1 : 0;
}

std::vector<const Wall*> sorted_group(const std::vector<Wall>& walls,
                                      int start) {
  std::vector<const Wall*> g;
  for (const Wall& w : walls) {
    if (w.start == start) g.push_back(&w);
  }
  std::sort(g.begin(), g.end(),
            [](const Wall* a, const Wall* b) { return b->heights < a->heights; });
  return g;
}

}  // namespace

bool Wall::valid() const {
  if (start != 0 && start != 1) return false;
  if (!heights.empty() && heights.back() == 0) return false;
  for (size_t k = 0; k < heights.size(); ++k) {
    if (heights[k] < 0) return false;
    if (k + 1 < heights.size() && heights[k + 1] > 0 &&
        heights[k] <= heights[k + 1]) {
      return false;
    }
  }
  return true;
}

int block_color(int col, long long level, int flip) {
  return static_cast<int>((col + level + flip) % 2);
}

// Per-column signs for a valid wall: '-' wherever the top block has color i,
// '+' wherever the next slot has color i and the western neighbor is strictly
// taller (or the column is the start column).  Moves that would break the
// strict decrease are shielded by cancellation instead of omitted: a stack
// whose removal is illegal has an equal-colored '-' strictly east of it, and
// a slot whose filling is illegal has an equal-colored '+' strictly west, so
// the rightmost surviving '-' and the leftmost surviving '+' are always legal.
// (Dropping signs for illegal moves, as one might read the admissibility
// conditions, breaks e(f(w)) = w once walls are a few blocks tall.)
namespace {

bool minus_sign_at(const Wall& w, int col, int i, int flip) {
  long long h = w.height(col);
  return h > 0 && block_color(col, h, flip) == i;
}

bool plus_sign_at(const Wall& w, int col, int i, int flip) {
  long long h = w.height(col);
  if (block_color(col, h + 1, flip) != i) return false;
  return col == w.start || w.height(col - 1) >= h + 1;
}

}  // namespace

std::optional<Wall> wall_f(const Wall& w, int i, int flip) {
  // leftmost surviving '+' after cancelling (+,-) pairs west to east;
  // a '-' cancels the nearest unmatched '+' to its west
  std::vector<int> plus_cols;
  int last_col = w.start + static_cast<int>(w.heights.size());
  for (int col = w.start; col <= last_col; ++col) {
    if (plus_sign_at(w, col, i, flip)) {
      plus_cols.push_back(col);
    } else if (minus_sign_at(w, col, i, flip) && !plus_cols.empty()) {
      plus_cols.pop_back();
    }
  }
  if (plus_cols.empty()) return std::nullopt;
  int col = plus_cols.front();
  Wall out = w;
  int idx = col - w.start;
  if (idx == static_cast<int>(out.heights.size())) {
    out.heights.push_back(w.height(col) + 1);
  } else {
    out.heights[static_cast<size_t>(idx)] = w.height(col) + 1;
  }
  return out;
}

std::optional<Wall> wall_e(const Wall& w, int i, int flip) {
  // rightmost surviving '-': the last '-' with no unmatched '+' to its west
  int depth = 0;
  std::optional<int> chosen;
  int last_col = w.start + static_cast<int>(w.heights.size());
  for (int col = w.start; col <= last_col; ++col) {
    if (plus_sign_at(w, col, i, flip)) {
      ++depth;
    } else if (minus_sign_at(w, col, i, flip)) {
      if (depth > 0) {
        --depth;
      } else {
        chosen = col;
      }
    }
  }
  if (!chosen) return std::nullopt;
  Wall out = w;
  size_t idx = static_cast<size_t>(*chosen - w.start);
  out.heights[idx] -= 1;
  while (!out.heights.empty() && out.heights.back() == 0) out.heights.pop_back();
  return out;
}

Pyramid::Pyramid(ModelParams params, std::vector<Wall> walls)
    : params_(std::move(params)), walls_(std::move(walls)) {
  if (params_.s < 0 || params_.t < 0 || params_.s + params_.t < 1) {
    throw Error(ErrorCode::invalid_level, "level s+t must be at least 1");
  }
  long long n1 = params_.col1_walls();
  long long n0 = params_.col0_walls();
  if (static_cast<long long>(walls_.size()) != n0 + n1) {
    throw Error(ErrorCode::bad_input, "wrong number of walls for (s,t)");
  }
  for (long long k = 0; k < n0 + n1; ++k) {
    const Wall& w = walls_[static_cast<size_t>(k)];
    int expected_start =
        (kColumnOneWallsFirst ? (k < n1 ? 1 : 0) : (k < n0 ? 0 : 1));
    if (w.start != expected_start || !w.valid()) {
      throw Error(ErrorCode::bad_input, "invalid wall tuple");
    }
  }
}

Weight Pyramid::weight() const {
  Weight wt{{params_.s, params_.t}, {0, 0}};
  for (const Wall& w : walls_) {
    for (size_t idx = 0; idx < w.heights.size(); ++idx) {
      int col = w.start + static_cast<int>(idx);
      for (long long k = 1; k <= w.heights[idx]; ++k) {
        wt.v[static_cast<size_t>(block_color(col, k, params_.flip()))] += 1;
      }
    }
  }
  return wt;
}

std::optional<Pyramid> Pyramid::f(int i) const {
  std::vector<SignSymbol> syms;
  for (size_t k = 0; k < walls_.size(); ++k) {
    int eps = wall_eps(walls_[k], i, params_.flip());
    int phi = wall_phi(walls_[k], i, params_.flip());
    for (int a = 0; a < eps; ++a) syms.push_back({static_cast<int>(k), '-'});
    for (int a = 0; a < phi; ++a) syms.push_back({static_cast<int>(k), '+'});
  }
  ReducedSignature sig = reduce_signature(syms);
  if (!sig.f_factor) return std::nullopt;
  Pyramid out = *this;
  out.walls_[static_cast<size_t>(*sig.f_factor)] =
      *wall_f(walls_[static_cast<size_t>(*sig.f_factor)], i, params_.flip());
  return out;
}

std::optional<Pyramid> Pyramid::e(int i) const {
  std::vector<SignSymbol> syms;
  for (size_t k = 0; k < walls_.size(); ++k) {
    int eps = wall_eps(walls_[k], i, params_.flip());
    int phi = wall_phi(walls_[k], i, params_.flip());
    for (int a = 0; a < eps; ++a) syms.push_back({static_cast<int>(k), '-'});
    for (int a = 0; a < phi; ++a) syms.push_back({static_cast<int>(k), '+'});
  }
  ReducedSignature sig = reduce_signature(syms);
  if (!sig.e_factor) return std::nullopt;
  Pyramid out = *this;
  out.walls_[static_cast<size_t>(*sig.e_factor)] =
      *wall_e(walls_[static_cast<size_t>(*sig.e_factor)], i, params_.flip());
  return out;
}

std::string Pyramid::canonical_key() const {
  // Walls of each group sorted tallest first; slots within a column are
  // interchangeable, so the sorted tuple is the canonical form.
  std::ostringstream os;
  os << (params_.swapped ? "m" : "s") << params_.s << "," << params_.t;
  for (int start : {1, 0}) {
    for (const Wall* w : sorted_group(walls_, start)) {
      os << "|" << ground_label(*w, params_) << ":";
      for (size_t k = 0; k < w->heights.size(); ++k) {
        os << (k ? "," : "") << w->heights[k];
      }
    }
  }
  return os.str();
}

Pyramid ground_state(long long s, long long t, bool swapped) {
  ModelParams p{s, t, swapped};
  std::vector<Wall> walls;
  long long n1 = p.col1_walls(), n0 = p.col0_walls();
  if (kColumnOneWallsFirst) {
    for (long long k = 0; k < n1; ++k) walls.push_back(Wall{1, {}});
    for (long long k = 0; k < n0; ++k) walls.push_back(Wall{0, {}});
  } else {
    for (long long k = 0; k < n0; ++k) walls.push_back(Wall{0, {}});
    for (long long k = 0; k < n1; ++k) walls.push_back(Wall{1, {}});
  }
  return Pyramid(p, std::move(walls));
}

Pyramid extremal_pyramid(long long s, long long t, int n, char sign) {
  if (sign != '+' && sign != '-') {
    throw Error(ErrorCode::bad_input, "sign must be + or -");
  }
  if (n < 0) throw Error(ErrorCode::bad_input, "n must be nonnegative");
  Pyramid g = ground_state(s, t, sign == '+');
  std::vector<Wall> walls = g.walls();
  for (Wall& w : walls) {
    for (int col = w.start; col < n; ++col) {
      w.heights.push_back(n - col);
    }
  }
  return Pyramid(g.params(), std::move(walls));
}

bool is_subpyramid(const Pyramid& p, const Pyramid& q) {
  if (p.params() != q.params()) {
    throw Error(ErrorCode::bad_input, "subpyramid comparison across models");
  }
  for (int start : {0, 1}) {
    auto gp = sorted_group(p.walls(), start);
    auto gq = sorted_group(q.walls(), start);
    for (size_t k = 0; k < gp.size(); ++k) {
      const Wall& a = *gp[k];
      const Wall& b = *gq[k];
      for (size_t idx = 0; idx < a.heights.size(); ++idx) {
        if (a.heights[idx] > b.height(a.start + static_cast<int>(idx))) {
          return false;
        }
      }
    }
  }
  return true;
}

long long max_stack_height(const Pyramid& p) {
  // Stacks stand on the ground-state staircase: a stack of h blocks in
  // column j reaches height (j - base) + h above the pyramid's base line,
  // where base is the westernmost slot column (1 when only column-1 walls
  // exist, 0 otherwise).  The extremal pyramid of w_n has every occupied
  // stack at exactly height n under this measure.
  int base = p.params().col0_walls() > 0 ? 0 : 1;
  long long m = 0;
  for (const Wall& w : p.walls()) {
    for (size_t idx = 0; idx < w.heights.size(); ++idx) {
      if (w.heights[idx] == 0) continue;
      int col = w.start + static_cast<int>(idx);
      m = std::max(m, (col - base) + w.heights[idx]);
    }
  }
  return m;
}

int m_bound(long long s, long long t, int n, char sign) {
  if (n < 1) throw Error(ErrorCode::bad_input, "m_bound needs n >= 1");
  if (sign == '-') return t != 0 ? n : n - 1;
  if (sign == '+') return s != 0 ? n : n - 1;
  throw Error(ErrorCode::bad_input, "sign must be + or -");
}

std::map<std::string, Pyramid> enumerate_by_height(long long s, long long t,
                                                   long long m, bool swapped) {
  if (m < 0) throw Error(ErrorCode::bad_input, "height bound must be >= 0");
  std::map<std::string, Pyramid> seen;
  std::vector<Pyramid> frontier;
  Pyramid g = ground_state(s, t, swapped);
  seen.emplace(g.canonical_key(), g);
  frontier.push_back(std::move(g));
  while (!frontier.empty()) {
    std::vector<Pyramid> next;
    for (const Pyramid& p : frontier) {
      for (int i = 0; i < 2; ++i) {
        std::optional<Pyramid> c = p.f(i);
        if (!c || max_stack_height(*c) > m) continue;
        if (seen.emplace(c->canonical_key(), *c).second) {
          next.push_back(std::move(*c));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

long long demazure_dimension(long long s, long long t, int n, char sign) {
  if (n < 1) throw Error(ErrorCode::bad_input, "demazure_dimension needs n >= 1");
  long long lead = (sign == '+') ? s + 1 : t + 1;
  if (sign != '+' && sign != '-') {
    throw Error(ErrorCode::bad_input, "sign must be + or -");
  }
  long long acc = lead;
  for (int k = 1; k < n; ++k) acc *= s + t + 1;
  return acc;
}

std::string render_ascii(const Pyramid& p) {
  std::ostringstream os;
  for (size_t k = 0; k < p.walls().size(); ++k) {
    const Wall& w = p.walls()[k];
    os << "wall " << k << " (ground " << ground_label(w, p.params()) << ")";
    if (w.heights.empty()) {
      os << ": empty\n";
      continue;
    }
    os << ":\n";
    long long top = w.heights.front();
    for (long long level = top; level >= 1; --level) {
      os << "  " << level << " |";
      for (size_t idx = 0; idx < w.heights.size(); ++idx) {
        int col = w.start + static_cast<int>(idx);
        if (w.heights[idx] >= level) {
          os << " " << block_color(col, level, p.params().flip());
        } else {
          os << "  ";
        }
      }
      os << "\n";
    }
    os << "    +";
    for (size_t idx = 0; idx < w.heights.size(); ++idx) os << "--";
    os << "\n     ";
    for (size_t idx = 0; idx < w.heights.size(); ++idx) {
      os << " " << (w.start + static_cast<int>(idx)) % 10;
    }
    os << "\n";
  }
  return os.str();
}

std::string pyramid_to_json_text(const Pyramid& p) {
  nlohmann::json j;
  j["s"] = p.params().s;
  j["t"] = p.params().t;
  if (p.params().swapped) j["swapped"] = true;
  j["walls"] = nlohmann::json::array();
  for (const Wall& w : p.walls()) {
    j["walls"].push_back({{"ground", ground_label(w, p.params())},
                          {"heights", w.heights}});
  }
  return j.dump(2);
}

Pyramid pyramid_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input,
                std::string("bad pyramid JSON: ") + e.what());
  }
  ModelParams p;
  std::vector<Wall> col0, col1;
  try {
    p.s = j.at("s").get<long long>();
    p.t = j.at("t").get<long long>();
    p.swapped = j.value("swapped", false);
    for (const auto& wj : j.at("walls")) {
      int ground = wj.at("ground").get<int>();
      Wall w;
      w.heights = wj.at("heights").get<std::vector<long long>>();
      while (!w.heights.empty() && w.heights.back() == 0) w.heights.pop_back();
      w.start = (ground == (p.swapped ? 0 : 1)) ? 0 : 1;
      if (!w.valid()) {
        throw Error(ErrorCode::bad_input, "invalid wall heights");
      }
      (w.start == 0 ? col0 : col1).push_back(std::move(w));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::bad_input,
                std::string("bad pyramid JSON: ") + e.what());
  }
  auto desc = [](const Wall& a, const Wall& b) { return b.heights < a.heights; };
  std::sort(col0.begin(), col0.end(), desc);
  std::sort(col1.begin(), col1.end(), desc);
  std::vector<Wall> walls;
  if (kColumnOneWallsFirst) {
    walls.insert(walls.end(), col1.begin(), col1.end());
    walls.insert(walls.end(), col0.begin(), col0.end());
  } else {
    walls.insert(walls.end(), col0.begin(), col0.end());
    walls.insert(walls.end(), col1.begin(), col1.end());
  }
  return Pyramid(p, std::move(walls));
}

}  // namespace demazure::sl2
