#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "demazure/cartan.hpp"
#include "demazure/crystal.hpp"

namespace demazure::sl2 {

// Level-1 wall for affine sl2.  Columns run eastward from the start column
// (0 or 1); heights count the blocks stacked in each column.  Positive
// heights strictly decrease eastward, so a wall is a 2-colored strict
// partition.  Block colors alternate upward: the block at (column j, level k)
// has color (j + k + flip) % 2, where flip = 0 in the standard picture and
// flip = 1 in the color-swapped one.
struct Wall {
  int start = 0;
  std::vector<long long> heights;  // no trailing zeros stored

  long long height(int col) const {
    int idx = col - start;
    if (idx < 0 || idx >= static_cast<int>(heights.size())) return 0;
    return heights[static_cast<size_t>(idx)];
  }

  bool valid() const;
  auto operator<=>(const Wall&) const = default;
};

int block_color(int col, long long level, int flip);

// Signature operators on a single wall.  Per-column signs west to east:
// '-' where the top block has color i, '+' where the next slot has color i
// and the western neighbor is strictly taller (or the column starts the
// wall); (+,-) pairs cancel, f acts at the leftmost surviving '+', e at the
// rightmost surviving '-'.  The selected move always preserves the strict
// eastward decrease.
std::optional<Wall> wall_f(const Wall& w, int i, int flip);
std::optional<Wall> wall_e(const Wall& w, int i, int flip);

// How the s+t level-1 walls assemble: the standard picture has t walls
// starting at column 0 and s walls starting at column 1; the color-swapped
// picture (used for the w_n^+ Demazure descriptions) has s walls at column 0,
// t walls at column 1, and flipped block colors.
struct ModelParams {
  long long s = 0, t = 0;
  bool swapped = false;

  int flip() const { return swapped ? 1 : 0; }
  long long col0_walls() const { return swapped ? s : t; }
  long long col1_walls() const { return swapped ? t : s; }

  auto operator<=>(const ModelParams&) const = default;
};

// Tuple of walls realizing one crystal element.  Only values reachable from
// ground_state under f/e are meaningful.  The factor order of the tuple is
// the order the composite signature consults, column-1 walls first (frozen
// against the closed-form Demazure dimensions and the subpyramid sets).
class Pyramid {
public:
  Pyramid(ModelParams params, std::vector<Wall> walls);

  const ModelParams& params() const { return params_; }
  const std::vector<Wall>& walls() const { return walls_; }

  Weight weight() const;
  std::optional<Pyramid> f(int i) const;
  std::optional<Pyramid> e(int i) const;
  std::string canonical_key() const;
  int rank() const { return 2; }

  bool operator==(const Pyramid& other) const {
    return params_ == other.params_ && walls_ == other.walls_;
  }

private:
  ModelParams params_;
  std::vector<Wall> walls_;
};

// All-empty tuple of weight s*w0 + t*w1.  Throws INVALID_LEVEL if s+t = 0.
Pyramid ground_state(long long s, long long t, bool swapped = false);

// The unique pyramid of weight w_n^{sign} lambda: every slot in column i
// carries a stack of height n - i.  Sign '+' is built in the swapped picture.
Pyramid extremal_pyramid(long long s, long long t, int n, char sign);

// Factor-wise, column-wise height comparison under the canonical pairing
// (walls of each start-column group sorted tallest first).
bool is_subpyramid(const Pyramid& p, const Pyramid& q);

// Height of the tallest stack measured from the pyramid's base line: a stack
// of h blocks in column j stands on the ground-state staircase, so it
// reaches (j - base) + h, with base the westernmost slot column.  0 for the
// ground state.  This is the quantity the height bound m_{d,w} constrains.
long long max_stack_height(const Pyramid& p);

// The piecewise height/nilpotency bound m_{d,w} for w = w_n^{sign}, n >= 1.
int m_bound(long long s, long long t, int n, char sign);

// All crystal elements with max_stack_height <= m, as canonical key -> value.
// BFS from the ground state pruned at the bound; pruning is exact because e
// never increases any stack, so every element has a generating path that
// stays under its own maximum.
std::map<std::string, Pyramid> enumerate_by_height(long long s, long long t,
                                                   long long m,
                                                   bool swapped = false);

// Closed-form Demazure dimension (s+1)(s+t+1)^{n-1} resp. (t+1)(s+t+1)^{n-1}.
long long demazure_dimension(long long s, long long t, int n, char sign);

std::string render_ascii(const Pyramid& p);

// {"s": .., "t": .., "walls": [{"ground": 0|1, "heights": [..]}, ...]};
// a "swapped": true field is added for the color-swapped picture.
std::string pyramid_to_json_text(const Pyramid& p);
Pyramid pyramid_from_json_text(const std::string& text);

}  // namespace demazure::sl2
