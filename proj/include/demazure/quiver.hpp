#pragma once

#include <optional>
#include <string>
#include <vector>

#include "demazure/cartan.hpp"
#include "demazure/linalg.hpp"
#include "demazure/weyl.hpp"

namespace demazure {

// Doubled quiver of a Dynkin graph.  Edge k of the graph contributes arrows
// 2k (tail -> head as the edge was given) and 2k+1 (the reverse); bar flips
// the low bit.  The orientation set contains exactly one arrow per edge and
// eps is +1 there, -1 on the reversals.
class DoubledQuiver {
public:
  explicit DoubledQuiver(const DynkinGraph& g,
                         std::optional<std::vector<int>> orientation = {});

  const DynkinGraph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertices; }
  int arrow_count() const { return static_cast<int>(out_.size()); }

  int out(int a) const { return out_[static_cast<size_t>(a)]; }
  int inc(int a) const { return inc_[static_cast<size_t>(a)]; }
  int bar(int a) const { return a ^ 1; }
  int eps(int a) const { return eps_[static_cast<size_t>(a)]; }

private:
  DynkinGraph graph_;
  std::vector<int> out_, inc_;
  std::vector<int> eps_;
};

// Framed representation: x_h on the doubled quiver plus framing maps
// t_i : V_i -> D_i.  All matrices are exact rationals; the framing defaults
// to zero for unframed use.
struct QuiverRep {
  DimVector v;
  DimVector d;
  std::vector<Mat> x;  // x[a] has shape v[inc(a)] x v[out(a)]
  std::vector<Mat> t;  // t[i] has shape d[i] x v[i]

  static QuiverRep zero(const DoubledQuiver& q, DimVector v, DimVector d);
  void check_shapes(const DoubledQuiver& q) const;
};

// psi_i(x) = sum over arrows into i of eps(h) x_h x_{bar h}; the rep satisfies
// the preprojective relation iff every psi_i vanishes.
std::vector<Mat> moment_residual(const DoubledQuiver& q, const QuiverRep& rep);

// Smallest n such that every composition of n arrow maps vanishes, or nullopt.
// Decided on the chain of graded subspaces W_0 = V, W_{k+1} = sum of images
// x_h(W_k); W_n = 0 exactly when each individual length-n path composition is
// zero, and the chain is decreasing, so stagnation at a nonzero space proves
// non-nilpotency.
std::optional<int> nilpotency_order(const DoubledQuiver& q,
                                    const QuiverRep& rep);

bool is_nilpotent(const DoubledQuiver& q, const QuiverRep& rep);

// True iff no nonzero x-stable graded subspace lies inside ker t, computed by
// the decreasing fixed point starting from S_i = ker t_i.
bool is_stable(const DoubledQuiver& q, const QuiverRep& rep);

// dim L(v,d) = 1/2 v^t (2d - Cv).
Rat nakajima_dim(const CartanMatrix& C, const DimVector& v, const DimVector& d);

// v_w with lambda_d - alpha_{v_w} = w lambda_d.
DimVector extremal_dim_vector(const CartanMatrix& C, const DimVector& d,
                              const WeylWord& word);

// Searches elements of length <= Lmax for a witness of v = v_w.
std::optional<WeylWord> find_extremal(const CartanMatrix& C, const DimVector& d,
                                      const DimVector& v, int Lmax);

// Demazure membership for affine sl2: requires the rep to be a point of
// L(v,d) (moment map zero and stable; throws NOT_A_VARIETY_POINT otherwise),
// then compares the nilpotency order against the height bound of w.
bool check_sl2_demazure_membership(const DoubledQuiver& q, const QuiverRep& rep,
                                   const WeylWord& w);

bool is_sl2_affine(const DynkinGraph& g);

// JSON wire format:
//   {"graph": {"vertices": n, "edges": [[i,j],...]},
//    "orientation": [arrow ids],          optional; default = even arrows
//    "v": [...], "d": [...],
//    "x": {"<arrow id>": [[entries]]},    omitted arrows are zero
//    "t": {"<vertex>": [[entries]]}}      omitted vertices are zero
// Entries are integers or "p/q" strings, parsed exactly.
std::pair<DoubledQuiver, QuiverRep> rep_from_json_text(const std::string& text);
std::string rep_to_json_text(const DoubledQuiver& q, const QuiverRep& rep);

}  // namespace demazure
