#pragma once

#include <string>
#include <utility>
#include <vector>

#include "demazure/errors.hpp"

namespace demazure {

// Integer vector indexed by the vertex set I.  Used both for dimension
// vectors and for coordinates in the root/weight lattices.  Entries may be
// negative so that the reflection action stays total; callers that need
// nonnegativity check it themselves.
using DimVector = std::vector<long long>;

// Unoriented multigraph on vertices 0..vertices-1.  Loops are rejected.
struct DynkinGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;

  // Parses {"vertices": n, "edges": [[i,j], ...]}.
  static DynkinGraph from_json_text(const std::string& text);
};

// Symmetric generalized Cartan matrix: C_ii = 2, C_ij = -(#edges between i,j).
class CartanMatrix {
public:
  explicit CartanMatrix(const DynkinGraph& g);

  int rank() const { return n_; }
  long long at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  // (Cv)_i as a single row-vector product.
  long long row_dot(int i, const DimVector& v) const;

private:
  int n_;
  std::vector<long long> a_;
};

CartanMatrix cartan_from_graph(const DynkinGraph& g);

// A point lambda_d - alpha_v of the weight lattice, stored as the pair (d, v).
// d holds coefficients of the fundamental weights, v coefficients of the
// simple roots that have been subtracted.  For affine types C is singular, so
// the two coordinate systems cannot be merged; equality is componentwise.
struct Weight {
  DimVector d;
  DimVector v;

  bool operator==(const Weight&) const = default;
};

// <mu, alpha_i^v> = d_i - (Cv)_i.
long long pairing(const CartanMatrix& C, const Weight& mu, int i);

// r_i(mu) = mu - <mu, alpha_i> alpha_i, i.e. v' = v + <mu, alpha_i> e^i.
Weight simple_reflection(const CartanMatrix& C, int i, const Weight& mu);

// Common graphs used by the CLI and tests.
DynkinGraph sl2_affine_graph();   // two vertices joined by a double edge
DynkinGraph a2_graph();           // two vertices, single edge
DynkinGraph a2_affine_graph();    // triangle
DynkinGraph d4_star_graph();      // center 0 joined to 1,2,3

}  // namespace demazure
