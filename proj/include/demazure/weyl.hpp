#pragma once

#include <optional>
#include <vector>

#include "demazure/cartan.hpp"

namespace demazure {

// Word in the simple reflections, stored in product order: letters[0] is the
// leftmost factor of r_{i_l} ... r_{i_1} and letters.back() is the rightmost
// factor i_1.  Acting on weights or roots applies the rightmost letter first.
// This convention is load-bearing: the Demazure closure in crystal.hpp
// processes letters back to front because Eq-style products apply f_{i_1}
// innermost.  All of weyl/quiver/crystal share it.
struct WeylWord {
  std::vector<int> letters;

  bool operator==(const WeylWord&) const = default;
  int size() const { return static_cast<int>(letters.size()); }
};

// Integer vector in the simple-root basis.  Images of real roots under the
// Weyl group are entrywise nonnegative or entrywise nonpositive, which is
// what makes the reducedness test exact in integer arithmetic.
using RootVector = std::vector<long long>;

// Applies the word to beta, rightmost letter first, via
// r_i(alpha_j) = alpha_j - C_ji alpha_i.
RootVector act_on_root(const CartanMatrix& C, const WeylWord& word,
                       const RootVector& beta);

// True iff the word is a reduced expression: every growing prefix product,
// applied to the root of the next letter, stays positive.
bool is_reduced(const CartanMatrix& C, const WeylWord& word);

// Reduced word for the same group element, obtained by repeated deletion via
// the exchange property.  The result preserves the product.
WeylWord reduce(const CartanMatrix& C, const WeylWord& word);

// Length of the group element represented by the word.
int length(const CartanMatrix& C, const WeylWord& word);

// Bruhat order on group elements; representing words may be non-reduced.
bool bruhat_leq(const CartanMatrix& C, const WeylWord& u, const WeylWord& w);

// One reduced representative per group element of length <= L, deduplicated
// by the action on a strictly dominant generic weight (d = distinct primes).
// Output is sorted by (length, letters), so it is deterministic.
std::vector<WeylWord> elements_up_to_length(const CartanMatrix& C, int L);

// v-part of word applied to lambda_d; the d-part is unchanged by W.
DimVector weight_action_v(const CartanMatrix& C, const WeylWord& word,
                          const DimVector& d);

// The two length-n elements of the affine sl2 Weyl group.  For '-' the
// rightmost (first applied) letter is 1, for '+' it is 0; letters alternate.
WeylWord wn(int n, char sign);

}  // namespace demazure
