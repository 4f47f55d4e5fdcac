#include <doctest.h>

#include <map>
#include <random>

#include "demazure/weyl.hpp"

using namespace demazure;

namespace {

DimVector key_of(const CartanMatrix& C, const WeylWord& w) {
  return weight_action_v(C, w, DimVector{2, 3});
}

// Brute-force subword oracle: u <= w iff some subword of a fixed reduced word
// of w multiplies to u.
bool bruhat_by_subwords(const CartanMatrix& C, const WeylWord& u,
                        const WeylWord& w) {
  WeylWord rw = reduce(C, w);
  DimVector target = key_of(C, u);
  int l = rw.size();
  for (int mask = 0; mask < (1 << l); ++mask) {
    WeylWord sub;
    for (int k = 0; k < l; ++k) {
      if (mask & (1 << k)) sub.letters.push_back(rw.letters[static_cast<size_t>(k)]);
    }
    if (key_of(C, sub) == target) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("action on roots") {
  CartanMatrix C(sl2_affine_graph());
  RootVector a1{0, 1};
  CHECK(act_on_root(C, WeylWord{}, a1) == a1);
  CHECK(act_on_root(C, WeylWord{{0}}, a1) == RootVector{2, 1});
  CHECK(act_on_root(C, WeylWord{{0}}, RootVector{1, 0}) == RootVector{-1, 0});
  CHECK(act_on_root(C, WeylWord{{1}}, a1) == RootVector{0, -1});
}

TEST_CASE("reducedness") {
  CartanMatrix C(sl2_affine_graph());
  CHECK(is_reduced(C, WeylWord{}));
  CHECK_FALSE(is_reduced(C, WeylWord{{0, 0}}));
  CHECK_FALSE(is_reduced(C, WeylWord{{1, 1}}));
  CHECK(is_reduced(C, WeylWord{{0, 1, 0, 1}}));

  // cross-check: no word of length <= 3 acts like (0,1,0,1)
  DimVector target = key_of(C, WeylWord{{0, 1, 0, 1}});
  for (int len = 0; len <= 3; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      WeylWord w;
      for (int k = 0; k < len; ++k) w.letters.push_back((mask >> k) & 1);
      CHECK(key_of(C, w) != target);
    }
  }
}

TEST_CASE("length via deletion") {
  CartanMatrix C(sl2_affine_graph());
  CHECK(length(C, WeylWord{{0, 0}}) == 0);
  CHECK(length(C, WeylWord{{0, 1, 0}}) == 3);
  CHECK(length(C, WeylWord{{0}}) == 1);
  CHECK(length(C, WeylWord{{1, 0, 0, 1}}) == 0);
  CHECK(length(C, WeylWord{{0, 1, 1, 1, 0}}) == 3);

  // reduce preserves the group element
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    WeylWord w;
    int len = static_cast<int>(rng() % 9);
    for (int k = 0; k < len; ++k) w.letters.push_back(static_cast<int>(rng() % 2));
    WeylWord r = reduce(C, w);
    CHECK(is_reduced(C, r));
    CHECK(key_of(C, r) == key_of(C, w));
    if (is_reduced(C, w)) CHECK(length(C, w) == w.size());
  }
}

TEST_CASE("bruhat order") {
  CartanMatrix C(sl2_affine_graph());
  CHECK(bruhat_leq(C, WeylWord{}, WeylWord{{0, 1, 0}}));
  CHECK(bruhat_leq(C, WeylWord{{1}}, WeylWord{{0, 1}}));
  CHECK_FALSE(bruhat_leq(C, WeylWord{{0}}, WeylWord{{1}}));
  CHECK_FALSE(bruhat_leq(C, WeylWord{{1}}, WeylWord{{0}}));

  auto words = elements_up_to_length(C, 5);
  for (const WeylWord& u : words) {
    CHECK(bruhat_leq(C, u, u));
    for (const WeylWord& w : words) {
      bool lhs = bruhat_leq(C, u, w);
      CHECK(lhs == bruhat_by_subwords(C, u, w));
      // infinite dihedral: u <= w iff shorter or equal element
      bool expect = (u.size() < w.size()) || key_of(C, u) == key_of(C, w);
      CHECK(lhs == expect);
      if (lhs && bruhat_leq(C, w, u)) CHECK(key_of(C, u) == key_of(C, w));
      for (const WeylWord& x : words) {
        if (lhs && bruhat_leq(C, w, x)) CHECK(bruhat_leq(C, u, x));
      }
    }
  }
}

TEST_CASE("element enumeration") {
  CartanMatrix sl2(sl2_affine_graph());
  CHECK(elements_up_to_length(sl2, 0).size() == 1);
  CHECK(elements_up_to_length(sl2, 3).size() == 7);

  CartanMatrix a2(a2_graph());
  CHECK(elements_up_to_length(a2, 3).size() == 6);
  CHECK(elements_up_to_length(a2, 10).size() == 6);

  for (const WeylWord& w : elements_up_to_length(sl2, 6)) {
    CHECK(is_reduced(sl2, w));
  }
}

TEST_CASE("alternating elements") {
  CartanMatrix C(sl2_affine_graph());
  CHECK(wn(0, '-') == WeylWord{});
  CHECK(wn(2, '-') == WeylWord{{0, 1}});
  CHECK(wn(3, '+') == WeylWord{{0, 1, 0}});
  CHECK(wn(1, '-') == WeylWord{{1}});
  for (int n = 0; n <= 20; ++n) {
    CHECK(is_reduced(C, wn(n, '-')));
    CHECK(is_reduced(C, wn(n, '+')));
  }
}
