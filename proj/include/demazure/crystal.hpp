#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "demazure/cartan.hpp"
#include "demazure/weyl.hpp"

namespace demazure {

// Contract for crystal elements.  Elements are immutable values; f and e
// return nullopt where the operator vanishes.  canonical_key must be a
// canonical serialization, identical exactly for equal elements, because the
// engine's set semantics ride on it.
template <typename B>
concept CrystalElement = std::copyable<B> && requires(const B& b, int i) {
  { b.weight() } -> std::convertible_to<Weight>;
  { b.f(i) } -> std::convertible_to<std::optional<B>>;
  { b.e(i) } -> std::convertible_to<std::optional<B>>;
  { b.canonical_key() } -> std::convertible_to<std::string>;
  { b.rank() } -> std::convertible_to<int>;
};

struct CrystalGraph {
  std::map<std::string, Weight> nodes;
  std::set<std::tuple<std::string, std::string, int>> edges;  // (from, to, i)

  bool operator==(const CrystalGraph&) const = default;
};

// BFS closure of {b0} under all f(i), truncated at block_bound f-applications.
template <CrystalElement B>
CrystalGraph generate(const B& b0, int block_bound) {
  CrystalGraph g;
  std::vector<B> frontier{b0};
  g.nodes.emplace(b0.canonical_key(), b0.weight());
  for (int depth = 0; depth < block_bound && !frontier.empty(); ++depth) {
    std::vector<B> next;
    for (const B& b : frontier) {
      std::string from = b.canonical_key();
      for (int i = 0; i < b.rank(); ++i) {
        std::optional<B> c = b.f(i);
        if (!c) continue;
        std::string to = c->canonical_key();
        g.edges.emplace(from, to, i);
        if (g.nodes.emplace(to, c->weight()).second) next.push_back(*c);
      }
    }
    frontier = std::move(next);
  }
  return g;
}

template <CrystalElement B>
struct DemazureSet {
  std::map<std::string, B> elements;  // canonical key -> element
  WeylWord word;
  std::string highest_key;

  long long size() const { return static_cast<long long>(elements.size()); }
  bool contains(const std::string& key) const { return elements.count(key) > 0; }
};

// Closure D_0 = {b0}, D_k = D_{k-1} together with all f_{i_k}-strings, the
// letters taken rightmost first.  Requires a reduced word.
template <CrystalElement B>
DemazureSet<B> demazure_subset(const CartanMatrix& C, const B& b0,
                               const WeylWord& word) {
  if (!is_reduced(C, word)) {
    throw Error(ErrorCode::reduced_word_required,
                "demazure_subset needs a reduced word");
  }
  DemazureSet<B> out;
  out.word = word;
  out.highest_key = b0.canonical_key();
  out.elements.emplace(out.highest_key, b0);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    int i = *it;
    std::vector<B> snapshot;
    snapshot.reserve(out.elements.size());
    for (const auto& [key, b] : out.elements) snapshot.push_back(b);
    for (const B& b : snapshot) {
      B cur = b;
      while (std::optional<B> nxt = cur.f(i)) {
        cur = *nxt;
        out.elements.emplace(cur.canonical_key(), cur);
      }
    }
  }
  return out;
}

struct Character {
  DimVector d;
  std::map<DimVector, long long> mult;  // keyed by the v-part

  long long dimension() const {
    long long s = 0;
    for (const auto& [v, m] : mult) s += m;
    return s;
  }
};

template <CrystalElement B>
Character character(const DemazureSet<B>& set) {
  Character ch;
  for (const auto& [key, b] : set.elements) {
    Weight w = b.weight();
    ch.d = w.d;
    ch.mult[w.v] += 1;
  }
  return ch;
}

// Deterministic exports: nodes sorted by canonical key, edges sorted
// lexicographically; the JSON form round-trips through import_graph_json.
std::string export_graph_dot(const CrystalGraph& g);
std::string export_graph_json(const CrystalGraph& g);
CrystalGraph import_graph_json(const std::string& text);

}  // namespace demazure
