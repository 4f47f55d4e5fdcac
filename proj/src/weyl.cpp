#include "demazure/weyl.hpp"

#include <algorithm>
#include <map>

namespace demazure {

namespace {

void check_letters(const CartanMatrix& C, const WeylWord& word) {
  for (int i : word.letters) {
    if (i < 0 || i >= C.rank()) {
      throw Error(ErrorCode::bad_input, "word letter out of range");
    }
  }
}

void reflect_root_inplace(const CartanMatrix& C, int i, RootVector& beta) {
  long long c = 0;
  for (int j = 0; j < C.rank(); ++j) c += beta[j] * C.at(j, i);
  beta[i] -= c;
}

bool is_positive(const RootVector& beta) {
  for (long long b : beta) {
    if (b < 0) return false;
  }
  return true;
}

RootVector simple_root(int n, int i) {
  RootVector e(n, 0);
  e[i] = 1;
  return e;
}

// First primes, used as generic strictly dominant d so that the weight action
// separates group elements.
DimVector generic_dominant(int n) {
  static const long long primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47, 53};
  DimVector d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = primes[i % (sizeof(primes) / sizeof(primes[0]))] +
           53 * (i / 16);  // keep entries distinct past 16 vertices
  }
  return d;
}

}  // namespace

RootVector act_on_root(const CartanMatrix& C, const WeylWord& word,
                       const RootVector& beta) {
  if (static_cast<int>(beta.size()) != C.rank()) {
    throw Error(ErrorCode::bad_input, "root vector has wrong length");
  }
  check_letters(C, word);
  RootVector out = beta;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    reflect_root_inplace(C, *it, out);
  }
  return out;
}

bool is_reduced(const CartanMatrix& C, const WeylWord& word) {
  check_letters(C, word);
  const auto& a = word.letters;
  for (size_t k = 0; k < a.size(); ++k) {
    RootVector beta = simple_root(C.rank(), a[k]);
    // prefix product r_{a_0} ... r_{a_{k-1}} applied to alpha_{a_k},
    // innermost letter a_{k-1} first
    for (size_t j = k; j-- > 0;) reflect_root_inplace(C, a[j], beta);
    if (!is_positive(beta)) return false;
  }
  return true;
}

WeylWord reduce(const CartanMatrix& C, const WeylWord& word) {
  check_letters(C, word);
  std::vector<int> red;
  for (int c : word.letters) {
    RootVector beta = simple_root(C.rank(), c);
    for (size_t j = red.size(); j-- > 0;) reflect_root_inplace(C, red[j], beta);
    if (is_positive(beta)) {
      red.push_back(c);
      continue;
    }
    // Exchange property: deleting the letter whose root the suffix product
    // carries onto alpha_c absorbs r_c.
    RootVector gamma = simple_root(C.rank(), c);
    for (size_t j = red.size(); j-- > 0;) {
      if (gamma == simple_root(C.rank(), red[j])) {
        red.erase(red.begin() + static_cast<std::ptrdiff_t>(j));
        break;
      }
      reflect_root_inplace(C, red[j], gamma);
    }
  }
  return WeylWord{std::move(red)};
}

int length(const CartanMatrix& C, const WeylWord& word) {
  return reduce(C, word).size();
}

bool bruhat_leq(const CartanMatrix& C, const WeylWord& u, const WeylWord& w) {
  // Lifting property: for a left descent i of w,
  //   u <= w  iff  (r_i u <= r_i w when r_i shortens u, else u <= r_i w).
  // Equivalent to the subword property; tests cross-check by enumeration.
  WeylWord ru = reduce(C, u);
  WeylWord rw = reduce(C, w);
  while (!rw.letters.empty()) {
    int i = rw.letters.front();
    rw.letters.erase(rw.letters.begin());
    WeylWord lifted;
    lifted.letters.reserve(ru.letters.size() + 1);
    lifted.letters.push_back(i);
    lifted.letters.insert(lifted.letters.end(), ru.letters.begin(),
                          ru.letters.end());
    WeylWord shortened = reduce(C, lifted);
    if (shortened.size() < ru.size()) ru = std::move(shortened);
  }
  return ru.letters.empty();
}

DimVector weight_action_v(const CartanMatrix& C, const WeylWord& word,
                          const DimVector& d) {
  Weight mu{d, DimVector(C.rank(), 0)};
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    mu = simple_reflection(C, *it, mu);
  }
  return mu.v;
}

std::vector<WeylWord> elements_up_to_length(const CartanMatrix& C, int L) {
  const DimVector d = generic_dominant(C.rank());
  std::map<DimVector, WeylWord> seen;
  std::vector<WeylWord> frontier{WeylWord{}};
  seen.emplace(weight_action_v(C, WeylWord{}, d), WeylWord{});

  for (int len = 1; len <= L; ++len) {
    std::vector<WeylWord> next;
    for (const auto& w : frontier) {
      for (int i = 0; i < C.rank(); ++i) {
        // Right multiplication ascends iff w(alpha_i) stays positive.
        if (!is_positive(act_on_root(C, w, simple_root(C.rank(), i)))) continue;
        WeylWord wi = w;
        wi.letters.push_back(i);
        DimVector key = weight_action_v(C, wi, d);
        if (seen.emplace(std::move(key), wi).second) next.push_back(wi);
      }
    }
    frontier = std::move(next);
  }

  std::vector<WeylWord> out;
  out.reserve(seen.size());
  for (auto& [key, w] : seen) out.push_back(w);
  std::sort(out.begin(), out.end(), [](const WeylWord& a, const WeylWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
  });
  return out;
}

WeylWord wn(int n, char sign) {
  if (n < 0 || (sign != '+' && sign != '-')) {
    throw Error(ErrorCode::bad_input, "wn expects n >= 0 and sign +/-");
  }
  int first_applied = (sign == '-') ? 1 : 0;
  WeylWord w;
  w.letters.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    // letters[n-1] is i_1 = first_applied, alternating leftward
    w.letters[static_cast<size_t>(n - 1 - k)] = (first_applied + k) % 2;
  }
  return w;
}

}  // namespace demazure
