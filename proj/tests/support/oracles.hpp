#pragma once

// Brute-force references used by the tests. They work on raw meet tables,
// bitmasks and explicit word sets and share no code with the library beyond
// reading a Semilattice's table.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "stonelat/semilattice.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Table {
  std::size_t n = 0;
  std::size_t zero = 0;
  std::vector<std::size_t> meet;

  explicit Table(const stonelat::Semilattice& s) : n(s.size()), zero(s.zero()), meet(s.table()) {}

  std::size_t m(std::size_t a, std::size_t b) const { return meet[a * n + b]; }
  bool leq(std::size_t a, std::size_t b) const { return m(a, b) == a; }
  bool orth(std::size_t a, std::size_t b) const { return m(a, b) == zero; }
  static bool in(Mask x, std::size_t i) { return ((x >> i) & 1U) != 0; }
  Mask all() const { return (Mask{1} << n) - 1; }
};

inline Mask to_mask(const stonelat::ElementSet& s) {
  Mask out = 0;
  for (auto e : s.elements()) out |= Mask{1} << e;
  return out;
}

inline bool is_filter(const Table& t, Mask f) {
  if (f == 0 || Table::in(f, t.zero)) return false;
  for (std::size_t a = 0; a < t.n; ++a) {
    if (!Table::in(f, a)) continue;
    for (std::size_t b = 0; b < t.n; ++b) {
      if (t.leq(a, b) && !Table::in(f, b)) return false;
      if (Table::in(f, b) && !Table::in(f, t.m(a, b))) return false;
    }
  }
  return true;
}

inline std::vector<Mask> filters(const Table& t) {
  std::vector<Mask> out;
  for (Mask f = 1; f <= t.all(); ++f) {
    if (is_filter(t, f)) out.push_back(f);
  }
  return out;
}

// Maximal proper filters.
inline std::vector<Mask> ultrafilters(const Table& t) {
  const auto fs = filters(t);
  std::vector<Mask> out;
  for (Mask f : fs) {
    bool maximal = std::none_of(fs.begin(), fs.end(), [&](Mask g) { return g != f && (f & g) == f; });
    if (maximal) out.push_back(f);
  }
  return out;
}

inline Mask region(const Table& t, Mask x, Mask y) {
  Mask out = 0;
  for (std::size_t e = 0; e < t.n; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < t.n && ok; ++i) {
      if (Table::in(x, i) && !t.leq(e, i)) ok = false;
      if (Table::in(y, i) && !t.orth(e, i)) ok = false;
    }
    if (ok) out |= Mask{1} << e;
  }
  return out;
}

inline bool covers(const Table& t, Mask z, Mask r) {
  for (std::size_t e = 0; e < t.n; ++e) {
    if (!Table::in(r, e) || e == t.zero) continue;
    bool met = false;
    for (std::size_t c = 0; c < t.n && !met; ++c) met = Table::in(z, c) && !t.orth(e, c);
    if (!met) return false;
  }
  return true;
}

// The tightness definition read literally: every X inside F, every Y
// outside F, every cover Z of E^{X,Y} must meet F.
inline bool is_tight(const Table& t, Mask f) {
  const Mask outside = t.all() & ~f;
  for (Mask x = 0; x <= t.all(); ++x) {
    if ((x & ~f) != 0) continue;
    for (Mask y = 0; y <= t.all(); ++y) {
      if ((y & ~outside) != 0) continue;
      const Mask r = region(t, x, y);
      const Mask candidates = r & outside;
      for (Mask z = candidates;; z = (z - 1) & candidates) {
        if (covers(t, z, r)) return false;
        if (z == 0) break;
      }
    }
  }
  return true;
}

inline bool zero_disjunctive(const Table& t) {
  for (std::size_t e = 0; e < t.n; ++e) {
    for (std::size_t f = 0; f < t.n; ++f) {
      if (e == t.zero || e == f || !t.leq(e, f)) continue;
      bool found = false;
      for (std::size_t g = 0; g < t.n && !found; ++g) found = g != t.zero && t.leq(g, f) && t.orth(g, e);
      if (!found) return false;
    }
  }
  return true;
}

// K_e as a mask over ultrafilter positions.
inline std::vector<Mask> base(const Table& t) {
  const auto us = ultrafilters(t);
  std::vector<Mask> k(t.n, 0);
  for (std::size_t e = 0; e < t.n; ++e) {
    for (std::size_t p = 0; p < us.size(); ++p) {
      if (Table::in(us[p], e)) k[e] |= Mask{1} << p;
    }
  }
  return k;
}

inline bool separative(const Table& t) {
  const auto k = base(t);
  return std::set<Mask>(k.begin(), k.end()).size() == k.size();
}

// Bounded lattices on n elements up to isomorphism, found by scanning every
// relation on the n - 2 middle elements and keeping strict partial orders in
// which every pair has a greatest lower bound. Each class is represented by
// its least relation matrix over all n! relabelings that fix the bounds.
class LatticeCensus {
 public:
  explicit LatticeCensus(std::size_t n) {
    const std::size_t k = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j) slots.emplace_back(i, j);
      }
    }
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << slots.size()); ++r) {
      std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if ((r >> s) & 1U) lt[slots[s].first + 1][slots[s].second + 1] = true;
      }
      for (std::size_t i = 1; i + 1 < n; ++i) lt[0][i] = lt[i][n - 1] = true;
      if (n > 1) lt[0][n - 1] = true;
      if (!strict_order(lt) || !has_meets(lt)) continue;
      classes_.insert(canonical(lt));
    }
  }

  std::size_t count() const { return classes_.size(); }
  const std::set<std::string>& classes() const { return classes_; }

  // Canonical key of a library semilattice under the same scheme.
  static std::string key(const stonelat::Semilattice& s) {
    const std::size_t n = s.size();
    std::vector<std::size_t> order;
    order.push_back(s.zero());
    for (std::size_t e = 0; e < n; ++e) {
      if (e != s.zero() && e != s.one()) order.push_back(e);
    }
    order.push_back(s.one());
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) lt[i][j] = s.less(order[i], order[j]);
    }
    return canonical(lt);
  }

 private:
  static bool strict_order(const std::vector<std::vector<bool>>& lt) {
    const std::size_t n = lt.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (lt[i][i]) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (!lt[i][j]) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (lt[j][l] && !lt[i][l]) return false;
        }
      }
    }
    return true;
  }

  static bool has_meets(const std::vector<std::vector<bool>>& lt) {
    const std::size_t n = lt.size();
    auto le = [&](std::size_t a, std::size_t b) { return a == b || lt[a][b]; };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<std::size_t> lower;
        for (std::size_t c = 0; c < n; ++c) {
          if (le(c, a) && le(c, b)) lower.push_back(c);
        }
        const bool greatest = std::any_of(lower.begin(), lower.end(), [&](std::size_t g) {
          return std::all_of(lower.begin(), lower.end(), [&](std::size_t c) { return le(c, g); });
        });
        if (!greatest) return false;
      }
    }
    return true;
  }

  static std::string canonical(const std::vector<std::vector<bool>>& lt) {
    const std::size_t n = lt.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
      if (perm.front() != 0 || perm.back() != n - 1) continue;
      std::string code(n * n, '0');
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) code[i * n + j] = lt[perm[i]][perm[j]] ? '1' : '0';
      }
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  std::set<std::string> classes_;
};

// Clopen sets of A^ω seen through their length-L prefixes: a word set over
// A^L, indexed as base-|A| numbers with the first symbol most significant.
class WordSets {
 public:
  WordSets(std::string alphabet, std::size_t depth) : alphabet_(std::move(alphabet)), depth_(depth) {
    size_ = 1;
    for (std::size_t i = 0; i < depth_; ++i) size_ *= alphabet_.size();
  }

  using Set = std::vector<bool>;

  std::size_t universe() const { return size_; }
  Set none() const { return Set(size_, false); }
  Set every() const { return Set(size_, true); }

  // All length-L words extending x.
  Set cylinder(const std::string& x) const {
    Set out = none();
    for (std::size_t w = 0; w < size_; ++w) out[w] = word(w).compare(0, x.size(), x) == 0;
    return out;
  }

  Set of_words(const std::vector<std::string>& xs) const {
    Set out = none();
    for (const auto& x : xs) out = unite(out, cylinder(x));
    return out;
  }

  static Set unite(const Set& a, const Set& b) {
    Set out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
    return out;
  }
  static Set intersect(const Set& a, const Set& b) {
    Set out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
    return out;
  }
  static Set negate(const Set& a) {
    Set out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = !a[i];
    return out;
  }

  bool contains(const Set& s, const std::string& length_l_word) const {
    std::size_t idx = 0;
    for (char c : length_l_word) idx = idx * alphabet_.size() + alphabet_.find(c);
    return s[idx];
  }

  std::string word(std::size_t idx) const {
    std::string w(depth_, ' ');
    for (std::size_t i = depth_; i-- > 0;) {
      w[i] = alphabet_[idx % alphabet_.size()];
      idx /= alphabet_.size();
    }
    return w;
  }

 private:
  std::string alphabet_;
  std::size_t depth_;
  std::size_t size_ = 1;
};

}  // namespace oracle
