#include "stonelat/semilattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "stonelat/error.hpp"

namespace stonelat {

namespace {

void check_labels(const std::vector<std::string>& labels) {
  if (labels.size() < 2) {
    throw Error(Errc::kTooSmall, "a bounded semilattice needs at least two elements");
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(Errc::kParse, "empty element label");
    if (!seen.insert(l).second) throw Error(Errc::kDuplicateLabel, l);
  }
}

void check_index(const Semilattice& s, Element e) {
  if (e >= s.size()) throw Error(Errc::kInvalidIndex, std::to_string(e));
}

void check_set(const Semilattice& s, const ElementSet& x) {
  if (x.universe() != s.size()) {
    throw Error(Errc::kInvalidIndex, "element set belongs to a different semilattice");
  }
}

}  // namespace

Semilattice Semilattice::from_order(std::vector<std::string> labels,
                                    std::span<const std::pair<std::string, std::string>> less_than) {
  check_labels(labels);
  const std::size_t n = labels.size();
  auto index = [&](const std::string& l) -> Element {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw Error(Errc::kUnknownLabel, l);
    return static_cast<Element>(it - labels.begin());
  };

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [lo, hi] : less_than) {
    auto a = index(lo);
    auto b = index(hi);
    if (a == b) throw Error(Errc::kCycle, lo + " < " + hi);
    le[a][b] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!le[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (le[k][j]) le[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (le[i][j] && le[j][i]) throw Error(Errc::kCycle, labels[i] + " and " + labels[j]);
    }
  }

  std::optional<Element> zero, one;
  for (std::size_t i = 0; i < n; ++i) {
    bool bottom = true, top = true;
    for (std::size_t j = 0; j < n; ++j) {
      bottom = bottom && le[i][j];
      top = top && le[j][i];
    }
    if (bottom) zero = i;
    if (top) one = i;
  }
  if (!zero) throw Error(Errc::kNoBound, "no global minimum");
  if (!one) throw Error(Errc::kNoBound, "no global maximum");

  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      std::optional<Element> glb;
      for (std::size_t g = 0; g < n && !glb; ++g) {
        if (!le[g][i] || !le[g][j]) continue;
        bool greatest = true;
        for (std::size_t k = 0; k < n && greatest; ++k) {
          if (le[k][i] && le[k][j] && !le[k][g]) greatest = false;
        }
        if (greatest) glb = g;
      }
      if (!glb) throw Error(Errc::kNoMeet, labels[i] + " " + labels[j]);
      table[i * n + j] = table[j * n + i] = *glb;
    }
  }
  return Semilattice(std::move(labels), std::move(table), *zero, *one);
}

Semilattice Semilattice::from_table(std::vector<std::string> labels, std::vector<Element> table) {
  check_labels(labels);
  const std::size_t n = labels.size();
  if (table.size() != n * n) throw Error(Errc::kBadTable, "table must be n*n");
  auto m = [&](Element a, Element b) { return table[a * n + b]; };
  for (auto v : table) {
    if (v >= n) throw Error(Errc::kBadTable, "entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i) != i) throw Error(Errc::kBadTable, "not idempotent at " + labels[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j) != m(j, i)) {
        throw Error(Errc::kBadTable, "not commutative at " + labels[i] + " " + labels[j]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (m(m(i, j), k) != m(i, m(j, k))) {
          throw Error(Errc::kBadTable,
                      "not associative at " + labels[i] + " " + labels[j] + " " + labels[k]);
        }
      }
    }
  }
  std::optional<Element> zero, one;
  for (std::size_t i = 0; i < n; ++i) {
    bool bottom = true, top = true;
    for (std::size_t j = 0; j < n; ++j) {
      bottom = bottom && m(i, j) == i;
      top = top && m(i, j) == j;
    }
    if (bottom) zero = i;
    if (top) one = i;
  }
  if (!zero) throw Error(Errc::kNoBound, "no zero");
  if (!one) throw Error(Errc::kNoBound, "no one");
  return Semilattice(std::move(labels), std::move(table), *zero, *one);
}

std::optional<Element> Semilattice::find(const std::string& l) const {
  auto it = std::find(labels_.begin(), labels_.end(), l);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Element Semilattice::at(const std::string& l) const {
  if (auto e = find(l)) return *e;
  throw Error(Errc::kUnknownLabel, l);
}

ElementSet star(const Semilattice& s, Element e) {
  check_index(s, e);
  ElementSet out(s.size());
  for (Element f = 0; f < s.size(); ++f) {
    if (s.orthogonal(e, f)) out.insert(f);
  }
  return out;
}

ElementSet up(const Semilattice& s, const ElementSet& x) {
  check_set(s, x);
  ElementSet out(s.size());
  const auto members = x.elements();
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f : members) {
      if (s.leq(f, e)) {
        out.insert(e);
        break;
      }
    }
  }
  return out;
}

ElementSet down(const Semilattice& s, const ElementSet& x) {
  check_set(s, x);
  ElementSet out(s.size());
  const auto members = x.elements();
  for (Element e = 0; e < s.size(); ++e) {
    for (Element f : members) {
      if (s.leq(e, f)) {
        out.insert(e);
        break;
      }
    }
  }
  return out;
}

ElementSet up(const Semilattice& s, Element e) {
  check_index(s, e);
  return up(s, ElementSet(s.size(), {e}));
}

ElementSet down(const Semilattice& s, Element e) {
  check_index(s, e);
  return down(s, ElementSet(s.size(), {e}));
}

Element meet_of(const Semilattice& s, const ElementSet& x) {
  check_set(s, x);
  Element acc = s.one();
  for (Element e : x.elements()) acc = s.meet(acc, e);
  return acc;
}

ElementSet constrained_set(const Semilattice& s, const ElementSet& below,
                           const ElementSet& orthogonal_to) {
  check_set(s, below);
  check_set(s, orthogonal_to);
  const auto xs = below.elements();
  const auto ys = orthogonal_to.elements();
  ElementSet out(s.size());
  for (Element e = 0; e < s.size(); ++e) {
    bool ok = std::all_of(xs.begin(), xs.end(), [&](Element x) { return s.leq(e, x); }) &&
              std::all_of(ys.begin(), ys.end(), [&](Element y) { return s.orthogonal(e, y); });
    if (ok) out.insert(e);
  }
  return out;
}

bool is_cover(const Semilattice& s, const ElementSet& z, const ElementSet& below,
              const ElementSet& orthogonal_to) {
  check_set(s, z);
  const auto region = constrained_set(s, below, orthogonal_to);
  if (!z.subset_of(region)) throw Error(Errc::kNotSubset, "cover candidate leaves E^{X,Y}");
  const auto zs = z.elements();
  for (Element e : region.elements()) {
    if (e == s.zero()) continue;
    bool hit = std::any_of(zs.begin(), zs.end(), [&](Element c) { return !s.orthogonal(e, c); });
    if (!hit) return false;
  }
  return true;
}

bool arrow(const Semilattice& s, Element f, std::span<const Element> targets) {
  check_index(s, f);
  if (f == s.zero()) throw Error(Errc::kZeroSource, s.label(f));
  for (Element t : targets) check_index(s, t);
  for (Element x = 0; x < s.size(); ++x) {
    if (x == s.zero() || !s.leq(x, f)) continue;
    bool hit = std::any_of(targets.begin(), targets.end(),
                           [&](Element t) { return !s.orthogonal(x, t); });
    if (!hit) return false;
  }
  return true;
}

ElementSet covers_hat(const Semilattice& s, Element e) {
  check_index(s, e);
  if (e == s.zero()) throw Error(Errc::kZeroElement, "zero covers nothing");
  ElementSet out(s.size());
  for (Element f = 0; f < s.size(); ++f) {
    if (!s.less(f, e)) continue;
    bool between = false;
    for (Element g = 0; g < s.size() && !between; ++g) {
      between = s.less(f, g) && s.less(g, e);
    }
    if (!between) out.insert(f);
  }
  return out;
}

bool satisfies_semilattice_laws(const Semilattice& s) {
  const std::size_t n = s.size();
  for (Element i = 0; i < n; ++i) {
    if (s.meet(i, i) != i || s.meet(i, s.zero()) != s.zero() || s.meet(i, s.one()) != i) {
      return false;
    }
    for (Element j = 0; j < n; ++j) {
      if (s.meet(i, j) != s.meet(j, i)) return false;
      for (Element k = 0; k < n; ++k) {
        if (s.meet(s.meet(i, j), k) != s.meet(i, s.meet(j, k))) return false;
      }
    }
  }
  return s.zero() != s.one();
}

std::optional<std::vector<Element>> find_isomorphism(const Semilattice& a, const Semilattice& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const Semilattice& s, Element e) {
    return std::pair{up(s, e).size(), down(s, e).size()};
  };
  std::vector<std::pair<std::size_t, std::size_t>> sig_a(n), sig_b(n);
  for (Element e = 0; e < n; ++e) {
    sig_a[e] = signature(a, e);
    sig_b[e] = signature(b, e);
  }

  std::vector<Element> image(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(Element)> extend = [&](Element e) -> bool {
    if (e == n) return true;
    for (Element c = 0; c < n; ++c) {
      if (used[c] || sig_a[e] != sig_b[c]) continue;
      bool ok = true;
      for (Element p = 0; p < e && ok; ++p) {
        ok = a.leq(p, e) == b.leq(image[p], c) && a.leq(e, p) == b.leq(c, image[p]);
      }
      if (!ok) continue;
      image[e] = c;
      used[c] = true;
      if (extend(e + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  // An order isomorphism between meet semilattices preserves meets and bounds.
  return image;
}

std::vector<std::string> labels_of(const Semilattice& s, const ElementSet& x) {
  std::vector<std::string> out;
  for (Element e : x.elements()) out.push_back(s.label(e));
  return out;
}

std::string format_set(const Semilattice& s, const ElementSet& x) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& l : labels_of(s, x)) {
    if (!first) os << ',';
    os << l;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace stonelat
