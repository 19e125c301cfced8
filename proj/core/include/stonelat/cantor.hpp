#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace stonelat::cantor {

/// Ordered set of single-character symbols. Symbols may not be whitespace,
/// operator characters (`&|!()`), or the rendering markers `^` and `-`.
class Alphabet {
 public:
  explicit Alphabet(std::string symbols);

  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  /// A one-symbol alphabet has a single infinite word.
  bool degenerate() const noexcept { return symbols_.size() == 1; }
  bool contains(char c) const noexcept { return symbols_.find(c) != std::string::npos; }
  std::size_t rank(char c) const { return symbols_.find(c); }

  /// Throws ForeignSymbol.
  void check_word(std::string_view w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// Finite words are plain strings; the empty string is ε.
using Word = std::string;

/// Dictionary order with symbols ranked by their alphabet position. On a
/// prefix antichain this is the left-to-right order of the prefix tree.
bool word_less(const Alphabet& a, const Word& x, const Word& y);

/// A clopen subset XA^ω of Cantor space, kept as its canonical prefix code:
/// an antichain under the prefix order, with no complete family of sibling
/// extensions, in dictionary order. {} is the empty set, {ε} the whole space.
/// Two values denote the same set iff they compare equal.
class PrefixClopen {
 public:
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  bool is_bottom() const noexcept { return words_.empty(); }
  bool is_top() const noexcept { return words_.size() == 1 && words_.front().empty(); }

  static PrefixClopen bottom(const Alphabet& a) { return PrefixClopen(a, {}); }
  static PrefixClopen top(const Alphabet& a) { return PrefixClopen(a, {Word{}}); }

  friend bool operator==(const PrefixClopen&, const PrefixClopen&) = default;

 private:
  friend PrefixClopen normalize(const Alphabet& a, std::vector<Word> raw);
  PrefixClopen(Alphabet a, std::vector<Word> words)
      : alphabet_(std::move(a)), words_(std::move(words)) {}

  Alphabet alphabet_;
  std::vector<Word> words_;
};

/// Canonical form of the union of cylinders xA^ω over `raw`. Throws
/// ForeignSymbol.
PrefixClopen normalize(const Alphabet& a, std::vector<Word> raw);

/// These throw AlphabetMismatch when the operands disagree on the alphabet.
PrefixClopen join(const PrefixClopen& p, const PrefixClopen& q);
PrefixClopen meet(const PrefixClopen& p, const PrefixClopen& q);
bool leq(const PrefixClopen& p, const PrefixClopen& q);

PrefixClopen complement(const PrefixClopen& p);

/// The cylinder xA^ω, image of x under κ.
PrefixClopen kappa_word(const Alphabet& a, const Word& x);

/// Whether the complement of xA^ω is ⊥, ⊤, or a single cylinder.
bool is_single_cylinder_complemented(const Alphabet& a, const Word& x);

/// The ultimately periodic point u·v·v·v…
struct UPWord {
  Word preperiod;
  Word period;

  /// Throws ParseError for an empty period.
  UPWord(Word u, Word v);
  /// Parses `u(v)`, e.g. `(ab)` or `a(b)`.
  static UPWord parse(std::string_view text);

  /// First n symbols.
  Word prefix(std::size_t n) const;
};

bool membership(const PrefixClopen& p, const UPWord& w);

/// Prefixes of w of length 0..k-1: the k shortest elements of its ultrafilter.
std::vector<Word> filter_prefixes(const UPWord& w, std::size_t k);

/// Evaluates an expression over words, TOP, BOT, `^` (ε), `!`, `&`, `|` and
/// parentheses, with precedence ! > & > |. Throws ParseError, ForeignSymbol.
PrefixClopen eval(const Alphabet& a, std::string_view expression);

/// Space-separated words in dictionary order; `-` for ⊥ and `^` for ⊤.
std::string render(const PrefixClopen& p);

}  // namespace stonelat::cantor
