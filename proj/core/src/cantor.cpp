#include "stonelat/cantor.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "stonelat/error.hpp"

namespace stonelat::cantor {

namespace {

constexpr std::string_view kReserved = "&|!()^-";

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

void check_same(const PrefixClopen& p, const PrefixClopen& q) {
  if (!(p.alphabet() == q.alphabet())) {
    throw Error(Errc::kAlphabetMismatch, "'" + p.alphabet().symbols() + "' vs '" + q.alphabet().symbols() + "'");
  }
}

void complement_below(const std::vector<Word>& code, const Alphabet& a, const Word& u,
                      std::vector<Word>& out) {
  bool extended = false;
  for (const auto& x : code) {
    if (is_prefix(x, u)) return;  // u's cylinder lies inside the set
    extended = extended || is_prefix(u, x);
  }
  if (!extended) {
    out.push_back(u);
    return;
  }
  for (char c : a.symbols()) complement_below(code, a, u + c, out);
}

}  // namespace

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(Errc::kBadAlphabet, "empty alphabet");
  std::set<char> seen;
  for (char c : symbols_) {
    if (std::isspace(static_cast<unsigned char>(c)) || kReserved.find(c) != std::string_view::npos) {
      throw Error(Errc::kBadAlphabet, std::string("reserved symbol '") + c + "'");
    }
    if (!seen.insert(c).second) throw Error(Errc::kBadAlphabet, std::string("repeated symbol '") + c + "'");
  }
}

void Alphabet::check_word(std::string_view w) const {
  for (char c : w) {
    if (!contains(c)) {
      throw Error(Errc::kForeignSymbol, std::string("'") + c + "' in \"" + std::string(w) + "\"");
    }
  }
}

bool word_less(const Alphabet& a, const Word& x, const Word& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                      [&](char l, char r) { return a.rank(l) < a.rank(r); });
}

PrefixClopen normalize(const Alphabet& a, std::vector<Word> raw) {
  for (const auto& w : raw) a.check_word(w);
  std::set<Word> code(raw.begin(), raw.end());

  // Absorption: drop words that extend another member.
  for (auto it = code.begin(); it != code.end();) {
    bool absorbed = false;
    for (std::size_t len = 0; len < it->size() && !absorbed; ++len) {
      absorbed = code.contains(it->substr(0, len));
    }
    it = absorbed ? code.erase(it) : std::next(it);
  }

  // Collapse complete sibling families until none remain.
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& w : code) {
      if (w.empty()) continue;
      const Word parent = w.substr(0, w.size() - 1);
      const bool complete = std::all_of(a.symbols().begin(), a.symbols().end(),
                                        [&](char c) { return code.contains(parent + c); });
      if (!complete) continue;
      for (char c : a.symbols()) code.erase(parent + c);
      code.insert(parent);
      changed = true;
      break;
    }
  }

  std::vector<Word> words(code.begin(), code.end());
  std::sort(words.begin(), words.end(), [&](const Word& x, const Word& y) { return word_less(a, x, y); });
  return PrefixClopen(a, std::move(words));
}

PrefixClopen join(const PrefixClopen& p, const PrefixClopen& q) {
  check_same(p, q);
  std::vector<Word> all = p.words();
  all.insert(all.end(), q.words().begin(), q.words().end());
  return normalize(p.alphabet(), std::move(all));
}

PrefixClopen meet(const PrefixClopen& p, const PrefixClopen& q) {
  check_same(p, q);
  std::vector<Word> out;
  for (const auto& u : p.words()) {
    for (const auto& v : q.words()) {
      if (is_prefix(u, v)) {
        out.push_back(v);
      } else if (is_prefix(v, u)) {
        out.push_back(u);
      }
    }
  }
  return normalize(p.alphabet(), std::move(out));
}

bool leq(const PrefixClopen& p, const PrefixClopen& q) { return meet(p, q) == p; }

PrefixClopen complement(const PrefixClopen& p) {
  std::vector<Word> out;
  complement_below(p.words(), p.alphabet(), Word{}, out);
  return normalize(p.alphabet(), std::move(out));
}

PrefixClopen kappa_word(const Alphabet& a, const Word& x) { return normalize(a, {x}); }

bool is_single_cylinder_complemented(const Alphabet& a, const Word& x) {
  const auto c = complement(kappa_word(a, x));
  return c.words().size() <= 1;
}

UPWord::UPWord(Word u, Word v) : preperiod(std::move(u)), period(std::move(v)) {
  if (period.empty()) throw Error(Errc::kParse, "period of an infinite word must be non-empty");
}

UPWord UPWord::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw Error(Errc::kParse, "expected u(v), got \"" + std::string(text) + "\"");
  }
  const auto period = text.substr(open + 1, text.size() - open - 2);
  if (period.find_first_of("()") != std::string_view::npos) {
    throw Error(Errc::kParse, "nested parentheses in \"" + std::string(text) + "\"");
  }
  return UPWord(Word(text.substr(0, open)), Word(period));
}

Word UPWord::prefix(std::size_t n) const {
  Word out = preperiod.substr(0, std::min(n, preperiod.size()));
  while (out.size() < n) out += period[(out.size() - preperiod.size()) % period.size()];
  return out;
}

bool membership(const PrefixClopen& p, const UPWord& w) {
  for (char c : w.preperiod + w.period) {
    if (!p.alphabet().contains(c)) {
      throw Error(Errc::kAlphabetMismatch, std::string("point uses '") + c + "'");
    }
  }
  std::size_t depth = 0;
  for (const auto& x : p.words()) depth = std::max(depth, x.size());
  const Word head = w.prefix(depth);
  return std::any_of(p.words().begin(), p.words().end(), [&](const Word& x) { return is_prefix(x, head); });
}

std::vector<Word> filter_prefixes(const UPWord& w, std::size_t k) {
  std::vector<Word> out;
  for (std::size_t n = 0; n < k; ++n) out.push_back(w.prefix(n));
  return out;
}

namespace {

class Parser {
 public:
  Parser(const Alphabet& a, std::string_view text) : alphabet_(a), text_(text) {}

  PrefixClopen parse() {
    auto v = parse_join();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(Errc::kParse, why + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PrefixClopen parse_join() {
    auto v = parse_meet();
    while (accept('|')) v = join(v, parse_meet());
    return v;
  }

  PrefixClopen parse_meet() {
    auto v = parse_unary();
    while (accept('&')) v = meet(v, parse_unary());
    return v;
  }

  PrefixClopen parse_unary() {
    if (accept('!')) return complement(parse_unary());
    return parse_primary();
  }

  PrefixClopen parse_primary() {
    if (accept('(')) {
      auto v = parse_join();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           std::string_view("&|!()").find(text_[pos_]) == std::string_view::npos) {
      ++pos_;
    }
    const std::string atom(text_.substr(start, pos_ - start));
    if (atom.empty()) fail("expected a word");
    if (atom == "TOP" || atom == "^") return PrefixClopen::top(alphabet_);
    if (atom == "BOT") return PrefixClopen::bottom(alphabet_);
    return kappa_word(alphabet_, atom);
  }

  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PrefixClopen eval(const Alphabet& a, std::string_view expression) { return Parser(a, expression).parse(); }

std::string render(const PrefixClopen& p) {
  if (p.is_bottom()) return "-";
  if (p.is_top()) return "^";
  std::string out;
  for (const auto& w : p.words()) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace stonelat::cantor
