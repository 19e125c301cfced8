#include "stonelat/text_format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

#include "stonelat/error.hpp"

namespace stonelat {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::string where(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

Semilattice parse_semilattice(std::string_view text) {
  std::vector<std::string> labels;
  bool have_elements = false;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::tuple<std::string, std::string, std::string>> meets;

  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw Error(Errc::kParse, where(lineno) + "missing ':'");
    const std::string key = trim(std::string_view(line).substr(0, colon));
    const std::string rest = trim(std::string_view(line).substr(colon + 1));

    if (key == "elements") {
      if (have_elements) throw Error(Errc::kParse, where(lineno) + "duplicate elements line");
      labels = split_ws(rest);
      have_elements = true;
    } else if (key == "order") {
      std::string spaced = rest;
      std::replace(spaced.begin(), spaced.end(), ',', ' ');
      for (const auto& tok : split_ws(spaced)) {
        std::vector<std::string> chain;
        std::size_t start = 0;
        while (true) {
          const auto lt = tok.find('<', start);
          chain.push_back(tok.substr(start, lt - start));
          if (lt == std::string::npos) break;
          start = lt + 1;
        }
        if (chain.size() < 2) throw Error(Errc::kParse, where(lineno) + "expected a<b, got " + tok);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          if (chain[i].empty() || chain[i + 1].empty()) {
            throw Error(Errc::kParse, where(lineno) + "empty operand in " + tok);
          }
          pairs.emplace_back(chain[i], chain[i + 1]);
        }
      }
    } else if (key == "meet") {
      const auto tokens = split_ws(rest);
      if (tokens.size() != 4 || tokens[2] != "=") {
        throw Error(Errc::kParse, where(lineno) + "expected 'meet: a b = c'");
      }
      meets.emplace_back(tokens[0], tokens[1], tokens[3]);
      for (const auto& operand : {tokens[0], tokens[1]}) {
        if (operand != tokens[3]) pairs.emplace_back(tokens[3], operand);
      }
    } else {
      throw Error(Errc::kParse, where(lineno) + "unknown key '" + key + "'");
    }
  }
  if (!have_elements) throw Error(Errc::kParse, "missing 'elements:' line");

  auto s = Semilattice::from_order(std::move(labels), pairs);
  for (const auto& [a, b, c] : meets) {
    if (s.meet(s.at(a), s.at(b)) != s.at(c)) {
      throw Error(Errc::kBadTable, "declared meet " + a + " " + b + " = " + c + " but the order gives " +
                                       s.label(s.meet(s.at(a), s.at(b))));
    }
  }
  return s;
}

Semilattice read_semilattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_semilattice(buf.str());
}

std::string to_text(const Semilattice& s) {
  std::ostringstream os;
  os << "elements:";
  for (const auto& l : s.labels()) os << ' ' << l;
  os << "\norder:";
  for (Element e = 0; e < s.size(); ++e) {
    if (e == s.zero()) continue;
    for (Element f : covers_hat(s, e).elements()) os << ' ' << s.label(f) << '<' << s.label(e);
  }
  os << '\n';
  return os.str();
}

}  // namespace stonelat
