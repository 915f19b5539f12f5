#include "surfsing/ideal_io.hpp"

#include <charconv>
#include <sstream>

namespace surfsing {

namespace {

bool to_exponent(const std::string& text, std::uint32_t& out) {
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

} // namespace

std::vector<MonomialIdeal> parse_ideals(std::istream& in, const std::string& source) {
  std::vector<MonomialIdeal> ideals;
  std::vector<Exponent> block;
  std::size_t lineno = 0;
  std::size_t block_start = 1;

  auto close_block = [&] {
    if (block.empty()) throw ParseError(source, block_start, 0, "empty ideal block");
    ideals.push_back(normalize(block));
    block.clear();
  };

  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto hash = raw.find('#');
    std::istringstream ss(hash == std::string::npos ? raw : raw.substr(0, hash));
    std::vector<std::string> words;
    for (std::string w; ss >> w;) words.push_back(w);
    if (words.empty()) continue;
    if (words.size() == 1 && words[0] == "---") {
      close_block();
      block_start = lineno + 1;
      continue;
    }
    if (block.empty()) block_start = lineno;
    Exponent e;
    if (words.size() != 3 || words[0] != "gen" || !to_exponent(words[1], e.a) ||
        !to_exponent(words[2], e.b))
      throw ParseError(source, lineno, 0, "expected 'gen <a> <b>' with non-negative integers");
    block.push_back(e);
  }
  close_block();
  return ideals;
}

std::vector<MonomialIdeal> parse_ideals_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_ideals(in, source);
}

void write_ideal(std::ostream& out, const MonomialIdeal& ideal) {
  for (const Exponent& e : ideal.generators()) out << "gen " << e.a << ' ' << e.b << '\n';
}

std::string describe(const MonomialIdeal& ideal) {
  auto factor = [](const char* var, std::uint32_t k) {
    if (k == 0) return std::string();
    return k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
  };
  std::string out = "(";
  bool first = true;
  for (const Exponent& e : ideal.generators()) {
    if (!first) out += ", ";
    first = false;
    const std::string x = factor("x", e.a), y = factor("y", e.b);
    if (x.empty() && y.empty()) out += "1";
    else if (x.empty() || y.empty()) out += x + y;
    else out += x + "*" + y;
  }
  return out + ")";
}

} // namespace surfsing
