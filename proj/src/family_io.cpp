#include "surfsing/family_io.hpp"
#include "surfsing/errors.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace surfsing {

namespace {

template <typename Int>
bool to_int(std::string_view text, Int& out) {
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc{} && ptr == end && !text.empty();
}

} // namespace

Family parse_family(std::istream& in, const std::string& source) {
  Family family;
  std::vector<std::size_t> header_lines;
  std::set<std::string> seen_keys;
  bool in_block = false;
  bool saw_m = false, saw_mu2 = false;
  std::size_t lineno = 0;

  auto fail = [&](const std::string& msg) { return ParseError(source, lineno, 0, msg); };
  auto close_block = [&] {
    if (!in_block) return;
    if (!saw_m || !saw_mu2)
      throw ParseError(source, header_lines.back(), 0,
                       "fiber t=" + family.back().label + " is missing " + (saw_m ? "mu2" : "m"));
    in_block = false;
  };

  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) {
      close_block();
      continue;
    }
    const auto hash = raw.find('#');
    std::istringstream ss(hash == std::string::npos ? raw : raw.substr(0, hash));
    std::vector<std::string> words;
    for (std::string w; ss >> w;) words.push_back(w);
    if (words.empty()) continue;

    if (words[0] == "fiber") {
      close_block();
      if (words.size() != 2 || words[1].rfind("t=", 0) != 0 || words[1].size() == 2)
        throw fail("expected 'fiber t=<label>'");
      family.push_back({});
      family.back().label = words[1].substr(2);
      header_lines.push_back(lineno);
      seen_keys.clear();
      saw_m = saw_mu2 = false;
      in_block = true;
      continue;
    }
    if (!in_block) throw fail("attributes must follow a 'fiber t=<label>' line");

    FiberRecord& r = family.back();
    for (const std::string& word : words) {
      const auto eq = word.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == word.size())
        throw fail("expected key=value, got '" + word + "'");
      const std::string key = word.substr(0, eq);
      const std::string value = word.substr(eq + 1);
      if (!seen_keys.insert(key).second) throw fail("duplicate key '" + key + "'");

      auto rational = [&](const std::string& text) {
        try {
          return parse_rational(text);
        } catch (const std::invalid_argument& e) {
          throw fail(key + ": '" + text + "' is not a rational (" + e.what() + ")");
        }
      };
      auto integer = [&]() {
        std::int64_t v = 0;
        if (!to_int(value, v)) throw fail(key + " must be an integer, got '" + value + "'");
        return v;
      };
      auto unsigned_int = [&]() {
        std::uint64_t v = 0;
        if (!to_int(value, v)) throw fail(key + " must be a non-negative integer, got '" + value + "'");
        return v;
      };

      if (key == "m") {
        r.m = unsigned_int();
        if (r.m == 0) throw fail("m must be >= 1");
        saw_m = true;
      } else if (key == "mu2") {
        r.mu2 = unsigned_int();
        saw_mu2 = true;
      } else if (key == "khat2") {
        r.khat2 = rational(value);
      } else if (key == "k2") {
        r.k2 = rational(value);
      } else if (key == "chiE") {
        r.chiE = integer();
      } else if (key == "chiX") {
        r.chiX = integer();
      } else if (key == "chiXtilde") {
        r.chiXtilde = integer();
      } else if (key == "e") {
        std::size_t start = 0;
        for (;;) {
          const auto comma = value.find(',', start);
          r.e_values.push_back(rational(value.substr(start, comma - start)));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      } else {
        throw fail("unknown key '" + key + "'");
      }
    }
  }
  close_block();
  if (family.empty()) throw ParseError(source, 0, 0, "no fiber records");
  return family;
}

Family parse_family_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_family(in, source);
}

} // namespace surfsing
