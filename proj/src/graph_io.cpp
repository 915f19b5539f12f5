#include "surfsing/graph_io.hpp"
#include "surfsing/errors.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace surfsing {

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  return words;
}

template <typename Int>
std::optional<Int> to_int(std::string_view text) {
  Int value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

// Splits `key=value`, checking the key.
std::optional<std::string_view> keyed(std::string_view word, std::string_view key) {
  if (word.size() <= key.size() || word.substr(0, key.size()) != key ||
      word[key.size()] != '=')
    return std::nullopt;
  return word.substr(key.size() + 1);
}

} // namespace

GraphFile parse_graph(std::istream& in, const std::string& source) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::map<std::string, std::size_t> vertex_line;
  std::vector<std::pair<std::string, std::int64_t>> degree_lines;
  std::vector<std::size_t> degree_line_numbers;

  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> ParseError { return {source, lineno, 0, msg}; };

  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const auto words = split_words(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (words.empty()) continue;
    const std::string& kind = words[0];

    if (kind == "vertex") {
      if (words.size() != 4) throw fail("expected 'vertex <id> selfint=<int> genus=<uint>'");
      const auto si = keyed(words[2], "selfint");
      const auto ge = keyed(words[3], "genus");
      if (!si || !ge) throw fail("expected 'vertex <id> selfint=<int> genus=<uint>'");
      const auto self = to_int<std::int64_t>(*si);
      if (!self) throw fail("selfint must be an integer, got '" + std::string(*si) + "'");
      const auto genus = to_int<std::uint32_t>(*ge);
      if (!genus) throw fail("genus must be a non-negative integer, got '" + std::string(*ge) + "'");
      if (!vertex_line.emplace(words[1], lineno).second)
        throw fail("duplicate vertex id '" + words[1] + "'");
      vertices.push_back({words[1], *self, *genus});
    } else if (kind == "edge") {
      if (words.size() != 3 && words.size() != 4)
        throw fail("expected 'edge <id1> <id2> [mult=<uint>]'");
      std::uint32_t mult = 1;
      if (words.size() == 4) {
        const auto m = keyed(words[3], "mult");
        const auto value = m ? to_int<std::uint32_t>(*m) : std::nullopt;
        if (!value || *value == 0) throw fail("mult must be a positive integer");
        mult = *value;
      }
      for (std::size_t k = 1; k <= 2; ++k)
        if (!vertex_line.count(words[k]))
          throw fail("edge references unknown vertex '" + words[k] + "'");
      if (words[1] == words[2])
        throw fail("self-loop on vertex '" + words[1] + "' is not allowed");
      edges.push_back({words[1], words[2], mult});
    } else if (kind == "degree") {
      if (words.size() != 3) throw fail("expected 'degree <id> <int>'");
      const auto value = to_int<std::int64_t>(words[2]);
      if (!value) throw fail("degree must be an integer, got '" + words[2] + "'");
      degree_lines.emplace_back(words[1], *value);
      degree_line_numbers.push_back(lineno);
    } else {
      throw fail("unknown directive '" + kind + "'");
    }
  }

  GraphFile file{DualGraph(std::move(vertices), edges), {}};
  file.degrees.values.assign(file.graph.size(), 0);
  std::set<std::string> seen;
  for (std::size_t k = 0; k < degree_lines.size(); ++k) {
    lineno = degree_line_numbers[k];
    const auto& [id, value] = degree_lines[k];
    if (!vertex_line.count(id)) throw fail("degree for unknown vertex '" + id + "'");
    if (!seen.insert(id).second) throw fail("duplicate degree for vertex '" + id + "'");
    file.degrees.values[file.graph.index_of(id)] = value;
  }
  return file;
}

GraphFile parse_graph_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_graph(in, source);
}

} // namespace surfsing
