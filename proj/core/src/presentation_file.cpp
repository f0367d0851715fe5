#include "racg/presentation_file.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "racg/errors.hpp"

namespace racg {

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits [begin, end) of `line` on whitespace, recording 1-based columns.
std::vector<Token> tokens(std::string_view line, std::size_t begin,
                          std::size_t end, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < end && !is_space(line[j])) ++j;
    if (j > i) out.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
    i = j;
  }
  return out;
}

struct PairEntry {
  Token first;
  Token second;
};

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::optional<std::vector<Token>> generators;
  std::optional<std::vector<PairEntry>> pairs;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    std::size_t end = std::min(line.find('#'), line.size());
    auto words = tokens(line, 0, end, line_no);
    if (words.empty()) continue;

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos || colon >= end)
      throw ParseError(line_no, words.front().column,
                       "expected 'key: value' declaration");
    auto key_tokens = tokens(line, 0, colon, line_no);
    if (key_tokens.size() != 1)
      throw ParseError(line_no, 1, "expected a single key before ':'");
    const Token& key = key_tokens.front();

    if (key.text == "generators") {
      if (generators)
        throw ParseError(line_no, key.column, "duplicate 'generators' declaration");
      generators = tokens(line, colon + 1, end, line_no);
      for (const Token& g : *generators) {
        if (g.text.find(',') != std::string::npos ||
            g.text.find(':') != std::string::npos)
          throw ParseError(line_no, g.column,
                           "invalid generator name '" + g.text + "'");
      }
      if (generators->empty())
        throw ParseError(line_no, colon + 2, "at least one generator is required");
    } else if (key.text == "commuting_pairs") {
      if (pairs)
        throw ParseError(line_no, key.column,
                         "duplicate 'commuting_pairs' declaration");
      pairs.emplace();
      std::vector<std::pair<std::size_t, std::size_t>> segments;
      for (std::size_t s = colon + 1;;) {
        std::size_t comma = line.find(',', s);
        if (comma == std::string_view::npos || comma > end) {
          segments.emplace_back(s, end);
          break;
        }
        segments.emplace_back(s, comma);
        s = comma + 1;
      }
      for (auto [from, to] : segments) {
        auto names = tokens(line, from, to, line_no);
        if (names.empty() && segments.size() == 1) continue;  // empty list
        if (names.size() != 2)
          throw ParseError(line_no, names.empty() ? from + 1 : names.front().column,
                           "a commuting pair needs exactly two generator names");
        pairs->push_back({names[0], names[1]});
      }
    } else {
      throw ParseError(line_no, key.column, "unknown key '" + key.text + "'");
    }
  }

  if (!generators)
    throw ParseError(1, 1, "missing 'generators' declaration");

  std::vector<std::string> names;
  for (const Token& g : *generators) {
    if (std::find(names.begin(), names.end(), g.text) != names.end())
      throw ParseError(g.line, g.column, "duplicate generator '" + g.text + "'");
    names.push_back(g.text);
  }

  std::vector<Presentation::Edge> edges;
  std::vector<std::pair<Generator, Generator>> seen;
  auto lookup = [&](const Token& t) {
    auto it = std::find(names.begin(), names.end(), t.text);
    if (it == names.end())
      throw ParseError(t.line, t.column, "undeclared generator '" + t.text + "'");
    return static_cast<Generator>(it - names.begin());
  };
  if (pairs) {
    for (const PairEntry& e : *pairs) {
      Generator s = lookup(e.first);
      Generator t = lookup(e.second);
      if (s == t)
        throw ParseError(e.first.line, e.first.column,
                         "generator '" + e.first.text + "' paired with itself");
      const std::pair<Generator, Generator> key{std::min(s, t), std::max(s, t)};
      if (std::find(seen.begin(), seen.end(), key) != seen.end())
        throw ParseError(e.first.line, e.first.column,
                         "duplicate pair '" + e.first.text + " " +
                             e.second.text + "'");
      seen.push_back(key);
      edges.emplace_back(s, t);
    }
  }
  try {
    return Presentation(std::move(names), edges);
  } catch (const InputError& err) {
    throw ParseError(generators->front().line, generators->front().column,
                     err.what());
  }
}

Presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open presentation file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& n : p.names()) out += " " + n;
  out += "\ncommuting_pairs:";
  bool first = true;
  for (auto [s, t] : p.commuting_pairs()) {
    out += first ? " " : ", ";
    out += p.name(s) + " " + p.name(t);
    first = false;
  }
  out += "\n";
  return out;
}

std::string presentation_digest(const Presentation& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_presentation(p)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace racg
