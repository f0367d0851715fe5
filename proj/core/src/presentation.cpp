#include "racg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "racg/errors.hpp"

namespace racg {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',' ||
           c == '#' || c == ':';
  });
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

}  // namespace

UnknownGeneratorError::UnknownGeneratorError(std::vector<std::string> names)
    : InputError("unknown generator(s): " + join_names(names)),
      names_(std::move(names)) {}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& what)
    : InputError("line " + std::to_string(line) + ", column " +
                 std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

ResourceLimitError::ResourceLimitError(std::size_t limit, int completed_radius,
                                       std::size_t elements)
    : Error("ball element cap of " + std::to_string(limit) +
            " exceeded after completing radius " +
            std::to_string(completed_radius) + " (" + std::to_string(elements) +
            " elements)"),
      limit_(limit),
      completed_radius_(completed_radius),
      elements_(elements) {}

std::strong_ordering operator<=>(GeneratorSet a, GeneratorSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia <=> *ib;
  }
  if (ia == a.end() && ib == b.end()) return std::strong_ordering::equal;
  return ia == a.end() ? std::strong_ordering::less
                       : std::strong_ordering::greater;
}

std::vector<Generator> GeneratorSet::to_vector() const {
  return {begin(), end()};
}

Presentation::Presentation(std::vector<std::string> names,
                           std::span<const Edge> commuting)
    : names_(std::move(names)) {
  if (names_.empty()) throw InputError("a presentation needs at least one generator");
  if (names_.size() > kMaxGenerators)
    throw InputError("at most " + std::to_string(kMaxGenerators) +
                     " generators are supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw InputError("invalid generator name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j])
        throw InputError("duplicate generator name '" + names_[i] + "'");
    }
  }
  commuting_.assign(names_.size(), GeneratorSet{});
  for (auto [s, t] : commuting) {
    if (s >= names_.size() || t >= names_.size())
      throw InputError("commuting pair references a generator out of range");
    if (s == t)
      throw InputError("generator '" + names_[s] + "' cannot commute with itself");
    commuting_[s].insert(t);
    commuting_[t].insert(s);
  }
}

Presentation Presentation::from_names(
    std::vector<std::string> names,
    std::span<const std::pair<std::string, std::string>> commuting) {
  std::vector<Edge> edges;
  std::vector<std::string> unknown;
  auto lookup = [&](const std::string& n) -> Generator {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) {
      unknown.push_back(n);
      return 0;
    }
    return static_cast<Generator>(it - names.begin());
  };
  for (const auto& [a, b] : commuting) {
    Generator s = lookup(a);
    Generator t = lookup(b);
    edges.emplace_back(s, t);
  }
  if (!unknown.empty()) throw UnknownGeneratorError(std::move(unknown));
  return Presentation(std::move(names), edges);
}

std::optional<Generator> Presentation::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Generator>(it - names_.begin());
}

Generator Presentation::index_of(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw UnknownGeneratorError({std::string(name)});
}

Order Presentation::order(Generator s, Generator t) const {
  if (s >= size() || t >= size())
    throw InputError("generator index out of range");
  if (s == t) return Order::one;
  return commutes(s, t) ? Order::two : Order::infinite;
}

bool Presentation::is_clique(GeneratorSet subset) const {
  for (Generator s : subset) {
    if (!(subset - GeneratorSet::single(s)).is_subset_of(commuting_[s]))
      return false;
  }
  return true;
}

std::vector<Presentation::Edge> Presentation::commuting_pairs() const {
  std::vector<Edge> out;
  for (std::size_t s = 0; s < size(); ++s) {
    for (Generator t : commuting_[s]) {
      if (t > s) out.emplace_back(static_cast<Generator>(s), t);
    }
  }
  return out;
}

std::pair<Presentation, std::vector<Generator>> Presentation::induced(
    GeneratorSet subset) const {
  std::vector<Generator> members = subset.to_vector();
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < members.size(); ++i) {
    names.push_back(names_[members[i]]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (commutes(members[i], members[j]))
        edges.emplace_back(static_cast<Generator>(i), static_cast<Generator>(j));
    }
  }
  return {Presentation(std::move(names), edges), std::move(members)};
}

Word Presentation::parse_word(std::string_view text) const {
  Word w;
  std::vector<std::string> unknown;
  for (auto token : split_ws(text)) {
    if (auto g = find(token)) {
      w.letters.push_back(*g);
    } else if (std::find(unknown.begin(), unknown.end(), token) ==
               unknown.end()) {
      unknown.emplace_back(token);
    }
  }
  if (!unknown.empty()) throw UnknownGeneratorError(std::move(unknown));
  return w;
}

GeneratorSet Presentation::parse_subset(std::string_view text) const {
  GeneratorSet out;
  for (Generator g : parse_word(text).letters) out.insert(g);
  return out;
}

std::string Presentation::format(std::span<const Generator> letters) const {
  std::string out;
  for (Generator g : letters) {
    if (!out.empty()) out += ' ';
    out += names_.at(g);
  }
  return out;
}

std::string Presentation::format(GeneratorSet subset) const {
  return format(subset.to_vector());
}

}  // namespace racg
