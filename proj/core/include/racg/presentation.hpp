#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace racg {

// Generators are referred to by their position in the presentation's
// generator list; that position is also the fixed total order on S.
using Generator = std::uint8_t;

inline constexpr std::size_t kMaxGenerators = 64;

// A subset of the generators, stored as a bitmask.  Iteration visits members
// in generator order.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<Generator> members) {
    for (Generator g : members) insert(g);
  }

  static GeneratorSet first_n(std::size_t n) {
    return GeneratorSet(n >= 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1);
  }
  static GeneratorSet single(Generator g) {
    return GeneratorSet(std::uint64_t{1} << g);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Generator g) const { return (bits_ >> g) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  void insert(Generator g) { bits_ |= std::uint64_t{1} << g; }
  void erase(Generator g) { bits_ &= ~(std::uint64_t{1} << g); }

  // Smallest member; the set must be nonempty.
  Generator front() const {
    return static_cast<Generator>(std::countr_zero(bits_));
  }

  constexpr bool is_subset_of(GeneratorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ | b.bits_);
  }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ & b.bits_);
  }
  friend constexpr GeneratorSet operator-(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

  // Lexicographic order on the sorted member lists.
  friend std::strong_ordering operator<=>(GeneratorSet a, GeneratorSet b);

  class iterator {
   public:
    using value_type = Generator;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Generator operator*() const {
      return static_cast<Generator>(std::countr_zero(rest_));
    }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Generator> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

enum class Order { one, two, infinite };

// Word over the generators of some presentation; not necessarily reduced.
struct Word {
  std::vector<Generator> letters;

  friend bool operator==(const Word&, const Word&) = default;
};

// A right-angled Coxeter system, given by its commutation graph.  A pair of
// distinct generators either commutes (m = 2) or generates an infinite
// dihedral group (m = infinity).
class Presentation {
 public:
  using Edge = std::pair<Generator, Generator>;

  Presentation(std::vector<std::string> names, std::span<const Edge> commuting);

  static Presentation from_names(
      std::vector<std::string> names,
      std::span<const std::pair<std::string, std::string>> commuting);

  std::size_t size() const { return names_.size(); }
  GeneratorSet all() const { return GeneratorSet::first_n(size()); }

  const std::string& name(Generator g) const { return names_.at(g); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Generator> find(std::string_view name) const;
  // Throws UnknownGeneratorError.
  Generator index_of(std::string_view name) const;

  bool commutes(Generator s, Generator t) const {
    return commuting_[s].contains(t);
  }
  // Generators other than s that commute with s.
  GeneratorSet commuting_with(Generator s) const { return commuting_[s]; }
  // Generators that cannot be moved past s, including s itself.
  GeneratorSet blocking(Generator s) const { return all() - commuting_[s]; }

  Order order(Generator s, Generator t) const;

  bool is_clique(GeneratorSet subset) const;

  // Edges with first < second, sorted.
  std::vector<Edge> commuting_pairs() const;

  // Sub-presentation on `subset`, keeping the relative order.  The second
  // member maps induced generator indices back to this presentation.
  std::pair<Presentation, std::vector<Generator>> induced(
      GeneratorSet subset) const;

  // Whitespace-separated generator names.  Throws UnknownGeneratorError
  // listing every undeclared name.
  Word parse_word(std::string_view text) const;
  GeneratorSet parse_subset(std::string_view text) const;

  std::string format(std::span<const Generator> letters) const;
  std::string format(GeneratorSet subset) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<GeneratorSet> commuting_;
};

}  // namespace racg
