#pragma once

#include <compare>
#include <span>
#include <vector>

#include "racg/presentation.hpp"

namespace racg {

// The ShortLex-least reduced word of a group element: shortest first, then
// lexicographically least in generator order.  Two words represent the same
// element exactly when their normal forms compare equal.
class NormalForm {
 public:
  NormalForm() = default;  // identity

  std::span<const Generator> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend std::strong_ordering operator<=>(const NormalForm& a,
                                          const NormalForm& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

  // For callers that already hold a normal form (e.g. ball storage).  No
  // validation is done.
  static NormalForm from_trusted(std::vector<Generator> letters) {
    NormalForm nf;
    nf.letters_ = std::move(letters);
    return nf;
  }

  Word to_word() const { return Word{letters_}; }

 private:
  std::vector<Generator> letters_;
};

Order order_product(const Presentation& p, Generator s, Generator t);

// Right-multiplies the normal form held in `letters` by s, in place.  If s is
// a right descent its last occurrence is removed; otherwise s is inserted at
// the first position after its last non-commuting letter where it precedes
// the next letter in generator order.
void multiply_in_place(const Presentation& p, std::vector<Generator>& letters,
                       Generator s);

// Throws InputError on letters outside the presentation.
NormalForm reduce(const Presentation& p, const Word& w);

NormalForm multiply(const Presentation& p, const NormalForm& u,
                    const NormalForm& v);
NormalForm multiply(const Presentation& p, const NormalForm& u, Generator s);
NormalForm multiply(const Presentation& p, Generator s, const NormalForm& u);

NormalForm invert(const Presentation& p, const NormalForm& u);

bool equal(const Presentation& p, const Word& w1, const Word& w2);

// Word-metric distance l(u^-1 v).
std::size_t distance(const Presentation& p, const NormalForm& u,
                     const NormalForm& v);

}  // namespace racg
