#include "racg/normal_form.hpp"

#include <algorithm>
#include <string>

#include "racg/errors.hpp"

namespace racg {

namespace {

void check_letters(const Presentation& p, std::span<const Generator> letters) {
  for (Generator g : letters) {
    if (g >= p.size())
      throw InputError("letter index " + std::to_string(g) +
                       " is not a generator of this presentation");
  }
}

}  // namespace

Order order_product(const Presentation& p, Generator s, Generator t) {
  return p.order(s, t);
}

void multiply_in_place(const Presentation& p, std::vector<Generator>& letters,
                       Generator s) {
  const GeneratorSet blockers = p.blocking(s);
  // Scan left past letters commuting with s.
  std::size_t i = letters.size();
  while (i > 0 && !blockers.contains(letters[i - 1])) --i;
  if (i > 0 && letters[i - 1] == s) {
    // Nothing after this occurrence blocks anything it blocked, so removing
    // it leaves the remaining word lexicographically least.
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i - 1));
    return;
  }
  // s may sit anywhere in [i, end]; the greedy least linearization places it
  // before the first larger letter.
  while (i < letters.size() && letters[i] < s) ++i;
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(i), s);
}

NormalForm reduce(const Presentation& p, const Word& w) {
  check_letters(p, w.letters);
  std::vector<Generator> out;
  out.reserve(w.letters.size());
  for (Generator g : w.letters) multiply_in_place(p, out, g);
  return NormalForm::from_trusted(std::move(out));
}

NormalForm multiply(const Presentation& p, const NormalForm& u,
                    const NormalForm& v) {
  check_letters(p, u.letters());
  check_letters(p, v.letters());
  std::vector<Generator> out(u.letters().begin(), u.letters().end());
  for (Generator g : v.letters()) multiply_in_place(p, out, g);
  return NormalForm::from_trusted(std::move(out));
}

NormalForm multiply(const Presentation& p, const NormalForm& u, Generator s) {
  check_letters(p, u.letters());
  check_letters(p, std::span<const Generator>(&s, 1));
  std::vector<Generator> out(u.letters().begin(), u.letters().end());
  multiply_in_place(p, out, s);
  return NormalForm::from_trusted(std::move(out));
}

NormalForm multiply(const Presentation& p, Generator s, const NormalForm& u) {
  return invert(p, multiply(p, invert(p, u), s));
}

NormalForm invert(const Presentation& p, const NormalForm& u) {
  Word reversed{std::vector<Generator>(u.letters().rbegin(), u.letters().rend())};
  return reduce(p, reversed);
}

bool equal(const Presentation& p, const Word& w1, const Word& w2) {
  return reduce(p, w1) == reduce(p, w2);
}

std::size_t distance(const Presentation& p, const NormalForm& u,
                     const NormalForm& v) {
  return multiply(p, invert(p, u), v).length();
}

}  // namespace racg
