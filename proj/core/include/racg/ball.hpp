#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "racg/descent.hpp"
#include "racg/normal_form.hpp"
#include "racg/presentation.hpp"

namespace racg {

// Environment variable overriding the default element cap.
inline constexpr const char* kBallCapEnv = "RACG_MAX_BALL_ELEMENTS";
inline constexpr std::size_t kDefaultBallCap = 10'000'000;

// kDefaultBallCap unless RACG_MAX_BALL_ELEMENTS holds a positive integer.
std::size_t default_ball_cap();

struct BallOptions {
  std::size_t max_elements = default_ball_cap();
  unsigned threads = 1;
};

using ElementId = std::uint32_t;
inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// All elements of length <= radius, in ShortLex order.  Element ids are
// positions in that order, so sphere k occupies a contiguous id range.
// Each element's right descent set is precomputed and indexed.
class Ball {
 public:
  // Throws ResourceLimitError when the cap would be exceeded; never returns a
  // truncated ball.
  static Ball build(const Presentation& p, int radius,
                    const BallOptions& options = {});

  const Presentation& presentation() const { return presentation_; }
  int radius() const { return radius_; }
  std::size_t size() const { return descents_.size(); }

  std::size_t sphere_size(int k) const {
    return offsets_[static_cast<std::size_t>(k) + 1] - offsets_[static_cast<std::size_t>(k)];
  }
  std::vector<std::size_t> sphere_sizes() const;
  // Ids of B_k are [0, end_of_radius(k)).
  ElementId end_of_radius(int k) const {
    return offsets_[static_cast<std::size_t>(k) + 1];
  }

  int length(ElementId e) const;
  std::span<const Generator> letters(ElementId e) const;
  NormalForm element(ElementId e) const {
    auto l = letters(e);
    return NormalForm::from_trusted({l.begin(), l.end()});
  }

  std::optional<ElementId> find(std::span<const Generator> normal_form) const;
  std::optional<ElementId> find(const NormalForm& w) const {
    return find(w.letters());
  }

  DescentProfile descents(ElementId e) const { return descents_[e]; }
  // Elements whose right descent set is exactly `profile`, ascending ids.
  std::span<const ElementId> with_descent(DescentProfile profile) const;
  const std::map<DescentProfile, std::vector<ElementId>>& descent_index() const {
    return by_descent_;
  }

  // Id of e*s, when it lies inside the ball.
  std::optional<ElementId> neighbor(ElementId e, Generator s) const;

 private:
  explicit Ball(const Presentation& p) : presentation_(p) {}

  Presentation presentation_;
  int radius_ = 0;
  // sphere_letters_[k] holds sphere k as consecutive length-k records.
  std::vector<std::vector<Generator>> sphere_letters_;
  std::vector<ElementId> offsets_;
  std::vector<DescentProfile> descents_;
  std::map<DescentProfile, std::vector<ElementId>> by_descent_;
};

inline Ball ball(const Presentation& p, int radius,
                 const BallOptions& options = {}) {
  return Ball::build(p, radius, options);
}

// {w in B_R : right_descents(w) = T}; empty when T is not a clique.
std::vector<NormalForm> elements_with_descent(const Ball& b, DescentProfile target);
std::vector<NormalForm> elements_with_descent(const Presentation& p,
                                              DescentProfile target, int radius,
                                              const BallOptions& options = {});

// Multi-source breadth-first distances inside the ball's Cayley graph
// (edges w -- ws).  For a center c and d <= R - l(c) the value is exact,
// since every path of length d from c stays in B_R.  kUnreached otherwise.
std::vector<std::uint32_t> distances_to(const Ball& b,
                                        std::span<const ElementId> sources);

struct Dense {
  int n = 0;
  friend bool operator==(const Dense&, const Dense&) = default;
};

struct NotWithin {
  int n_max = 0;
  NormalForm counterexample;
  // min over targets v inside the ball of l(counterexample^-1 v); empty when
  // the ball holds no target at all.
  std::optional<std::size_t> target_distance;
};

struct QuasiDensityVerdict {
  std::variant<Dense, NotWithin> outcome;

  bool dense() const { return std::holds_alternative<Dense>(outcome); }
  const Dense& as_dense() const { return std::get<Dense>(outcome); }
  const NotWithin& as_not_within() const { return std::get<NotWithin>(outcome); }
};

// The element of B_{R-n} farthest from the targets (ShortLex-least among
// ties), provided its distance exceeds n.  Requires 0 <= n < R.
std::optional<NotWithin> farthest_from_targets(const Ball& b,
                                               DescentProfile target, int n);

// Smallest N <= n_max such that every w in B_{R-N} lies within N of some v
// with right_descents(v) = T.  Otherwise reports the element of B_{R-n_max}
// farthest from the targets (ShortLex-least among ties).
// Requires R > n_max >= 0 (PreconditionError).
QuasiDensityVerdict quasi_dense_check(const Ball& b, DescentProfile target,
                                      int n_max);
QuasiDensityVerdict quasi_dense_check(const Presentation& p,
                                      DescentProfile target, int radius,
                                      int n_max,
                                      const BallOptions& options = {});

}  // namespace racg
