#include "racg/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <numeric>
#include <string>
#include <thread>

#include "racg/errors.hpp"

namespace racg {

namespace {

struct SphereView {
  const Generator* data;
  std::size_t width;
  std::size_t count;

  std::span<const Generator> at(std::size_t i) const {
    return {data + i * width, width};
  }
};

// Successors u*s of length k+1 for the elements [first, last) of a sphere.
void expand_range(const Presentation& p, SphereView sphere,
                  std::span<const DescentProfile> descents, std::size_t first,
                  std::size_t last, std::vector<Generator>& out) {
  std::vector<Generator> scratch;
  scratch.reserve(sphere.width + 1);
  const GeneratorSet all = p.all();
  for (std::size_t i = first; i < last; ++i) {
    auto u = sphere.at(i);
    for (Generator s : all - descents[i]) {
      scratch.assign(u.begin(), u.end());
      multiply_in_place(p, scratch, s);
      out.insert(out.end(), scratch.begin(), scratch.end());
    }
  }
}

// Sorts fixed-width records and drops duplicates.
std::vector<Generator> sort_unique_records(const std::vector<Generator>& raw,
                                           std::size_t width) {
  const std::size_t n = raw.size() / width;
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  auto less = [&](std::uint32_t a, std::uint32_t b) {
    return std::memcmp(raw.data() + a * width, raw.data() + b * width, width) < 0;
  };
  auto same = [&](std::uint32_t a, std::uint32_t b) {
    return std::memcmp(raw.data() + a * width, raw.data() + b * width, width) == 0;
  };
  std::sort(order.begin(), order.end(), less);
  order.erase(std::unique(order.begin(), order.end(), same), order.end());
  std::vector<Generator> out;
  out.reserve(order.size() * width);
  for (auto idx : order) {
    out.insert(out.end(), raw.begin() + static_cast<std::ptrdiff_t>(idx * width),
               raw.begin() + static_cast<std::ptrdiff_t>((idx + 1) * width));
  }
  return out;
}

}  // namespace

std::size_t default_ball_cap() {
  if (const char* env = std::getenv(kBallCapEnv)) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBallCap;
}

Ball Ball::build(const Presentation& p, int radius, const BallOptions& options) {
  if (radius < 0) throw InputError("ball radius must be non-negative");
  const std::size_t cap =
      std::min<std::size_t>(options.max_elements, std::numeric_limits<ElementId>::max() - 1);
  if (cap < 1) throw ResourceLimitError(cap, -1, 0);

  Ball b(p);
  b.radius_ = radius;
  b.sphere_letters_.emplace_back();
  b.offsets_ = {0, 1};
  b.descents_.push_back(DescentProfile{});

  const unsigned threads = std::max(1U, options.threads);
  for (int k = 0; k < radius; ++k) {
    const std::size_t width = static_cast<std::size_t>(k);
    const std::size_t count = b.sphere_size(k);
    SphereView sphere{b.sphere_letters_[width].data(), width, count};
    std::span<const DescentProfile> sphere_descents(
        b.descents_.data() + b.offsets_[width], count);

    std::vector<Generator> raw;
    if (threads == 1 || count < 1024) {
      expand_range(p, sphere, sphere_descents, 0, count, raw);
    } else {
      std::vector<std::vector<Generator>> parts(threads);
      std::vector<std::jthread> workers;
      const std::size_t chunk = (count + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t first = std::min(count, t * chunk);
        const std::size_t last = std::min(count, first + chunk);
        workers.emplace_back([&, first, last, t] {
          expand_range(p, sphere, sphere_descents, first, last, parts[t]);
        });
      }
      workers.clear();
      for (auto& part : parts) raw.insert(raw.end(), part.begin(), part.end());
    }

    std::vector<Generator> next = sort_unique_records(raw, width + 1);
    const std::size_t next_count = next.size() / (width + 1);
    if (b.size() + next_count > cap) throw ResourceLimitError(cap, k, b.size());

    const ElementId base = b.offsets_.back();
    b.offsets_.push_back(base + static_cast<ElementId>(next_count));
    b.descents_.reserve(b.descents_.size() + next_count);
    for (std::size_t i = 0; i < next_count; ++i) {
      b.descents_.push_back(right_descents(
          p, std::span<const Generator>(next.data() + i * (width + 1), width + 1)));
    }
    b.sphere_letters_.push_back(std::move(next));
  }

  for (ElementId e = 0; e < b.descents_.size(); ++e)
    b.by_descent_[b.descents_[e]].push_back(e);
  return b;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= radius_; ++k) out.push_back(sphere_size(k));
  return out;
}

int Ball::length(ElementId e) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), e);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::span<const Generator> Ball::letters(ElementId e) const {
  const int k = length(e);
  const std::size_t width = static_cast<std::size_t>(k);
  const std::size_t i = e - offsets_[width];
  return {sphere_letters_[width].data() + i * width, width};
}

std::optional<ElementId> Ball::find(std::span<const Generator> normal_form) const {
  const std::size_t width = normal_form.size();
  if (width > static_cast<std::size_t>(radius_)) return std::nullopt;
  if (width == 0) return ElementId{0};
  const Generator* data = sphere_letters_[width].data();
  std::size_t lo = 0;
  std::size_t hi = sphere_size(static_cast<int>(width));
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    int c = std::memcmp(data + mid * width, normal_form.data(), width);
    if (c == 0) return offsets_[width] + static_cast<ElementId>(mid);
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

std::span<const ElementId> Ball::with_descent(DescentProfile profile) const {
  auto it = by_descent_.find(profile);
  if (it == by_descent_.end()) return {};
  return it->second;
}

std::optional<ElementId> Ball::neighbor(ElementId e, Generator s) const {
  thread_local std::vector<Generator> scratch;
  auto u = letters(e);
  scratch.assign(u.begin(), u.end());
  multiply_in_place(presentation_, scratch, s);
  return find(scratch);
}

std::vector<NormalForm> elements_with_descent(const Ball& b,
                                              DescentProfile target) {
  std::vector<NormalForm> out;
  for (ElementId e : b.with_descent(target)) out.push_back(b.element(e));
  return out;
}

std::vector<NormalForm> elements_with_descent(const Presentation& p,
                                              DescentProfile target, int radius,
                                              const BallOptions& options) {
  return elements_with_descent(Ball::build(p, radius, options), target);
}

std::vector<std::uint32_t> distances_to(const Ball& b,
                                        std::span<const ElementId> sources) {
  std::vector<std::uint32_t> dist(b.size(), kUnreached);
  std::deque<ElementId> queue;
  for (ElementId e : sources) {
    if (dist[e] == kUnreached) {
      dist[e] = 0;
      queue.push_back(e);
    }
  }
  const GeneratorSet all = b.presentation().all();
  while (!queue.empty()) {
    ElementId e = queue.front();
    queue.pop_front();
    for (Generator s : all) {
      auto n = b.neighbor(e, s);
      if (n && dist[*n] == kUnreached) {
        dist[*n] = dist[e] + 1;
        queue.push_back(*n);
      }
    }
  }
  return dist;
}

namespace {

void check_margin(int radius, int n) {
  if (n < 0 || radius <= n)
    throw PreconditionError("density checks need R > N >= 0 (R=" +
                            std::to_string(radius) +
                            ", N=" + std::to_string(n) + ")");
}

std::optional<NotWithin> farthest(const Ball& b,
                                  std::span<const ElementId> targets,
                                  std::span<const std::uint32_t> dist, int n) {
  const ElementId end = b.end_of_radius(b.radius() - n);
  ElementId worst = 0;
  for (ElementId e = 1; e < end; ++e) {
    if (dist[e] > dist[worst]) worst = e;
  }
  if (dist[worst] <= static_cast<std::uint32_t>(n)) return std::nullopt;

  NotWithin hole;
  hole.n_max = n;
  hole.counterexample = b.element(worst);
  const Presentation& p = b.presentation();
  const NormalForm inverse = invert(p, hole.counterexample);
  for (ElementId v : targets) {
    std::size_t d = multiply(p, inverse, b.element(v)).length();
    if (!hole.target_distance || d < *hole.target_distance) hole.target_distance = d;
  }
  return hole;
}

}  // namespace

std::optional<NotWithin> farthest_from_targets(const Ball& b,
                                               DescentProfile target, int n) {
  check_margin(b.radius(), n);
  auto targets = b.with_descent(target);
  auto dist = distances_to(b, targets);
  return farthest(b, targets, dist, n);
}

QuasiDensityVerdict quasi_dense_check(const Ball& b, DescentProfile target,
                                      int n_max) {
  const int radius = b.radius();
  check_margin(radius, n_max);
  auto targets = b.with_descent(target);
  auto dist = distances_to(b, targets);

  for (int n = 0; n <= n_max; ++n) {
    const ElementId end = b.end_of_radius(radius - n);
    bool ok = true;
    for (ElementId e = 0; e < end && ok; ++e) {
      ok = dist[e] <= static_cast<std::uint32_t>(n);
    }
    if (ok) return {Dense{n}};
  }
  // The n = n_max pass failed, so a hole exists.
  return {*farthest(b, targets, dist, n_max)};
}

QuasiDensityVerdict quasi_dense_check(const Presentation& p,
                                      DescentProfile target, int radius,
                                      int n_max, const BallOptions& options) {
  check_margin(radius, n_max);
  return quasi_dense_check(Ball::build(p, radius, options), target, n_max);
}

}  // namespace racg
