#include <doctest.h>

#include <cstdlib>

#include "racg/ball.hpp"
#include "racg/descent.hpp"
#include "racg/errors.hpp"
#include "support/oracle.hpp"
#include "support/systems.hpp"

using namespace racg;
using racg::testing::d_inf;
using racg::testing::d_inf_x_d_inf;
using racg::testing::pentagon;

namespace {

NormalForm element(const Presentation& p, const std::string& word) {
  return reduce(p, p.parse_word(word));
}

std::vector<std::string> formatted(const Presentation& p,
                                   const std::vector<NormalForm>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(p.format(x.letters()));
  return out;
}

}  // namespace

TEST_CASE("ball of radius zero is the identity") {
  auto b = ball(pentagon(), 0);
  CHECK(b.size() == 1);
  CHECK(b.element(0).is_identity());
  CHECK(b.descents(0).size() == 0);
}

TEST_CASE("sphere sizes") {
  CHECK(ball(d_inf(), 6).sphere_sizes() ==
        std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2});
  // Frozen from oracle::naive_sphere_sizes.
  CHECK(ball(pentagon(), 10).sphere_sizes() ==
        std::vector<std::size_t>{1, 5, 15, 40, 105, 275, 720, 1885, 4935, 12920, 33825});
  CHECK(ball(testing::complete(3), 5).sphere_sizes() ==
        std::vector<std::size_t>{1, 3, 3, 1, 0, 0});
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : oracle::unlabeled_graphs(n)) {
      REQUIRE(ball(p, 5).sphere_sizes() == oracle::naive_sphere_sizes(p, 5));
    }
  }
}

TEST_CASE("ball storage is ShortLex ordered and searchable") {
  auto p = pentagon();
  auto b = ball(p, 6);
  for (ElementId e = 1; e < b.size(); ++e) REQUIRE(b.element(e - 1) < b.element(e));
  for (ElementId e = 0; e < b.size(); ++e) {
    REQUIRE(b.find(b.element(e)) == e);
    REQUIRE(b.length(e) == static_cast<int>(b.element(e).length()));
    REQUIRE(b.descents(e) == right_descents(p, b.element(e)));
    for (Generator s = 0; s < p.size(); ++s) {
      auto next = multiply(p, b.element(e), s);
      auto id = b.neighbor(e, s);
      if (next.length() <= 6) {
        REQUIRE(id.has_value());
        REQUIRE(b.element(*id) == next);
      } else {
        REQUIRE_FALSE(id.has_value());
      }
    }
  }
  CHECK_FALSE(b.find(element(p, "1 3 1 3 1 3 1")).has_value());
}

TEST_CASE("balls are closed under inversion") {
  auto p = d_inf_x_d_inf();
  auto b = ball(p, 7);
  for (ElementId e = 0; e < b.size(); ++e) {
    REQUIRE(b.find(invert(p, b.element(e))).has_value());
  }
}

TEST_CASE("threaded construction is identical") {
  auto p = pentagon();
  auto one = ball(p, 8, {.max_elements = kDefaultBallCap, .threads = 1});
  for (unsigned t : {2U, 4U}) {
    auto many = ball(p, 8, {.max_elements = kDefaultBallCap, .threads = t});
    REQUIRE(many.size() == one.size());
    for (ElementId e = 0; e < one.size(); ++e) REQUIRE(many.element(e) == one.element(e));
  }
}

TEST_CASE("element cap") {
  auto p = pentagon();
  try {
    ball(p, 8, {.max_elements = 1000});
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(e.limit() == 1000);
    CHECK(e.completed_radius() == 5);
    CHECK(e.elements() == 1 + 5 + 15 + 40 + 105 + 275);
  }
  CHECK_NOTHROW(ball(p, 4, {.max_elements = 166}));
  CHECK_THROWS_AS(ball(p, 4, {.max_elements = 165}), ResourceLimitError);
}

TEST_CASE("cap from the environment") {
  ::setenv(kBallCapEnv, "123", 1);
  CHECK(default_ball_cap() == 123);
  ::setenv(kBallCapEnv, "nonsense", 1);
  CHECK(default_ball_cap() == kDefaultBallCap);
  ::unsetenv(kBallCapEnv);
  CHECK(default_ball_cap() == kDefaultBallCap);
}

TEST_CASE("elements with a given descent set") {
  auto p = d_inf();
  CHECK(formatted(p, elements_with_descent(p, p.parse_subset("a"), 4)) ==
        std::vector<std::string>{"a", "b a", "a b a", "b a b a"});
  auto q = pentagon();
  CHECK(elements_with_descent(q, q.parse_subset("1 3"), 6).empty());
  CHECK(formatted(q, elements_with_descent(q, GeneratorSet{}, 6)) ==
        std::vector<std::string>{""});
  auto b = ball(q, 6);
  std::size_t total = 0;
  for (const auto& [profile, ids] : b.descent_index()) {
    CHECK(q.is_clique(profile));
    total += ids.size();
  }
  CHECK(total == b.size());
}

TEST_CASE("distances inside the ball") {
  auto p = d_inf();
  auto b = ball(p, 6);
  const ElementId identity = 0;
  auto d = distances_to(b, std::span<const ElementId>(&identity, 1));
  for (ElementId e = 0; e < b.size(); ++e) CHECK(d[e] == static_cast<std::uint32_t>(b.length(e)));
}

TEST_CASE("quasi_dense_check: verdicts") {
  auto p = d_inf();
  auto v = quasi_dense_check(p, p.parse_subset("a"), 8, 1);
  REQUIRE(v.dense());
  CHECK(v.as_dense().n == 1);

  auto q = pentagon();
  auto pv = quasi_dense_check(q, q.parse_subset("4"), 8, 3);
  REQUIRE(pv.dense());
  CHECK(pv.as_dense().n <= 3);

  auto r = d_inf_x_d_inf();
  auto rv = quasi_dense_check(r, r.parse_subset("a"), 12, 4);
  REQUIRE_FALSE(rv.dense());
  const auto& hole = rv.as_not_within();
  CHECK(hole.n_max == 4);
  CHECK(r.format(hole.counterexample.letters()) == "c d c d c d c d");
  REQUIRE(hole.target_distance.has_value());
  CHECK(*hole.target_distance >= 9);
}

TEST_CASE("quasi_dense_check: preconditions and edge cases") {
  auto p = d_inf();
  CHECK_THROWS_AS(quasi_dense_check(p, p.parse_subset("a"), 3, 3), PreconditionError);
  CHECK_THROWS_AS(quasi_dense_check(p, p.parse_subset("a"), 3, -1), PreconditionError);
  // T = {} : only the identity qualifies.
  auto v = quasi_dense_check(p, GeneratorSet{}, 6, 2);
  REQUIRE_FALSE(v.dense());
  CHECK(v.as_not_within().counterexample.length() == 4);
  // A non-clique target has no members at all.
  auto none = quasi_dense_check(p, p.parse_subset("a b"), 4, 1);
  REQUIRE_FALSE(none.dense());
  CHECK_FALSE(none.as_not_within().target_distance.has_value());
}

TEST_CASE("dense verdicts are honest on small systems") {
  // Cross-check Dense(N) against direct distance computations.
  auto p = pentagon();
  auto b = ball(p, 7);
  for (const auto& clique : {p.parse_subset("1"), p.parse_subset("1 2")}) {
    auto v = quasi_dense_check(b, clique, 3);
    REQUIRE(v.dense());
    const int n = v.as_dense().n;
    std::vector<NormalForm> targets = elements_with_descent(b, clique);
    for (ElementId e = 0; e < b.end_of_radius(7 - n); ++e) {
      bool near = false;
      for (const auto& t : targets) {
        if (distance(p, b.element(e), t) <= static_cast<std::size_t>(n)) {
          near = true;
          break;
        }
      }
      REQUIRE(near);
    }
  }
}
