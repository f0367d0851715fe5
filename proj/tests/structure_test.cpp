#include <doctest.h>

#include "racg/ball.hpp"
#include "racg/errors.hpp"
#include "racg/structure.hpp"
#include "support/oracle.hpp"
#include "support/systems.hpp"

using namespace racg;
using racg::testing::d_inf;
using racg::testing::d_inf_x_d_inf;
using racg::testing::d_inf_x_z2;
using racg::testing::pentagon;

namespace {

std::vector<std::string> formatted(const Presentation& p,
                                   const std::vector<GeneratorSet>& sets) {
  std::vector<std::string> out;
  for (auto s : sets) out.push_back(p.format(s));
  return out;
}

// W_T is finite iff the ball of the sub-presentation stops growing.
bool finite_by_growth(const Presentation& p, GeneratorSet t) {
  if (t.empty()) return true;
  auto [sub, index] = p.induced(t);
  const int r = static_cast<int>(t.size()) + 1;
  return ball(sub, r).sphere_size(r) == 0;
}

}  // namespace

TEST_CASE("is_spherical and is_infinite") {
  auto p = pentagon();
  CHECK(is_spherical(p, GeneratorSet{}));
  CHECK(is_spherical(p, p.parse_subset("1 2")));
  CHECK_FALSE(is_spherical(p, p.parse_subset("1 3")));
  CHECK_FALSE(is_infinite(p, GeneratorSet{}));
  CHECK(is_infinite(p, p.parse_subset("1 3")));
  CHECK_FALSE(is_infinite(p, p.parse_subset("1 2")));
  CHECK_THROWS_AS(is_spherical(d_inf(), GeneratorSet::single(5)), InputError);
}

TEST_CASE("is_spherical agrees with ball growth of the parabolic subgroup") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : oracle::unlabeled_graphs(n)) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        GeneratorSet t;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1U) t.insert(static_cast<Generator>(i));
        REQUIRE(is_spherical(p, t) == finite_by_growth(p, t));
      }
    }
  }
}

TEST_CASE("maximal spherical subsets") {
  auto p = d_inf();
  CHECK(formatted(p, maximal_spherical_subsets(p)) == std::vector<std::string>{"a", "b"});
  auto q = d_inf_x_d_inf();
  CHECK(formatted(q, maximal_spherical_subsets(q)) ==
        std::vector<std::string>{"a c", "a d", "b c", "b d"});
  auto r = pentagon();
  CHECK(formatted(r, maximal_spherical_subsets(r)) ==
        std::vector<std::string>{"1 2", "1 5", "2 3", "3 4", "4 5"});
  CHECK(formatted(testing::complete(4), maximal_spherical_subsets(testing::complete(4))) ==
        std::vector<std::string>{"g1 g2 g3 g4"});
}

TEST_CASE("maximal spherical subsets: brute-force agreement") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : oracle::unlabeled_graphs(n)) {
      std::vector<GeneratorSet> expected;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        GeneratorSet t;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1U) t.insert(static_cast<Generator>(i));
        if (!p.is_clique(t)) continue;
        bool maximal = true;
        for (Generator s : p.all() - t)
          if (p.is_clique(t | GeneratorSet::single(s))) maximal = false;
        if (maximal) expected.push_back(t);
      }
      std::sort(expected.begin(), expected.end());
      auto got = maximal_spherical_subsets(p);
      REQUIRE(got == expected);
      GeneratorSet covered;
      for (auto c : got) covered = covered | c;
      CHECK(covered == p.all());
    }
  }
}

TEST_CASE("irreducible components") {
  auto p = pentagon();
  auto d = irreducible_components(p);
  CHECK(d.components == std::vector<GeneratorSet>{p.all()});
  CHECK(d.s_tilde == p.all());
  CHECK(d.finite_part.empty());

  auto q = d_inf_x_d_inf();
  auto e = irreducible_components(q);
  CHECK(formatted(q, e.components) == std::vector<std::string>{"a b", "c d"});
  CHECK(e.s_tilde == q.all());

  auto r = d_inf_x_z2();
  auto f = irreducible_components(r);
  CHECK(formatted(r, f.components) == std::vector<std::string>{"a b", "c"});
  CHECK(f.s_tilde == r.parse_subset("a b"));
  CHECK(f.finite_part == r.parse_subset("c"));
}

TEST_CASE("boundary minimality") {
  CHECK(std::holds_alternative<EmptyBoundary>(boundary_minimal(testing::complete(3))));
  CHECK(std::holds_alternative<Minimal>(boundary_minimal(pentagon())));
  CHECK(std::holds_alternative<Minimal>(boundary_minimal(d_inf_x_z2())));
  auto q = d_inf_x_d_inf();
  auto v = boundary_minimal(q);
  REQUIRE(std::holds_alternative<Splitting>(v));
  CHECK(std::get<Splitting>(v) == Splitting{q.parse_subset("a b"), q.parse_subset("c d")});
}

TEST_CASE("boundary minimality: invariants over all small graphs") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : oracle::unlabeled_graphs(n)) {
      auto v = boundary_minimal(p);
      auto d = irreducible_components(p);
      CHECK(std::holds_alternative<EmptyBoundary>(v) == p.is_clique(p.all()));
      CHECK(std::holds_alternative<Minimal>(v) == (d.infinite_components().size() == 1));
      if (auto* split = std::get_if<Splitting>(&v)) {
        CHECK((split->first & split->rest).empty());
        CHECK((split->first | split->rest) == d.s_tilde);
        CHECK_FALSE(p.is_clique(split->first));
        CHECK_FALSE(p.is_clique(split->rest));
        for (Generator s : split->first)
          CHECK(split->rest.is_subset_of(p.commuting_with(s)));
      }
    }
  }
}

TEST_CASE("parabolic orbit density") {
  auto p = pentagon();
  CHECK(parabolic_orbit_dense(p, p.parse_subset("1 3")));
  CHECK_FALSE(parabolic_orbit_dense(p, p.parse_subset("1 2")));
  auto q = d_inf_x_d_inf();
  CHECK_FALSE(parabolic_orbit_dense(q, q.parse_subset("a b c")));
  CHECK(parabolic_orbit_dense(q, q.parse_subset("a b c d")));
  CHECK_FALSE(parabolic_orbit_dense(testing::complete(3), testing::complete(3).all()));
}

TEST_CASE("parabolic orbit density: invariants over all small graphs") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : oracle::unlabeled_graphs(n)) {
      CHECK(parabolic_orbit_dense(p, p.all()) == is_infinite(p, p.all()));
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        GeneratorSet t;
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1U) t.insert(static_cast<Generator>(i));
        if (parabolic_orbit_dense(p, t)) CHECK(is_infinite(p, t));
      }
    }
  }
}
