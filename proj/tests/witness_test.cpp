#include <doctest.h>

#include "racg/ball.hpp"
#include "racg/errors.hpp"
#include "racg/witness.hpp"
#include "support/oracle.hpp"
#include "support/systems.hpp"

using namespace racg;
using racg::testing::d_inf;
using racg::testing::d_inf_x_d_inf;
using racg::testing::d_inf_x_z2;
using racg::testing::pentagon;

TEST_CASE("apply_step: examples and errors") {
  auto p = pentagon();
  CHECK(apply_step(p, p.parse_subset("1 2"), p.index_of("4")) == p.parse_subset("4"));
  auto q = d_inf_x_d_inf();
  CHECK(apply_step(q, q.parse_subset("a c"), q.index_of("b")) == q.parse_subset("b c"));
  CHECK_THROWS_AS(apply_step(p, p.parse_subset("1 2"), p.index_of("1")), PreconditionError);
  CHECK_THROWS_AS(apply_step(p, p.parse_subset("1 3"), p.index_of("4")), PreconditionError);
}

TEST_CASE("apply_step predicts descents of w*a on the whole ball") {
  for (const auto& p : {pentagon(), d_inf_x_d_inf(), d_inf_x_z2(), testing::complete(3)}) {
    auto b = ball(p, 6);
    for (ElementId e = 0; e < b.end_of_radius(5); ++e) {
      const GeneratorSet v = b.descents(e);
      for (Generator a : p.all() - v) {
        auto id = b.neighbor(e, a);
        REQUIRE(id.has_value());
        REQUIRE(b.descents(*id) == apply_step(p, v, a));
      }
    }
  }
}

TEST_CASE("find_witness: examples") {
  auto p = d_inf();
  auto w = std::get<QuasiDensityWitness>(find_witness(p));
  CHECK(w.s0 == p.index_of("a"));
  CHECK(w.start_clique == p.parse_subset("a"));
  CHECK(w.chain.empty());
  CHECK(w.bound_n == 1);

  auto q = pentagon();
  auto pw = std::get<QuasiDensityWitness>(find_witness(q));
  CHECK(pw.s0 == q.index_of("4"));
  CHECK(pw.start_clique == q.parse_subset("1 2"));
  CHECK(q.format(pw.chain) == "4");
  CHECK(pw.trace == std::vector<GeneratorSet>{q.parse_subset("1 2"), q.parse_subset("4")});
  CHECK(pw.bound_n == 3);

  auto r = d_inf_x_d_inf();
  auto split = std::get<Splitting>(find_witness(r));
  CHECK(split == Splitting{r.parse_subset("a b"), r.parse_subset("c d")});

  auto s = d_inf_x_z2();
  auto sw = std::get<QuasiDensityWitness>(find_witness(s));
  CHECK(sw.s0 == s.index_of("a"));
  CHECK(sw.chain.empty());
  CHECK(sw.bound_n == 2);

  CHECK(std::holds_alternative<FiniteGroup>(find_witness(testing::complete(3))));
}

TEST_CASE("certify_witness: examples") {
  auto q = pentagon();
  auto pw = std::get<QuasiDensityWitness>(find_witness(q));
  auto report = certify_witness(q, pw, 8);
  CHECK(report.passed(pw.bound_n));
  CHECK(report.inclusion_cases > 0);
  CHECK(report.density.as_dense().n <= 3);

  auto p = d_inf();
  auto w = std::get<QuasiDensityWitness>(find_witness(p));
  auto dr = certify_witness(p, w, 8);
  CHECK(dr.passed(w.bound_n));
  CHECK(dr.density.as_dense().n == 1);

  auto s = d_inf_x_z2();
  auto sw = std::get<QuasiDensityWitness>(find_witness(s));
  CHECK(certify_witness(s, sw, 8).passed(sw.bound_n));
  CHECK_THROWS_AS(certify_witness(s, sw, 2), PreconditionError);
}

TEST_CASE("corrupted witnesses are rejected") {
  auto q = pentagon();
  auto good = std::get<QuasiDensityWitness>(find_witness(q));

  auto in_clique = good;
  in_clique.chain = {q.index_of("1")};
  CHECK_THROWS_AS(certify_witness(q, in_clique, 8), PreconditionError);

  auto wrong_trace = good;
  wrong_trace.trace.back() = q.parse_subset("3");
  CHECK_THROWS_AS(validate_witness(q, wrong_trace), PreconditionError);

  auto wrong_s0 = good;
  wrong_s0.s0 = q.index_of("3");
  CHECK_THROWS_AS(validate_witness(q, wrong_s0), PreconditionError);

  auto not_maximal = good;
  not_maximal.start_clique = q.parse_subset("1");
  not_maximal.trace.front() = not_maximal.start_clique;
  CHECK_THROWS_AS(validate_witness(q, not_maximal), PreconditionError);
}

TEST_CASE("an understated bound fails certification loudly") {
  auto q = pentagon();
  auto w = std::get<QuasiDensityWitness>(find_witness(q));
  w.bound_n = 0;
  auto report = certify_witness(q, w, 8);
  CHECK_FALSE(report.passed(w.bound_n));
  CHECK_FALSE(report.density.dense());
}

TEST_CASE("find_hole: examples") {
  auto r = d_inf_x_d_inf();
  auto hole = find_hole(r, r.index_of("a"), 12, 4);
  REQUIRE(hole.has_value());
  CHECK(r.format(hole->counterexample.letters()) == "c d c d c d c d");
  CHECK(*hole->target_distance >= 9);

  auto p = d_inf();
  for (int n = 1; n <= 3; ++n) CHECK_FALSE(find_hole(p, p.index_of("a"), 8, n).has_value());

  auto q = pentagon();
  CHECK_FALSE(find_hole(q, q.index_of("4"), 8, 3).has_value());
  CHECK_THROWS_AS(find_hole(q, q.index_of("4"), 3, 3), PreconditionError);
}

TEST_CASE("chain soundness for every witness of small graphs") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& p : oracle::unlabeled_graphs(n)) {
      auto outcome = find_witness(p);
      auto* w = std::get_if<QuasiDensityWitness>(&outcome);
      if (!w) continue;
      validate_witness(p, *w);
      auto b = ball(p, 6);
      for (std::size_t k = 0; k < w->chain.size(); ++k) {
        for (ElementId e : b.with_descent(w->trace[k])) {
          if (b.length(e) == 6) continue;
          auto next = b.neighbor(e, w->chain[k]);
          REQUIRE(next.has_value());
          REQUIRE(b.descents(*next) == w->trace[k + 1]);
        }
      }
    }
  }
}
