#include "racg/witness.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "racg/descent.hpp"
#include "racg/errors.hpp"

namespace racg {

GeneratorSet apply_step(const Presentation& p, GeneratorSet clique, Generator a) {
  if (a >= p.size()) throw PreconditionError("step generator out of range");
  if (!clique.is_subset_of(p.all()) || !p.is_clique(clique))
    throw PreconditionError("step source {" + p.format(clique) +
                            "} is not a clique");
  if (clique.contains(a))
    throw PreconditionError("step generator " + p.name(a) + " lies in {" +
                            p.format(clique) + "}");
  return (clique & p.commuting_with(a)) | GeneratorSet::single(a);
}

namespace {

struct SearchResult {
  GeneratorSet start;
  std::vector<Generator> chain;
};

// Breadth-first search over descent targets; successors are visited in
// generator order, so the first goal found carries the lexicographically
// least shortest chain.
SearchResult shortest_chain(const Presentation& sub) {
  const GeneratorSet start = maximal_spherical_subsets(sub).front();
  struct Parent {
    std::uint64_t from;
    Generator letter;
  };
  std::unordered_map<std::uint64_t, Parent> parent;
  std::deque<GeneratorSet> queue{start};
  parent.emplace(start.bits(), Parent{start.bits(), 0});
  std::optional<GeneratorSet> goal;
  while (!queue.empty() && !goal) {
    GeneratorSet v = queue.front();
    queue.pop_front();
    if (v.size() == 1) {
      goal = v;
      break;
    }
    for (Generator a : sub.all() - v) {
      GeneratorSet next = apply_step(sub, v, a);
      if (parent.emplace(next.bits(), Parent{v.bits(), a}).second)
        queue.push_back(next);
    }
  }
  if (!goal)
    throw Error("no chain reaches a singleton; the infinite part is reducible");
  std::vector<Generator> chain;
  for (std::uint64_t at = goal->bits(); at != start.bits();) {
    const Parent& step = parent.at(at);
    chain.insert(chain.begin(), step.letter);
    at = step.from;
  }
  return {start, std::move(chain)};
}

}  // namespace

WitnessOutcome find_witness(const Presentation& p) {
  if (p.is_clique(p.all())) return FiniteGroup{};
  auto verdict = boundary_minimal(p);
  if (auto* split = std::get_if<Splitting>(&verdict)) return *split;

  const Decomposition d = irreducible_components(p);
  auto [sub, to_full] = p.induced(d.s_tilde);
  SearchResult found = shortest_chain(sub);

  QuasiDensityWitness w;
  for (Generator g : found.start) w.start_clique.insert(to_full[g]);
  GeneratorSet v = w.start_clique;
  w.trace.push_back(v);
  for (Generator g : found.chain) {
    w.chain.push_back(to_full[g]);
    v = apply_step(p, v, to_full[g]);
    w.trace.push_back(v);
  }
  w.s0 = v.front();
  w.bound_n = w.start_clique.size() + static_cast<int>(w.chain.size()) +
              d.finite_part.size();
  return w;
}

void validate_witness(const Presentation& p, const QuasiDensityWitness& w) {
  if (w.s0 >= p.size()) throw PreconditionError("s0 is not a generator");
  const Decomposition d = irreducible_components(p);
  if (!w.start_clique.is_subset_of(d.s_tilde) || !p.is_clique(w.start_clique))
    throw PreconditionError("start clique is not a clique inside S~");
  for (Generator g : d.s_tilde - w.start_clique) {
    if (p.is_clique(w.start_clique | GeneratorSet::single(g)))
      throw PreconditionError("start clique is not maximal in S~ (extends by " +
                              p.name(g) + ")");
  }
  if (w.trace.size() != w.chain.size() + 1 || w.trace.front() != w.start_clique)
    throw PreconditionError("trace does not match chain");
  for (std::size_t k = 0; k < w.chain.size(); ++k) {
    // apply_step throws when chain[k] lies in V_k.
    GeneratorSet expected = apply_step(p, w.trace[k], w.chain[k]);
    if (expected != w.trace[k + 1])
      throw PreconditionError("trace entry " + std::to_string(k + 1) +
                              " disagrees with the step rule");
  }
  if (w.trace.back() != GeneratorSet::single(w.s0))
    throw PreconditionError("chain does not end at {s0}");
  if (w.bound_n < 0) throw PreconditionError("negative bound");
}

CertificationReport certify_witness(const Ball& b, const QuasiDensityWitness& w) {
  const Presentation& p = b.presentation();
  validate_witness(p, w);
  if (b.radius() <= w.bound_n)
    throw PreconditionError("certification radius must exceed the bound N=" +
                            std::to_string(w.bound_n));
  CertificationReport report;
  report.radius = b.radius();
  const GeneratorSet goal = GeneratorSet::single(w.s0);
  std::vector<Generator> scratch;
  for (ElementId e : b.with_descent(w.start_clique)) {
    auto u = b.letters(e);
    scratch.assign(u.begin(), u.end());
    for (Generator a : w.chain) multiply_in_place(p, scratch, a);
    ++report.inclusion_cases;
    if (right_descents(p, scratch) != goal)
      report.inclusion_violations.push_back(b.element(e));
  }
  report.density = quasi_dense_check(b, goal, w.bound_n);
  return report;
}

CertificationReport certify_witness(const Presentation& p,
                                    const QuasiDensityWitness& w, int radius,
                                    const BallOptions& options) {
  validate_witness(p, w);
  if (radius <= w.bound_n)
    throw PreconditionError("certification radius must exceed the bound N=" +
                            std::to_string(w.bound_n));
  return certify_witness(Ball::build(p, radius, options), w);
}

std::optional<NotWithin> find_hole(const Ball& b, Generator s, int n_max) {
  if (s >= b.presentation().size()) throw InputError("generator out of range");
  return farthest_from_targets(b, GeneratorSet::single(s), n_max);
}

std::optional<NotWithin> find_hole(const Presentation& p, Generator s,
                                   int radius, int n_max,
                                   const BallOptions& options) {
  if (s >= p.size()) throw InputError("generator out of range");
  if (n_max < 0 || radius <= n_max)
    throw PreconditionError("find_hole needs R > N_max >= 0");
  return find_hole(Ball::build(p, radius, options), s, n_max);
}

}  // namespace racg
