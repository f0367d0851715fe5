#include "racg/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "racg/errors.hpp"
#include "racg/structure.hpp"

namespace racg {

namespace {

class Recorder {
 public:
  Recorder(std::string name, std::string statement, std::size_t keep)
      : keep_(keep) {
    result_.name = std::move(name);
    result_.statement = std::move(statement);
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    ++result_.violations;
    if (result_.counterexamples.size() < keep_)
      result_.counterexamples.push_back(describe());
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
  std::size_t keep_;
};

std::string show(const Presentation& p, std::span<const Generator> w) {
  return w.empty() ? std::string("e") : p.format(w);
}

std::string show(const Presentation& p, GeneratorSet s) {
  return "{" + p.format(s) + "}";
}

void all_cliques(const Presentation& p, GeneratorSet current,
                 GeneratorSet allowed, std::vector<GeneratorSet>& out) {
  out.push_back(current);
  for (Generator g : allowed) {
    allowed.erase(g);
    all_cliques(p, current | GeneratorSet::single(g),
                allowed & p.commuting_with(g), out);
  }
}

struct Context {
  const Ball& ball;
  const Presentation& p;
  DescentFn descents;
  std::size_t keep;
  std::vector<DescentProfile> profile;  // descents() of every ball element
  std::map<DescentProfile, std::vector<ElementId>> by_profile;
};

SuiteResult length_step(const Context& c) {
  Recorder r("length-step", "|l(ws) - l(w)| = |l(sw) - l(w)| = 1", c.keep);
  for (ElementId e = 0; e < c.ball.size(); ++e) {
    NormalForm w = c.ball.element(e);
    for (Generator s : c.p.all()) {
      auto right = multiply(c.p, w, s).length();
      auto left = multiply(c.p, s, w).length();
      auto step = [&](std::size_t l) {
        return l + 1 == w.length() || l == w.length() + 1;
      };
      r.check(step(right) && step(left), [&] {
        return "w=" + show(c.p, w.letters()) + " s=" + c.p.name(s);
      });
    }
  }
  return r.take();
}

SuiteResult descent_clique(const Context& c) {
  Recorder r("descent-clique",
             "S(w) = {s : l(ws) < l(w)} and S(w) is spherical", c.keep);
  for (ElementId e = 0; e < c.ball.size(); ++e) {
    NormalForm w = c.ball.element(e);
    DescentProfile expected;
    for (Generator s : c.p.all()) {
      if (multiply(c.p, w, s).length() < w.length()) expected.insert(s);
    }
    const DescentProfile got = c.profile[e];
    r.check(got == expected && c.p.is_clique(got), [&] {
      return "w=" + show(c.p, w.letters()) + " computed " + show(c.p, got) +
             " expected " + show(c.p, expected);
    });
  }
  return r.take();
}

SuiteResult longest_coset(const Context& c) {
  Recorder r("longest-coset",
             "T maximal spherical: longest w' in wW_T has S(w') = T, d(w,w') <= |T|",
             c.keep);
  for (GeneratorSet t : maximal_spherical_subsets(c.p)) {
    for (ElementId e = 0; e < c.ball.size(); ++e) {
      NormalForm w = c.ball.element(e);
      NormalForm longest = coset_longest_rep(c.p, w, t);
      const DescentProfile got = c.descents(c.p, longest.letters());
      const std::size_t d = distance(c.p, w, longest);
      r.check(got == t && d <= static_cast<std::size_t>(t.size()), [&] {
        return "T=" + show(c.p, t) + " w=" + show(c.p, w.letters()) +
               " w'=" + show(c.p, longest.letters()) + " S(w')=" + show(c.p, got);
      });
    }
  }
  return r.take();
}

SuiteResult infinite_shift(const Context& c) {
  Recorder r("infinite-shift", "o(st) = inf and S(w) = {s} => S(wt) = {t}", c.keep);
  for (Generator s : c.p.all()) {
    auto it = c.by_profile.find(GeneratorSet::single(s));
    if (it == c.by_profile.end()) continue;
    for (Generator t : c.p.all()) {
      if (c.p.order(s, t) != Order::infinite) continue;
      for (ElementId e : it->second) {
        NormalForm w = c.ball.element(e);
        NormalForm wt = multiply(c.p, w, t);
        const DescentProfile got = c.descents(c.p, wt.letters());
        r.check(got == GeneratorSet::single(t), [&] {
          return "s=" + c.p.name(s) + " t=" + c.p.name(t) + " w=" +
                 show(c.p, w.letters()) + " S(wt)=" + show(c.p, got);
        });
      }
    }
  }
  return r.take();
}

SuiteResult commuting_conjugate(const Context& c) {
  Recorder r("commuting-conjugate",
             "tw reduced and twt' = w => t = t' and t commutes with every letter of w",
             c.keep);
  for (ElementId e = 0; e < c.ball.size(); ++e) {
    NormalForm w = c.ball.element(e);
    for (Generator t : c.p.all()) {
      NormalForm tw = multiply(c.p, t, w);
      if (tw.length() != w.length() + 1) continue;
      for (Generator t2 : c.p.all()) {
        if (multiply(c.p, tw, t2) != w) continue;
        bool commutes_all = std::all_of(
            w.letters().begin(), w.letters().end(),
            [&](Generator x) { return x == t || c.p.commutes(t, x); });
        r.check(t == t2 && commutes_all, [&] {
          return "w=" + show(c.p, w.letters()) + " t=" + c.p.name(t) +
                 " t'=" + c.p.name(t2);
        });
      }
    }
  }
  return r.take();
}

SuiteResult descent_transfer(const Context& c) {
  Recorder r("descent-transfer",
             "S(w) = U spherical, s0 not in U => S(ws0) = {t in U : o(s0 t) = 2} + {s0}",
             c.keep);
  std::vector<GeneratorSet> cliques;
  all_cliques(c.p, GeneratorSet{}, c.p.all(), cliques);
  for (GeneratorSet u : cliques) {
    auto it = c.by_profile.find(u);
    if (it == c.by_profile.end()) continue;
    for (Generator s0 : c.p.all() - u) {
      const GeneratorSet expected =
          (u & c.p.commuting_with(s0)) | GeneratorSet::single(s0);
      for (ElementId e : it->second) {
        NormalForm w = c.ball.element(e);
        NormalForm ws = multiply(c.p, w, s0);
        const DescentProfile got = c.descents(c.p, ws.letters());
        r.check(got == expected, [&] {
          return "U=" + show(c.p, u) + " s0=" + c.p.name(s0) + " w=" +
                 show(c.p, w.letters()) + " S(ws0)=" + show(c.p, got);
        });
      }
    }
  }
  return r.take();
}

using SuiteFn = SuiteResult (*)(const Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"length-step", &length_step},
      {"descent-clique", &descent_clique},
      {"longest-coset", &longest_coset},
      {"infinite-shift", &infinite_shift},
      {"commuting-conjugate", &commuting_conjugate},
      {"descent-transfer", &descent_transfer},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& entry : registry()) out.push_back(entry.first);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suites(const Ball& b, const VerifyOptions& options) {
  for (const auto& name : options.suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) ==
        suite_names().end())
      throw InputError("unknown verification suite '" + name + "'");
  }
  Context c{b, b.presentation(), options.descents, options.max_counterexamples,
            {}, {}};
  c.profile.reserve(b.size());
  for (ElementId e = 0; e < b.size(); ++e) {
    c.profile.push_back(c.descents(c.p, b.letters(e)));
    c.by_profile[c.profile.back()].push_back(e);
  }

  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) {
    if (!options.suites.empty() &&
        std::find(options.suites.begin(), options.suites.end(), name) ==
            options.suites.end())
      continue;
    out.push_back(fn(c));
  }
  return out;
}

DescentProfile descent_off_by_one(const Presentation& p,
                                  std::span<const Generator> reduced) {
  if (reduced.empty()) return {};
  return right_descents(p, reduced.first(reduced.size() - 1));
}

}  // namespace racg
