#ifndef HILBCAT_DSL_SUITE_HPP
#define HILBCAT_DSL_SUITE_HPP

#include <hilbcat/dsl/report.hpp>
#include <hilbcat/laws.hpp>
#include <hilbcat/random.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hilbcat::dsl {

struct SuiteConfig {
  std::vector<std::string> laws;
  std::size_t dims = 4;      // largest dimension drawn
  std::size_t min_dim = 1;   // smallest dimension drawn
  std::size_t samples = 100;
  std::uint64_t seed = 42;
};

namespace detail {

inline constexpr std::size_t max_recorded_failures = 16;

struct Instance {
  bool ok = true;
  Witness witness;
};

using InstanceFn = std::function<Instance(InstanceGenerator&, const SuiteConfig&)>;

struct LawEntry {
  std::string_view name;
  std::string_view kind;
  InstanceFn run;
};

inline std::size_t draw_dim(InstanceGenerator& gen, const SuiteConfig& cfg) {
  return gen.dim(cfg.min_dim, std::max(cfg.min_dim, cfg.dims));
}

inline Instance orthomodularity(InstanceGenerator& gen, const SuiteConfig& cfg) {
  auto [m, n] = gen.nested_pair(draw_dim(gen, cfg));
  return {check_orthomodular(m, n), {{{"M", m.proj()}, {"N", n.proj()}}, {}}};
}

inline Instance exists_adjunction(InstanceGenerator& gen, const SuiteConfig& cfg) {
  Morphism f = gen.morphism(draw_dim(gen, cfg), draw_dim(gen, cfg));
  Subobject m = gen.subobject(f.dom());
  Subobject n = gen.subobject(f.cod());
  return {check_exists_adjunction(f, m, n), {{{"f", f.mat()}, {"M", m.proj()}, {"N", n.proj()}}, {}}};
}

inline Instance exists_functoriality(InstanceGenerator& gen, const SuiteConfig& cfg) {
  Morphism f = gen.morphism(draw_dim(gen, cfg), draw_dim(gen, cfg));
  Morphism g = gen.morphism(f.cod(), draw_dim(gen, cfg));
  Subobject m = gen.subobject(f.dom());
  return {check_exists_functorial(g, f, m), {{{"f", f.mat()}, {"g", g.mat()}, {"M", m.proj()}}, {}}};
}

inline Instance beck_chevalley(InstanceGenerator& gen, const SuiteConfig& cfg) {
  std::size_t z = draw_dim(gen, cfg);
  PullbackSquare sq = pullback(gen.morphism(draw_dim(gen, cfg), z), gen.morphism(draw_dim(gen, cfg), z));
  Instance out{true, {{{"f", sq.f.mat()}, {"g", sq.g.mat()}}, {}}};
  for (int k = 0; k < 3; ++k) {
    Subobject n = gen.subobject(sq.g.dom());
    if (!check_beck_chevalley(sq, n)) {
      out.ok = false;
      out.witness.matrices["N"] = n.proj();
      break;
    }
  }
  return out;
}

inline Instance frobenius(InstanceGenerator& gen, const SuiteConfig& cfg) {
  Morphism f = gen.morphism(draw_dim(gen, cfg), draw_dim(gen, cfg));
  Subobject m = gen.subobject(f.dom());
  Subobject n = gen.subobject(f.cod());
  return {check_frobenius(f, m, n), {{{"f", f.mat()}, {"M", m.proj()}, {"N", n.proj()}}, {}}};
}

inline Instance orthocomplement(InstanceGenerator& gen, const SuiteConfig& cfg) {
  std::size_t d = draw_dim(gen, cfg);
  Subobject m = gen.subobject(d);
  Subobject n = gen.subobject(d);
  return {check_orthocomplement(m) && check_de_morgan(m, n), {{{"M", m.proj()}, {"N", n.proj()}}, {}}};
}

inline Instance perp_adjunction(InstanceGenerator& gen, const SuiteConfig& cfg) {
  Morphism f = gen.morphism(draw_dim(gen, cfg), draw_dim(gen, cfg));
  Subobject m = gen.subobject(f.dom());
  Subobject n = gen.subobject(f.cod());
  return {check_perp_adjunction(f, m, n), {{{"f", f.mat()}, {"M", m.proj()}, {"N", n.proj()}}, {}}};
}

inline Instance scalar_recovery(InstanceGenerator& gen, const SuiteConfig& cfg) {
  Morphism f;
  do {
    f = gen.morphism(draw_dim(gen, cfg), draw_dim(gen, cfg));
  } while (f.is_zero());
  Scalar s = gen.entry() + gen.entry() * Scalar::i();
  auto got = recover_scalar(f, scalar_mul(s, dagger(f)));
  return {got && *got == s, {{{"f", f.mat()}, {"s", Matrix{{s}}}}, {}}};
}

inline Instance closure_law(InstanceGenerator& gen, const SuiteConfig& cfg) {
  std::size_t d = draw_dim(gen, cfg);
  Matrix m = gen.full_column_rank(d, gen.below(d + 1));
  Subobject n = gen.subobject(d);
  return {check_closure(m, n), {{{"m", m}, {"N", n.proj()}}, {}}};
}

/// Image and coimage do not depend on the bases chosen for the middle
/// map, nor on invertible changes of coordinates on either side.
inline Instance factorisation(InstanceGenerator& gen, const SuiteConfig& cfg) {
  Morphism f = gen.morphism(draw_dim(gen, cfg), draw_dim(gen, cfg));
  FactorTriple t = factorize(f);
  std::size_t r = t.middle.dom();
  Matrix a = gen.invertible(r);
  Matrix b = gen.invertible(r);
  FactorTriple alt{projection_onto(f.dom(), t.coim_basis * b), t.coim_basis * b,
                   Morphism(r, r, *inverse(a) * t.middle.mat() * b), t.im_basis * a,
                   projection_onto(f.cod(), t.im_basis * a)};
  Morphism u(f.dom(), f.dom(), gen.invertible(f.dom()));
  Morphism v(f.cod(), f.cod(), gen.invertible(f.cod()));
  bool ok = t.reconstruct() == f && rank(t.middle.mat()) == r && alt.im == t.im && alt.coim == t.coim &&
            alt.reconstruct() == f && image(compose(f, u)) == t.im && factorize(compose(v, f)).coim == t.coim &&
            t.coim == sub_perp(kernel(f)) && t.im == image(f) && cokernel(f) == sub_perp(image(f));
  return {ok, {{{"f", f.mat()}, {"A", a}, {"B", b}, {"U", u.mat()}, {"V", v.mat()}}, {}}};
}

inline Instance pullback_universality(InstanceGenerator& gen, const SuiteConfig& cfg) {
  std::size_t z = draw_dim(gen, cfg);
  PullbackSquare sq = pullback(gen.morphism(draw_dim(gen, cfg), z), gen.morphism(draw_dim(gen, cfg), z));
  Morphism u = gen.morphism(draw_dim(gen, cfg), sq.apex_dim);
  Morphism h1 = compose(sq.p, u);
  Morphism h2 = compose(sq.q, u);
  auto got = mediate(sq, h1, h2);
  bool ok = compose(sq.f, sq.p) == compose(sq.g, sq.q) && got && *got == u;
  return {ok, {{{"f", sq.f.mat()}, {"g", sq.g.mat()}, {"u", u.mat()}}, {}}};
}

inline Instance meet_pullback(InstanceGenerator& gen, const SuiteConfig& cfg) {
  std::size_t d = draw_dim(gen, cfg);
  Subobject m = gen.subobject(d);
  Subobject n = gen.subobject(d);
  return {check_meet_is_pullback(m, n), {{{"M", m.proj()}, {"N", n.proj()}}, {}}};
}

inline Instance distributivity_counterexample(InstanceGenerator&, const SuiteConfig& cfg) {
  auto w = find_distributivity_counterexample(cfg.dims);
  if (!w) return {false, {{}, {{"found", false}}}};
  return {true,
          {{{"M", w->m.proj()}, {"N", w->n.proj()}, {"P", w->p.proj()}, {"lhs", w->lhs.proj()}, {"rhs", w->rhs.proj()}},
           {{"found", true}}}};
}

inline Instance preimage_perp(InstanceGenerator&, const SuiteConfig&) {
  PreimagePerpWitness w = preimage_perp_witness();
  return {!w.equal,
          {{{"f", w.f.mat()},
            {"m", w.m.proj()},
            {"preimage_of_perp", w.preimage_of_perp.proj()},
            {"perp_of_preimage", w.perp_of_preimage.proj()}},
           {{"equal", w.equal}}}};
}

inline Instance nonfibred_perp(InstanceGenerator&, const SuiteConfig&) {
  FibrednessWitness w = nonfibred_witness();
  return {w.flags.over_cartesian && !w.flags.perp_cartesian,
          {{{"f", w.f.mat()}, {"M", w.m.proj()}, {"N", w.n.proj()}, {"lhs", w.lhs}, {"rhs", w.rhs}},
           {{"over_cartesian", w.flags.over_cartesian}, {"perp_cartesian", w.flags.perp_cartesian}}}};
}

/// Catalog order fixes each law's substream, so a law's results do not
/// depend on which other laws run alongside it.
inline const std::vector<LawEntry>& catalog() {
  static const std::vector<LawEntry> entries{
      {"orthomodularity", "theorem", orthomodularity},
      {"exists-adjunction", "theorem", exists_adjunction},
      {"exists-functoriality", "theorem", exists_functoriality},
      {"beck-chevalley", "theorem", beck_chevalley},
      {"frobenius", "theorem", frobenius},
      {"orthocomplement", "theorem", orthocomplement},
      {"perp-adjunction", "theorem", perp_adjunction},
      {"scalar-recovery", "theorem", scalar_recovery},
      {"closure", "theorem", closure_law},
      {"factorisation", "theorem", factorisation},
      {"pullback-universality", "theorem", pullback_universality},
      {"meet-pullback", "theorem", meet_pullback},
      {"distributivity-counterexample", "counterexample", distributivity_counterexample},
      {"preimage-perp", "counterexample", preimage_perp},
      {"nonfibred-perp", "counterexample", nonfibred_perp},
  };
  return entries;
}

}  // namespace detail

inline std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const auto& e : detail::catalog()) out.emplace_back(e.name);
  return out;
}

/// Runs each requested law on `samples` seeded instances (counterexample
/// laws run once). Deterministic in (config, seed).
inline Report run_law_suite(const SuiteConfig& cfg) {
  const auto& cat = detail::catalog();
  for (const auto& name : cfg.laws) {
    if (std::none_of(cat.begin(), cat.end(), [&](const auto& e) { return e.name == name; })) {
      throw input_error("unknown law '" + name + "'");
    }
  }
  if (cfg.min_dim > cfg.dims) throw input_error("minimum dimension exceeds --dims");
  Report report;
  for (const auto& name : cfg.laws) {
    auto it = std::find_if(cat.begin(), cat.end(), [&](const auto& e) { return e.name == name; });
    auto stream = static_cast<std::uint64_t>(it - cat.begin());
    InstanceGenerator gen(derive_seed(cfg.seed, stream));
    SuiteResult res;
    res.name = name;
    res.kind = std::string(it->kind);
    res.seed = cfg.seed;
    bool once = it->kind == "counterexample";
    std::size_t count = once ? 1 : cfg.samples;
    auto start = std::chrono::steady_clock::now();
    for (std::size_t k = 0; k < count; ++k) {
      detail::Instance inst = it->run(gen, cfg);
      ++res.instances;
      if (inst.ok) {
        ++res.passed;
      } else {
        ++res.failed;
        if (res.failures.size() < detail::max_recorded_failures) res.failures.push_back(inst.witness);
      }
      if (once) res.witness = std::move(inst.witness);
    }
    res.elapsed = std::chrono::steady_clock::now() - start;
    report.suites.push_back(std::move(res));
  }
  return report;
}

}  // namespace hilbcat::dsl

#endif  // HILBCAT_DSL_SUITE_HPP
