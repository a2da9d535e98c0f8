#ifndef HILBCAT_LAWS_HPP
#define HILBCAT_LAWS_HPP

#include <hilbcat/category.hpp>

#include <algorithm>
#include <array>
#include <concepts>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace hilbcat {

/// Direct image: projection onto f(range M).
inline Subobject exists_along(const Morphism& f, const Subobject& m) {
  if (m.ambient() != f.dom()) {
    throw usage_error("exists_along: subobject of " + std::to_string(m.ambient()) +
                      " along a morphism from " + std::to_string(f.dom()));
  }
  return from_span(f.cod(), f.mat() * m.proj());
}

/// The operations the law verifiers are phrased in. Swapping the policy
/// lets tests run the verifiers against deliberately wrong lattices.
template <class L>
concept LatticeOps = requires(const L& l, const Subobject& s, const Morphism& f) {
  { l.leq(s, s) } -> std::convertible_to<bool>;
  { l.meet(s, s) } -> std::convertible_to<Subobject>;
  { l.join(s, s) } -> std::convertible_to<Subobject>;
  { l.perp(s) } -> std::convertible_to<Subobject>;
  { l.exists(f, s) } -> std::convertible_to<Subobject>;
  { l.preimage(f, s) } -> std::convertible_to<Subobject>;
};

struct ProjectionLattice {
  bool leq(const Subobject& a, const Subobject& b) const { return sub_leq(a, b); }
  Subobject meet(const Subobject& a, const Subobject& b) const { return sub_meet(a, b); }
  Subobject join(const Subobject& a, const Subobject& b) const { return sub_join(a, b); }
  Subobject perp(const Subobject& a) const { return sub_perp(a); }
  Subobject exists(const Morphism& f, const Subobject& m) const { return exists_along(f, m); }
  Subobject preimage(const Morphism& f, const Subobject& n) const { return hilbcat::preimage(f, n); }
};

namespace detail {
inline void require_over(const Morphism& f, const Subobject& m, const Subobject& n, const char* op) {
  if (m.ambient() != f.dom() || n.ambient() != f.cod()) {
    throw usage_error(std::string(op) + ": subobjects must live over dom(f) and cod(f)");
  }
}
}  // namespace detail

/// exists_f M <= N  iff  M <= f^-1 N.
template <LatticeOps L = ProjectionLattice>
bool check_exists_adjunction(const Morphism& f, const Subobject& m, const Subobject& n, const L& ops = {}) {
  detail::require_over(f, m, n, "check_exists_adjunction");
  return ops.leq(ops.exists(f, m), n) == ops.leq(m, ops.preimage(f, n));
}

/// exists_{g f} M = exists_g (exists_f M).
template <LatticeOps L = ProjectionLattice>
bool check_exists_functorial(const Morphism& g, const Morphism& f, const Subobject& m, const L& ops = {}) {
  return ops.exists(compose(g, f), m) == ops.exists(g, ops.exists(f, m));
}

/// f^-1 (exists_g N) = exists_p (q^-1 N) for a pullback square.
template <LatticeOps L = ProjectionLattice>
bool check_beck_chevalley(const PullbackSquare& sq, const Subobject& n, const L& ops = {}) {
  if (n.ambient() != sq.g.dom()) throw usage_error("check_beck_chevalley: N must live over dom(g)");
  return ops.preimage(sq.f, ops.exists(sq.g, n)) == ops.exists(sq.p, ops.preimage(sq.q, n));
}

/// exists_f (M meet f^-1 N) = exists_f M meet N.
template <LatticeOps L = ProjectionLattice>
bool check_frobenius(const Morphism& f, const Subobject& m, const Subobject& n, const L& ops = {}) {
  detail::require_over(f, m, n, "check_frobenius");
  return ops.exists(f, ops.meet(m, ops.preimage(f, n))) == ops.meet(ops.exists(f, m), n);
}

/// M <= N implies M join (M^perp meet N) = N; vacuously true otherwise.
template <LatticeOps L = ProjectionLattice>
bool check_orthomodular(const Subobject& m, const Subobject& n, const L& ops = {}) {
  detail::require_same_ambient(m, n, "check_orthomodular");
  if (!ops.leq(m, n)) return true;
  return ops.join(m, ops.meet(ops.perp(m), n)) == n;
}

/// M meet M^perp = 0, M join M^perp = 1, M^perp^perp = M.
template <LatticeOps L = ProjectionLattice>
bool check_orthocomplement(const Subobject& m, const L& ops = {}) {
  std::size_t n = m.ambient();
  Subobject p = ops.perp(m);
  return ops.meet(m, p) == Subobject::bottom(n) && ops.join(m, p) == Subobject::top(n) && ops.perp(p) == m;
}

/// (M meet N)^perp = M^perp join N^perp.
template <LatticeOps L = ProjectionLattice>
bool check_de_morgan(const Subobject& m, const Subobject& n, const L& ops = {}) {
  detail::require_same_ambient(m, n, "check_de_morgan");
  return ops.perp(ops.meet(m, n)) == ops.join(ops.perp(m), ops.perp(n));
}

/// N <= (exists_f M)^perp  iff  M <= (exists_g N)^perp, for g : Y -> X.
/// With g = f^dagger this always holds.
template <LatticeOps L = ProjectionLattice>
bool check_perp_adjunction_between(const Morphism& f, const Morphism& g, const Subobject& m, const Subobject& n,
                                   const L& ops = {}) {
  detail::require_over(f, m, n, "check_perp_adjunction");
  if (g.dom() != f.cod() || g.cod() != f.dom()) throw usage_error("check_perp_adjunction: g must run Y -> X");
  return ops.leq(n, ops.perp(ops.exists(f, m))) == ops.leq(m, ops.perp(ops.exists(g, n)));
}

template <LatticeOps L = ProjectionLattice>
bool check_perp_adjunction(const Morphism& f, const Subobject& m, const Subobject& n, const L& ops = {}) {
  return check_perp_adjunction_between(f, dagger(f), m, n, ops);
}

/// Lemma-5 closure laws for a mono m against an arbitrary subobject n:
/// m <= cl(m), cl(cl(m)) = cl(m), and cl(m) <= n iff m <= n.
inline bool check_closure(const Matrix& mono_cols, const Subobject& n) {
  std::size_t amb = mono_cols.rows();
  Subobject cl = closure(amb, mono_cols);
  bool extensive = cl.contains(mono_cols);
  bool idempotent = closure(amb, cl.basis()) == cl;
  bool reflects = sub_leq(cl, n) == n.contains(mono_cols);
  return extensive && idempotent && reflects;
}

/// The pullback of two basis inclusions has an apex of the same dimension
/// as the directly computed meet.
inline bool check_meet_is_pullback(const Subobject& m, const Subobject& n) {
  detail::require_same_ambient(m, n, "check_meet_is_pullback");
  PullbackSquare sq = pullback(Morphism(m.rank(), m.ambient(), m.basis()),
                               Morphism(n.rank(), n.ambient(), n.basis()));
  return sq.apex_dim == sub_meet(m, n).rank();
}

struct DistributivityWitness {
  Subobject m, n, p;
  Subobject lhs;  // m meet (n join p)
  Subobject rhs;  // (m meet n) join (m meet p)
};

inline DistributivityWitness distributivity_sides(const Subobject& m, const Subobject& n, const Subobject& p) {
  return {m, n, p, sub_meet(m, sub_join(n, p)), sub_join(sub_meet(m, n), sub_meet(m, p))};
}

namespace detail {
/// Lines spanned by vectors with entries in {0, 1, -1, i, -i}, first
/// nonzero entry 1, ordered by support size and then so that earlier
/// coordinates come first (e1, e2, ..., e1+e2, ...).
inline std::vector<Subobject> small_lines(std::size_t dim) {
  const std::array<Scalar, 5> values{Scalar(0), Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  std::vector<std::pair<std::vector<int>, Matrix>> keyed;
  std::vector<int> digits(dim, 0);
  while (true) {
    std::size_t lead = 0;
    while (lead < dim && digits[lead] == 0) ++lead;
    if (lead < dim && digits[lead] == 1) {
      std::vector<int> key;
      int weight = 0;
      Matrix v(dim, 1);
      for (std::size_t k = 0; k < dim; ++k) {
        weight += digits[k] != 0;
        key.push_back(digits[k] == 0 ? 5 : digits[k]);
        v(k, 0) = values[static_cast<std::size_t>(digits[k])];
      }
      key.insert(key.begin(), weight);
      keyed.emplace_back(std::move(key), std::move(v));
    }
    std::size_t k = 0;
    while (k < dim && digits[k] == 4) digits[k++] = 0;
    if (k == dim) break;
    ++digits[k];
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Subobject> lines;
  for (const auto& [key, v] : keyed) lines.push_back(projection_onto(dim, v));
  return lines;
}
}  // namespace detail

/// Searches lines M, N, P (entries in {0, +-1, +-i}) with
/// M meet (N join P) != (M meet N) join (M meet P). Nothing for dim < 2.
inline std::optional<DistributivityWitness> find_distributivity_counterexample(std::size_t dim) {
  if (dim < 2) return std::nullopt;
  std::vector<Subobject> lines = detail::small_lines(dim);
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      for (std::size_t c = 0; c < lines.size(); ++c) {
        if (c == a || c == b) continue;
        DistributivityWitness w = distributivity_sides(lines[c], lines[a], lines[b]);
        if (!(w.lhs == w.rhs)) return w;
      }
    }
  }
  return std::nullopt;
}

/// Counterexample search for the converse of the perp adjunction: pairs
/// (M, N) from a finite grid where
/// N <= (exists_f M)^perp and M <= (exists_g N)^perp disagree. Finding none
/// on this grid is not a proof that g is a scalar multiple of f^dagger.
inline std::optional<std::pair<Subobject, Subobject>> find_perp_adjunction_violation(const Morphism& f,
                                                                                    const Morphism& g) {
  // Small lines, plus the kernels and images of f and g with their
  // complements, since those are where a violation is most likely to show.
  auto grid = [](std::size_t d, std::initializer_list<Subobject> extra) {
    std::vector<Subobject> out = detail::small_lines(d);
    out.push_back(Subobject::bottom(d));
    out.push_back(Subobject::top(d));
    for (const auto& s : extra) {
      out.push_back(s);
      out.push_back(sub_perp(s));
    }
    return out;
  };
  std::vector<Subobject> ms = grid(f.dom(), {kernel(f), image(g)});
  std::vector<Subobject> ns = grid(f.cod(), {kernel(g), image(f)});
  for (const auto& m : ms) {
    for (const auto& n : ns) {
      if (!check_perp_adjunction_between(f, g, m, n)) return std::pair{m, n};
    }
  }
  return std::nullopt;
}

struct ScalarFactor {
  Scalar s;
  bool unique = false;
};

/// For f, g : X -> 1 with ker f <= ker g, the s with g = s f. When f = 0,
/// s = 0 is returned and flagged as not unique.
inline std::optional<ScalarFactor> solve_scalar_factor(const Morphism& f, const Morphism& g) {
  if (f.cod() != 1 || g.cod() != 1 || f.dom() != g.dom()) {
    throw usage_error("solve_scalar_factor: expects two functionals X -> 1 on the same X");
  }
  if (!sub_leq(kernel(f), kernel(g))) return std::nullopt;
  if (f.is_zero()) return ScalarFactor{Scalar(0), false};
  for (std::size_t j = 0; j < f.dom(); ++j) {
    if (!f.mat()(0, j).is_zero()) {
      Scalar s = g.mat()(0, j) / f.mat()(0, j);
      if (!(scalar_mul(s, f) == g)) return std::nullopt;
      return ScalarFactor{s, true};
    }
  }
  return std::nullopt;
}

/// The s with g = s . f^dagger, if any. f = 0 yields s = 0 (not unique).
inline std::optional<Scalar> recover_scalar(const Morphism& f, const Morphism& g) {
  if (g.dom() != f.cod() || g.cod() != f.dom()) {
    throw usage_error("recover_scalar: g must have the profile of f^dagger");
  }
  Morphism fd = dagger(f);
  if (fd.is_zero()) return g.is_zero() ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
  const auto& a = fd.mat().entries();
  const auto& b = g.mat().entries();
  auto it = std::find_if(a.begin(), a.end(), [](const Scalar& s) { return !s.is_zero(); });
  Scalar s = b[static_cast<std::size_t>(it - a.begin())] / *it;
  if (!(scalar_mul(s, fd) == g)) return std::nullopt;
  return s;
}

struct CartesianFlags {
  bool over_cartesian = false;
  bool perp_cartesian = false;
};

/// over: f = P_N f P_M.  perp: f^dagger = P_{M^perp} f^dagger P_{N^perp}.
inline CartesianFlags cartesian_check(const Morphism& f, const Subobject& m, const Subobject& n) {
  detail::require_over(f, m, n, "cartesian_check");
  Matrix fd = mat_dagger(f.mat());
  return {f.mat() == n.proj() * f.mat() * m.proj(),
          fd == sub_perp(m).proj() * fd * sub_perp(n).proj()};
}

struct FibrednessWitness {
  Morphism f;
  Subobject m;
  Subobject n;
  Matrix lhs;  // f^dagger
  Matrix rhs;  // P_{M^perp} f^dagger P_{N^perp}
  CartesianFlags flags;
};

/// For an isometry m into X: f = m m^dagger and n = id_X. The morphism
/// (f, g) : m -> n is Cartesian, and its perp image is Cartesian iff
/// f^dagger = P_{M^perp} f^dagger P_{N^perp}.
inline FibrednessWitness fibredness_test(const Morphism& m) {
  Subobject ms = sub_from_isometry(m);
  Morphism f = compose(m, dagger(m));
  Subobject ns = Subobject::top(m.cod());
  Matrix lhs = mat_dagger(f.mat());
  Matrix rhs = sub_perp(ms).proj() * lhs * sub_perp(ns).proj();
  return {f, ms, ns, lhs, rhs, cartesian_check(f, ms, ns)};
}

/// m = first coprojection of 1 (+) 1: lhs = [[1,0],[0,0]], rhs = 0.
inline FibrednessWitness nonfibred_witness() { return fibredness_test(biproduct(1, 1).inj1); }

struct PreimagePerpWitness {
  Morphism f;
  Subobject m;
  Subobject preimage_of_perp;  // f^-1(m^perp)
  Subobject perp_of_preimage;  // (f^-1 m)^perp
  bool equal = false;
};

/// Projection C^2 -> C onto the first coordinate and m = 0 in C.
inline PreimagePerpWitness preimage_perp_witness() {
  Morphism f(Matrix{{1, 0}});
  Subobject m = Subobject::bottom(1);
  Subobject a = preimage(f, sub_perp(m));
  Subobject b = sub_perp(preimage(f, m));
  return {f, m, a, b, a == b};
}

}  // namespace hilbcat

#endif  // HILBCAT_LAWS_HPP
