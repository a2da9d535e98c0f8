#ifndef HILBCAT_CATEGORY_HPP
#define HILBCAT_CATEGORY_HPP

#include <hilbcat/subobject.hpp>

#include <optional>

namespace hilbcat {

struct MorphismClass {
  bool mono = false;
  bool epi = false;
  bool dagger_mono = false;
  bool dagger_epi = false;
  bool dagger_iso = false;
};

inline MorphismClass classify(const Morphism& f) {
  std::size_t r = rank(f.mat());
  MorphismClass c;
  c.mono = r == f.dom();
  c.epi = r == f.cod();
  c.dagger_mono = is_dagger_mono(f);
  c.dagger_epi = is_dagger_epi(f);
  c.dagger_iso = c.dagger_mono && c.dagger_epi;
  return c;
}

inline Subobject kernel(const Morphism& f) { return from_span(f.dom(), nullspace_basis(f.mat())); }

/// ker(f^dagger), as a subobject of cod(f).
inline Subobject cokernel(const Morphism& f) { return kernel(dagger(f)); }

/// Column space of f, the least subobject of cod(f) that f factors through.
inline Subobject image(const Morphism& f) { return from_span(f.cod(), f.mat()); }

inline Subobject equalizer(const Morphism& f, const Morphism& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) throw usage_error("equalizer: parallel morphisms required");
  return kernel(f - g);
}

/// Standard presentation of A (+) B: injections are coordinate inclusions
/// and projections their daggers.
struct Biproduct {
  Morphism inj1;
  Morphism inj2;
  Morphism proj1;
  Morphism proj2;
};

inline Biproduct biproduct(std::size_t fst_dim, std::size_t snd_dim) {
  std::size_t n = fst_dim + snd_dim;
  Matrix k1(n, fst_dim);
  Matrix k2(n, snd_dim);
  for (std::size_t j = 0; j < fst_dim; ++j) k1(j, j) = 1;
  for (std::size_t j = 0; j < snd_dim; ++j) k2(fst_dim + j, j) = 1;
  Morphism inj1(fst_dim, n, k1);
  Morphism inj2(snd_dim, n, k2);
  return {inj1, inj2, dagger(inj1), dagger(inj2)};
}

/// [f, g] : A (+) B -> Z
inline Morphism cotuple(const Morphism& f, const Morphism& g) {
  if (f.cod() != g.cod()) throw usage_error("cotuple: codomains differ");
  return Morphism(f.dom() + g.dom(), f.cod(), hstack(f.mat(), g.mat()));
}

/// <f, g> : W -> A (+) B
inline Morphism tuple(const Morphism& f, const Morphism& g) {
  if (f.dom() != g.dom()) throw usage_error("tuple: domains differ");
  return Morphism(f.dom(), f.cod() + g.cod(), vstack(f.mat(), g.mat()));
}

///      p
///   P ---> X
///   |q     | f
///   v      v
///   Y ---> Z
///      g
struct PullbackSquare {
  Morphism f;
  Morphism g;
  std::size_t apex_dim = 0;
  Morphism p;
  Morphism q;
};

/// Apex = nullspace of [f | -g] inside dom(f) (+) dom(g), basis in
/// nullspace_basis order.
inline PullbackSquare pullback(const Morphism& f, const Morphism& g) {
  if (f.cod() != g.cod()) throw usage_error("pullback: cospan legs have different codomains");
  Matrix apex = nullspace_basis(hstack(f.mat(), -g.mat()));
  std::size_t k = apex.cols();
  return {f, g, k, Morphism(k, f.dom(), apex.row_range(0, f.dom())),
          Morphism(k, g.dom(), apex.row_range(f.dom(), f.dom() + g.dom()))};
}

/// The unique u with p u = h1 and q u = h2, if (h1, h2) is a cone over
/// the cospan; nothing otherwise.
inline std::optional<Morphism> mediate(const PullbackSquare& sq, const Morphism& h1, const Morphism& h2) {
  if (h1.cod() != sq.f.dom() || h2.cod() != sq.g.dom() || h1.dom() != h2.dom()) {
    throw usage_error("mediate: cone legs do not match the square");
  }
  if (!(compose(sq.f, h1) == compose(sq.g, h2))) return std::nullopt;
  auto u = solve_linear(vstack(sq.p.mat(), sq.q.mat()), vstack(h1.mat(), h2.mat()));
  if (!u) return std::nullopt;
  return Morphism(h1.dom(), sq.apex_dim, *u);
}

/// f = im_basis * middle * coordinates, where coordinates expresses the
/// orthogonal projection onto coim in coim_basis. Only coim and im are
/// canonical; the bases and middle depend on the chosen rational bases.
struct FactorTriple {
  Subobject coim;
  Matrix coim_basis;
  Morphism middle;
  Matrix im_basis;
  Subobject im;

  /// (C^dagger C)^-1 C^dagger: dom(f) -> coordinates on coim.
  Morphism coordinates() const {
    std::size_t dom = coim.ambient();
    if (coim_basis.cols() == 0) return Morphism::zero(dom, 0);
    Matrix adj = mat_dagger(coim_basis);
    return Morphism(dom, coim_basis.cols(), *inverse(adj * coim_basis) * adj);
  }

  Morphism reconstruct() const {
    Morphism include(middle.cod(), im.ambient(), im_basis);
    return compose(include, compose(middle, coordinates()));
  }
};

inline FactorTriple factorize(const Morphism& f) {
  Matrix coim_basis = independent_columns(mat_dagger(f.mat()));
  Matrix im_basis = independent_columns(f.mat());
  std::size_t r = im_basis.cols();
  Matrix middle(r, r);
  if (r > 0) {
    Matrix adj = mat_dagger(im_basis);
    middle = *inverse(adj * im_basis) * adj * f.mat() * coim_basis;
  }
  return {projection_onto(f.dom(), coim_basis), coim_basis, Morphism(middle), im_basis,
          projection_onto(f.cod(), im_basis)};
}

}  // namespace hilbcat

#endif  // HILBCAT_CATEGORY_HPP
