#ifndef HILBCAT_MORPHISM_HPP
#define HILBCAT_MORPHISM_HPP

#include <hilbcat/matrix.hpp>

#include <string>

namespace hilbcat {

/// An arrow dom -> cod between finite-dimensional spaces, stored as a
/// cod x dom matrix.
class Morphism {
 public:
  Morphism() = default;
  explicit Morphism(Matrix mat) : dom_(mat.cols()), cod_(mat.rows()), mat_(std::move(mat)) {}
  Morphism(std::size_t dom, std::size_t cod, Matrix mat) : dom_(dom), cod_(cod), mat_(std::move(mat)) {
    if (mat_.rows() != cod_ || mat_.cols() != dom_) {
      throw usage_error("morphism " + std::to_string(dom_) + " -> " + std::to_string(cod_) +
                        " cannot carry a " + mat_.shape() + " matrix");
    }
  }

  static Morphism identity(std::size_t n) { return Morphism(Matrix::identity(n)); }
  static Morphism zero(std::size_t dom, std::size_t cod) { return Morphism(Matrix::zero(cod, dom)); }

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const Matrix& mat() const { return mat_; }
  bool is_zero() const { return mat_.is_zero(); }

  friend bool operator==(const Morphism&, const Morphism&) = default;

  friend Morphism operator+(const Morphism& f, const Morphism& g) { return Morphism(f.mat_ + g.mat_); }
  friend Morphism operator-(const Morphism& f, const Morphism& g) { return Morphism(f.mat_ - g.mat_); }

 private:
  std::size_t dom_ = 0;
  std::size_t cod_ = 0;
  Matrix mat_;
};

/// g after f.
inline Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.dom() != f.cod()) {
    throw usage_error("compose: dom(g) = " + std::to_string(g.dom()) + " but cod(f) = " +
                      std::to_string(f.cod()));
  }
  return Morphism(f.dom(), g.cod(), g.mat() * f.mat());
}

inline Morphism dagger(const Morphism& f) { return Morphism(f.cod(), f.dom(), mat_dagger(f.mat())); }

/// Entrywise action of a scalar; agrees with ([s] tensor f) up to the unit
/// isomorphisms.
inline Morphism scalar_mul(const Scalar& s, const Morphism& f) {
  return Morphism(f.dom(), f.cod(), s * f.mat());
}

inline Morphism tensor_mor(const Morphism& f, const Morphism& g) {
  return Morphism(f.dom() * g.dom(), f.cod() * g.cod(), kron(f.mat(), g.mat()));
}

/// f^dagger f = id exactly.
inline bool is_dagger_mono(const Morphism& f) {
  return mat_dagger(f.mat()) * f.mat() == Matrix::identity(f.dom());
}

inline bool is_dagger_epi(const Morphism& f) {
  return f.mat() * mat_dagger(f.mat()) == Matrix::identity(f.cod());
}

}  // namespace hilbcat

#endif  // HILBCAT_MORPHISM_HPP
