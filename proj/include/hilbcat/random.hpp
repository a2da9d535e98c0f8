#ifndef HILBCAT_RANDOM_HPP
#define HILBCAT_RANDOM_HPP

#include <hilbcat/category.hpp>

#include <array>
#include <cstdint>
#include <random>
#include <utility>

namespace hilbcat {

/// splitmix64 step; used to derive independent substreams from one seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seeded generator of small exact instances. Entries come from
/// {0, +-1, +-i, +-1/2} with zero drawn more often, so degenerate ranks
/// show up regularly. Only raw mt19937_64 output is used (no std
/// distributions), which keeps streams identical across standard libraries.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  std::size_t dim(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (rng_() & 1U) != 0; }

  Scalar entry() {
    static const std::array<Scalar, 9> table{
        Scalar(0), Scalar(0), Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i(),
        Scalar::ratio(1, 2), Scalar::ratio(-1, 2), Scalar(0)};
    return table[below(table.size())];
  }

  Scalar nonzero_scalar() {
    Scalar s;
    while (s.is_zero()) s = entry() + entry() * Scalar::i();
    return s;
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry();
    }
    return m;
  }

  /// A third of the time the matrix is routed through a smaller space to
  /// force rank deficiency.
  Morphism morphism(std::size_t dom, std::size_t cod) {
    if (dom > 0 && cod > 0 && below(3) == 0) {
      std::size_t mid = below(std::min(dom, cod));
      return Morphism(dom, cod, matrix(cod, mid) * matrix(mid, dom));
    }
    return Morphism(dom, cod, matrix(cod, dom));
  }

  Subobject subobject(std::size_t ambient) {
    std::size_t k = below(ambient + 1);
    return from_span(ambient, matrix(ambient, k));
  }

  /// M <= N, with M spanned by random combinations of a basis of N.
  std::pair<Subobject, Subobject> nested_pair(std::size_t ambient) {
    Subobject n = subobject(ambient);
    Matrix nb = n.basis();
    Subobject m = from_span(ambient, nb * matrix(nb.cols(), below(nb.cols() + 1)));
    return {m, n};
  }

  Matrix full_column_rank(std::size_t rows, std::size_t cols) {
    if (cols > rows) throw usage_error("full_column_rank: more columns than rows");
    while (true) {
      Matrix m = matrix(rows, cols);
      if (rank(m) == cols) return m;
    }
  }

  Matrix invertible(std::size_t n) { return full_column_rank(n, n); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hilbcat

#endif  // HILBCAT_RANDOM_HPP
