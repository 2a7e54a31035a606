#pragma once

#include <random>
#include <string>
#include <vector>

#include "tropexp/field.hpp"
#include "tropexp/linalg.hpp"

namespace tropexp::testing {

inline Scalar q(long num, long den = 1) { return Scalar(mpq_class(num, den)); }
inline Scalar sqrt2(long num = 1, long den = 1) { return Scalar(0, mpq_class(num, den), 2); }

inline Covector cov(std::initializer_list<Scalar> xs) { return Covector(Vec(xs)); }
inline Vector vec(std::initializer_list<Scalar> xs) { return Vector(Vec(xs)); }

/// Small random rationals num/den with |num| <= range, 1 <= den <= max_den.
inline Scalar random_rational(std::mt19937_64& rng, long range, long max_den = 1) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return Scalar(mpq_class(num(rng), den(rng)));
}

inline Scalar random_quadratic(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  return Scalar(mpq_class(d(rng)), mpq_class(d(rng)), 2);
}

/// Hull of `count` random integer points with coordinates in [-range, range].
inline std::vector<Covector> random_points(std::mt19937_64& rng, std::size_t n, std::size_t count, long range) {
  std::uniform_int_distribution<long> c(-range, range);
  std::vector<Covector> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Covector p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = Scalar(c(rng));
    pts.push_back(std::move(p));
  }
  return pts;
}

/// Random integer matrix with entries in [-range, range] of the requested rank.
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t want_rank,
                            long range = 2) {
  std::uniform_int_distribution<long> c(-range, range);
  auto fill = [&](std::size_t r, std::size_t k) {
    Matrix m(r, k);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = Scalar(c(rng));
    return m;
  };
  for (;;) {
    const Matrix m = fill(rows, want_rank) * fill(want_rank, cols);
    if (rank(m) == want_rank) return m;
  }
}

}  // namespace tropexp::testing
