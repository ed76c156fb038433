#ifndef MODLAB_RANDOM_HPP
#define MODLAB_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

#include "modlab/linalg.hpp"

namespace modlab {

/// Deterministic stream of gaussian complex matrices/vectors, identical
/// across platforms (splitmix64 + Box-Muller, no library distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform() {  // in (0, 1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double gaussian() {
    const double u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
  }

  Complex gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im) / std::sqrt(2.0);
  }

  Vector vector(Eigen::Index d) {
    Vector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = gaussian_complex();
    return v;
  }

  Vector unit_vector(Eigen::Index d) {
    Vector v = vector(d);
    return v / v.norm();
  }

  Matrix matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = gaussian_complex();
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace modlab

#endif
