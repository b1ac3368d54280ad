#pragma once

#include <ostream>
#include <random>

#include "toeplitz/gaussian_rational.hpp"
#include "toeplitz/poly.hpp"
#include "toeplitz/rational_function.hpp"

namespace toeplitz {

inline void PrintTo(const GaussianRational& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RationalFunction& f, std::ostream* os) { *os << f.to_string(); }

}  // namespace toeplitz

namespace toeplitz::test {

inline GaussianRational Q(long num, long den = 1) { return GaussianRational::from_ratios(num, den); }
inline GaussianRational C(long re, long im) { return GaussianRational::from_ratios(re, 1, im, 1); }
inline const GaussianRational I = GaussianRational::i();

// (z - root)
inline Poly lin(const GaussianRational& root) { return Poly{-root, 1}; }

// Small local generator, independent of the library corpus.
class Rng {
 public:
  explicit Rng(unsigned seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  GaussianRational gaussian() {
    return GaussianRational::from_ratios(uniform(-6, 6), uniform(1, 5), uniform(-6, 6), uniform(1, 5));
  }
  Poly poly(int deg) {
    std::vector<GaussianRational> c;
    for (int k = 0; k <= deg; ++k) c.push_back(gaussian());
    while (c.back().is_zero()) c.back() = gaussian();
    return Poly(c);
  }

 private:
  std::mt19937 g_;
};

}  // namespace toeplitz::test
