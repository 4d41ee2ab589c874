#pragma once

// Test-side reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <vector>

#include "ngc/cyclo.hpp"

namespace oracle {

using Complex = std::complex<long double>;

inline const long double kPi = std::acos(-1.0L);

inline Complex zeta(int m, long k) { return std::polar(1.0L, 2 * kPi * static_cast<long double>(k) / m); }

/// Numerical value of an exact cyclotomic number.
inline Complex to_complex(const ngc::CycloNum& a) {
  Complex out = 0;
  const auto c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) out += static_cast<long double>(c[i].get_d()) * zeta(a.conductor(), static_cast<long>(i));
  return out;
}

inline bool close(Complex a, Complex b, long double tol = 1e-12L) { return std::abs(a - b) < tol; }

/// k with z = ζ_m^k, found by angle.
inline std::optional<int> exponent_of(Complex z, int m) {
  if (std::abs(std::abs(z) - 1) > 1e-12L) return std::nullopt;
  long double turns = std::arg(z) / (2 * kPi) * m;
  long k = std::lround(turns);
  if (std::abs(turns - static_cast<long double>(k)) > 1e-9L) return std::nullopt;
  k %= m;
  if (k < 0) k += m;
  return static_cast<int>(k);
}

/// Principal square root on the unit circle: halve the angle taken in [0, 2π).
inline Complex principal_sqrt(Complex z) {
  long double a = std::arg(z);
  if (a < 0) a += 2 * kPi;
  if (a >= 2 * kPi - 1e-15L) a = 0;
  return std::polar(std::sqrt(std::abs(z)), a / 2);
}

/// Determinant by cofactor-free Gaussian elimination with partial pivoting.
inline Complex determinant(std::vector<std::vector<Complex>> a) {
  const std::size_t n = a.size();
  Complex det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-15L) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Determinant over GF(2) by expansion over all permutations.
inline int gf2_determinant(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  int det = 0;
  do {
    int prod = 1;
    for (std::size_t i = 0; i < n && prod; ++i) prod &= m[i][perm[i]];
    det ^= prod;  // signs vanish mod 2
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Every invertible symmetric 0/1 matrix of size n.
inline std::vector<std::vector<std::vector<int>>> invertible_symmetric(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<std::vector<std::vector<int>>> out;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const int bit = static_cast<int>((mask >> s) & 1ul);
      m[static_cast<std::size_t>(slots[s].first)][static_cast<std::size_t>(slots[s].second)] = bit;
      m[static_cast<std::size_t>(slots[s].second)][static_cast<std::size_t>(slots[s].first)] = bit;
    }
    if (gf2_determinant(m) == 1) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace oracle
