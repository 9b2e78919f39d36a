#pragma once

// Exact rank computation for the small integer matrices arising as
// Koszul differentials.  Ranks are taken either over the rationals
// (fraction-free elimination in arbitrary precision) or over a prime
// field (modular elimination); the two must agree for all but finitely
// many primes, which the tests exploit.

#include <string>
#include <vector>

#include "sqfd/monomial.hpp"

namespace sqfd {

/// Dense row-major integer matrix.  A 0 x c or r x 0 matrix is a valid
/// zero map.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c);

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  bool is_zero() const;
};

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);

/// Coefficient field for rank computations: the rationals (p == 0) or
/// the prime field with p elements.
struct FieldSpec {
  long long p = 0;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Validates 2 <= p < 2^31 and primality.
  static FieldSpec prime_field(long long p);

  bool is_rationals() const { return p == 0; }
  std::string describe() const;
};

/// Rank over the rationals via fraction-free (Bareiss) elimination on
/// arbitrary-precision integers; every internal division is checked to
/// be exact.
int rank_rationals(const IntMatrix& A);

/// Rank over GF(p) via modular Gaussian elimination.
int rank_gfp(const IntMatrix& A, long long p);

int rank(const IntMatrix& A, const FieldSpec& field);

}  // namespace sqfd
