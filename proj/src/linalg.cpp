#include "sqfd/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace sqfd {

using boost::multiprecision::cpp_int;

IntMatrix::IntMatrix(int r, int c) : rows(r), cols(c) {
  if (r < 0 || c < 0) fail(Errc::Range, "matrix dimensions must be nonnegative");
  a.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0);
}

bool IntMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
  if (A.cols != B.rows)
    fail(Errc::Range, "matrix product shape mismatch: " + std::to_string(A.cols) + " vs " +
                          std::to_string(B.rows));
  IntMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      long long aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

FieldSpec FieldSpec::prime_field(long long p) {
  if (p < 2 || p >= (1ll << 31))
    fail(Errc::Range, "prime field order must lie in [2, 2^31), got " + std::to_string(p));
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0)
      fail(Errc::InputContract, std::to_string(p) + " is composite (divisible by " +
                                    std::to_string(q) + "), not a prime field order");
  return FieldSpec{p};
}

std::string FieldSpec::describe() const {
  return is_rationals() ? "rationals" : "gf(" + std::to_string(p) + ")";
}

int rank_rationals(const IntMatrix& A) {
  const int rows = A.rows, cols = A.cols;
  std::vector<cpp_int> m(A.a.begin(), A.a.end());
  auto at = [&](int i, int j) -> cpp_int& { return m[static_cast<std::size_t>(i) * cols + j]; };

  // Bareiss: after each elimination the entries are minors of the input,
  // so dividing by the previous pivot is exact; the remainder check turns
  // any violation into a loud failure instead of a wrong rank.
  cpp_int prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        cpp_int num = at(rank, col) * at(r, c) - at(r, col) * at(rank, c);
        cpp_int q, rem;
        divide_qr(num, prev, q, rem);
        if (rem != 0) fail(Errc::Internal, "fraction-free elimination produced a non-exact division");
        at(r, c) = q;
      }
      at(r, col) = 0;
    }
    prev = at(rank, col);
    ++rank;
  }
  return rank;
}

int rank_gfp(const IntMatrix& A, long long p) {
  FieldSpec::prime_field(p);  // validate
  const int rows = A.rows, cols = A.cols;
  std::vector<long long> m(A.a.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = ((A.a[i] % p) + p) % p;
  auto at = [&](int i, int j) -> long long& { return m[static_cast<std::size_t>(i) * cols + j]; };

  auto pow_mod = [&](long long base, long long exp) {
    long long out = 1 % p;
    base %= p;
    while (exp > 0) {
      if (exp & 1) out = out * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return out;
  };

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    long long inv = pow_mod(at(rank, col), p - 2);
    for (int r = rank + 1; r < rows; ++r) {
      if (at(r, col) == 0) continue;
      long long factor = at(r, col) * inv % p;
      for (int c = col; c < cols; ++c)
        at(r, c) = ((at(r, c) - factor * at(rank, c)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

int rank(const IntMatrix& A, const FieldSpec& field) {
  return field.is_rationals() ? rank_rationals(A) : rank_gfp(A, field.p);
}

}  // namespace sqfd
