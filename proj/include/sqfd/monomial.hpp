#pragma once

// Squarefree monomials over a fixed ambient polynomial ring K[x1..xn],
// monomial ideals given by minimal generators, and validated quotient
// pairs I/J.  A squarefree monomial is identified with its set of
// variable indices, stored as a 64-bit mask (variable xi <-> bit i-1),
// so the ambient size is capped at 64 variables.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqfd {

inline constexpr int kMaxVars = 64;

enum class Errc {
  AmbientMismatch,
  NTooLarge,
  BadIndex,
  NotSquarefree,
  EmptyIdeal,
  NotMinimal,
  Containment,
  TrivialQuotient,
  GradingHypothesis,
  MalformedInterval,
  Capacity,
  Range,
  SwapInvalid,
  NormalizationRequired,
  InputContract,
  Assembly,
  NotApplicable,
  Parse,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

/// A squarefree monomial together with its ambient variable count.
/// The unit monomial (empty variable set) is mask 0.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_mask(std::uint64_t mask, int n);
  static Monomial from_indices(std::span<const int> vars, int n);
  Monomial(std::initializer_list<int> vars, int n);

  int n() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int degree() const;
  bool is_unit() const { return mask_ == 0; }

  bool contains(int var) const;  // 1-based
  Monomial with(int var) const;
  Monomial without(int var) const;
  std::vector<int> indices() const;  // sorted, 1-based

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.mask_ == b.mask_ && a.n_ == b.n_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  std::uint64_t mask_ = 0;
  int n_ = 0;
};

/// True when a divides b, i.e. the variable set of a is contained in b's.
bool divides(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);

/// Strict lexicographic order on the sorted index sequences:
/// x1*x2*x5 < x1*x3*x4, and a proper prefix precedes its extensions.
bool lex_less(const Monomial& a, const Monomial& b);

/// Degree-major order with lexicographic tie-break.  This is the canonical
/// enumeration order used everywhere a deterministic choice is needed.
bool deg_lex_less(const Monomial& a, const Monomial& b);

struct DegLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return deg_lex_less(a, b); }
};

std::string to_string(const Monomial& m);  // "x1*x2", unit prints "1"

/// Monomial ideal with its minimal (antichain) generating set, kept in
/// deg-lex order.  The zero ideal has an empty generator list.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int n);  // zero ideal
  MonomialIdeal(int n, std::vector<Monomial> minimal_gens);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n); }

  int n() const { return n_; }
  bool is_zero() const { return gens_.empty(); }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }

  bool contains(const Monomial& m) const;
  int min_gen_degree() const;  // errors on the zero ideal

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m);

/// Drops generators divisible by another one and deduplicates; the result
/// is the minimal generating set.  An empty input is rejected: represent
/// the zero ideal with MonomialIdeal::zero instead.
MonomialIdeal minimalize(std::span<const Monomial> gens, int n);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// A validated quotient I/J of squarefree monomial ideals: 0 <= J < I,
/// I generated in degrees >= d with d the least generator degree, and J
/// (when nonzero) generated in degrees >= d+1.
struct IdealPair {
  MonomialIdeal I;
  MonomialIdeal J;
  int d = 0;

  int n() const { return I.n(); }
};

/// Checks the quotient hypotheses and reports the first violation as an
/// error naming the offending generator; no normalization is attempted.
IdealPair validate_pair(const MonomialIdeal& I, const MonomialIdeal& J);

}  // namespace sqfd
