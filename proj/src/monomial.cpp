#include "sqfd/monomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace sqfd {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::AmbientMismatch: return "ambient-mismatch";
    case Errc::NTooLarge: return "n-too-large";
    case Errc::BadIndex: return "bad-index";
    case Errc::NotSquarefree: return "not-squarefree";
    case Errc::EmptyIdeal: return "empty-ideal";
    case Errc::NotMinimal: return "not-minimal";
    case Errc::Containment: return "containment";
    case Errc::TrivialQuotient: return "trivial-quotient";
    case Errc::GradingHypothesis: return "grading-hypothesis";
    case Errc::MalformedInterval: return "malformed-interval";
    case Errc::Capacity: return "capacity";
    case Errc::Range: return "range";
    case Errc::SwapInvalid: return "swap-invalid";
    case Errc::NormalizationRequired: return "normalization-required";
    case Errc::InputContract: return "input-contract";
    case Errc::Assembly: return "assembly";
    case Errc::NotApplicable: return "not-applicable";
    case Errc::Parse: return "parse";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

namespace {

void check_ambient(int n) {
  if (n < 1) fail(Errc::Range, "ambient variable count must be positive, got " + std::to_string(n));
  if (n > kMaxVars)
    fail(Errc::NTooLarge, "ambient variable count " + std::to_string(n) + " exceeds the cap of " +
                              std::to_string(kMaxVars));
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~0ull : ((1ull << n) - 1);
}

void check_same_ambient(const Monomial& a, const Monomial& b, const char* what) {
  if (a.n() != b.n())
    fail(Errc::AmbientMismatch, std::string(what) + " requires matching ambients, got n=" +
                                    std::to_string(a.n()) + " and n=" + std::to_string(b.n()));
}

}  // namespace

Monomial Monomial::from_mask(std::uint64_t mask, int n) {
  check_ambient(n);
  if ((mask & ~full_mask(n)) != 0)
    fail(Errc::BadIndex, "variable mask uses indices beyond n=" + std::to_string(n));
  Monomial m;
  m.mask_ = mask;
  m.n_ = n;
  return m;
}

Monomial Monomial::from_indices(std::span<const int> vars, int n) {
  check_ambient(n);
  std::uint64_t mask = 0;
  for (int v : vars) {
    if (v < 1 || v > n)
      fail(Errc::BadIndex,
           "variable index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    std::uint64_t bit = 1ull << (v - 1);
    if (mask & bit) fail(Errc::NotSquarefree, "variable x" + std::to_string(v) + " repeated");
    mask |= bit;
  }
  return from_mask(mask, n);
}

Monomial::Monomial(std::initializer_list<int> vars, int n) {
  *this = from_indices(std::span<const int>(vars.begin(), vars.size()), n);
}

int Monomial::degree() const { return std::popcount(mask_); }

bool Monomial::contains(int var) const {
  if (var < 1 || var > n_)
    fail(Errc::BadIndex, "variable index " + std::to_string(var) + " outside 1.." + std::to_string(n_));
  return (mask_ >> (var - 1)) & 1u;
}

Monomial Monomial::with(int var) const {
  if (var < 1 || var > n_)
    fail(Errc::BadIndex, "variable index " + std::to_string(var) + " outside 1.." + std::to_string(n_));
  return from_mask(mask_ | (1ull << (var - 1)), n_);
}

Monomial Monomial::without(int var) const {
  if (var < 1 || var > n_)
    fail(Errc::BadIndex, "variable index " + std::to_string(var) + " outside 1.." + std::to_string(n_));
  return from_mask(mask_ & ~(1ull << (var - 1)), n_);
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree()));
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

bool divides(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b, "divides");
  return (a.mask() & ~b.mask()) == 0;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b, "lcm");
  return Monomial::from_mask(a.mask() | b.mask(), a.n());
}

bool lex_less(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b, "lex comparison");
  std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  int low = std::countr_zero(diff);
  if ((a.mask() >> low) & 1u) {
    // a owns the first divergent (smallest) variable; a precedes b unless b
    // has already run out, in which case b is a proper prefix of a.
    return (b.mask() >> low) != 0;
  }
  return (a.mask() >> low) == 0;
}

bool deg_lex_less(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b, "deg-lex comparison");
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return lex_less(a, b);
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int v : m.indices()) {
    if (!first) os << '*';
    os << 'x' << v;
    first = false;
  }
  return os.str();
}

MonomialIdeal::MonomialIdeal(int n) : n_(n) { check_ambient(n); }

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> minimal_gens) : n_(n) {
  check_ambient(n);
  for (const Monomial& g : minimal_gens) {
    if (g.n() != n)
      fail(Errc::AmbientMismatch, "generator " + to_string(g) + " has ambient n=" +
                                      std::to_string(g.n()) + ", ideal has n=" + std::to_string(n));
    if (g.is_unit()) fail(Errc::NotMinimal, "the unit monomial is not an admissible generator");
  }
  std::sort(minimal_gens.begin(), minimal_gens.end(), DegLexLess{});
  for (std::size_t i = 0; i < minimal_gens.size(); ++i)
    for (std::size_t j = 0; j < minimal_gens.size(); ++j)
      if (i != j && divides(minimal_gens[i], minimal_gens[j]))
        fail(Errc::NotMinimal, "generator " + to_string(minimal_gens[j]) + " is divisible by " +
                                   to_string(minimal_gens[i]) + "; pass through minimalize first");
  gens_ = std::move(minimal_gens);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.n() != n_)
    fail(Errc::AmbientMismatch, "membership test mixes n=" + std::to_string(m.n()) + " and n=" +
                                    std::to_string(n_));
  for (const Monomial& g : gens_)
    if ((g.mask() & ~m.mask()) == 0) return true;
  return false;
}

int MonomialIdeal::min_gen_degree() const {
  if (gens_.empty()) fail(Errc::EmptyIdeal, "the zero ideal has no generator degree");
  return gens_.front().degree();  // deg-lex sorted
}

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m) { return ideal.contains(m); }

MonomialIdeal minimalize(std::span<const Monomial> gens, int n) {
  check_ambient(n);
  if (gens.empty())
    fail(Errc::EmptyIdeal, "minimalize needs at least one generator; use MonomialIdeal::zero");
  std::vector<Monomial> work(gens.begin(), gens.end());
  for (const Monomial& g : work) {
    if (g.n() != n)
      fail(Errc::AmbientMismatch, "generator " + to_string(g) + " has ambient n=" +
                                      std::to_string(g.n()) + ", expected n=" + std::to_string(n));
    if (g.is_unit()) fail(Errc::NotMinimal, "the unit monomial is not an admissible generator");
  }
  std::sort(work.begin(), work.end(), DegLexLess{});
  work.erase(std::unique(work.begin(), work.end()), work.end());
  std::vector<Monomial> keep;
  for (std::size_t i = 0; i < work.size(); ++i) {
    bool redundant = false;
    // only earlier (lower or equal degree) entries can divide work[i]
    for (std::size_t j = 0; j < i && !redundant; ++j)
      redundant = divides(work[j], work[i]);
    if (!redundant) keep.push_back(work[i]);
  }
  return MonomialIdeal(n, std::move(keep));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n())
    fail(Errc::AmbientMismatch, "intersect mixes n=" + std::to_string(a.n()) + " and n=" +
                                    std::to_string(b.n()));
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.n());
  std::vector<Monomial> lcms;
  lcms.reserve(a.num_gens() * b.num_gens());
  for (const Monomial& ga : a.gens())
    for (const Monomial& gb : b.gens()) lcms.push_back(lcm(ga, gb));
  return minimalize(lcms, a.n());
}

IdealPair validate_pair(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.n() != J.n())
    fail(Errc::AmbientMismatch, "pair mixes n=" + std::to_string(I.n()) + " and n=" +
                                    std::to_string(J.n()));
  if (I.is_zero()) fail(Errc::EmptyIdeal, "the numerator ideal I must be nonzero");
  int d = I.min_gen_degree();
  for (const Monomial& g : J.gens())
    if (!I.contains(g))
      fail(Errc::Containment, "generator " + to_string(g) + " of J lies outside I");
  if (!J.is_zero()) {
    bool equal = true;
    for (const Monomial& g : I.gens())
      if (!J.contains(g)) {
        equal = false;
        break;
      }
    if (equal) fail(Errc::TrivialQuotient, "J equals I, the quotient I/J is zero");
    for (const Monomial& g : J.gens())
      if (g.degree() < d + 1)
        fail(Errc::GradingHypothesis, "generator " + to_string(g) + " of J has degree " +
                                          std::to_string(g.degree()) +
                                          ", expected at least d+1 = " + std::to_string(d + 1));
  }
  return IdealPair{I, J, d};
}

}  // namespace sqfd
