#pragma once

// Multigraded Koszul homology of a quotient I/J and the depth it
// computes.  Fixing a multidegree a, the Koszul complex of I/J in that
// degree has basis {sigma subset supp(a) : x^(a - 1_sigma) in I\J} at
// homological level |sigma|; projective dimension is the top level
// carrying nonzero homology over all multidegrees, and depth is n minus
// that (Auslander-Buchsbaum).  For squarefree quotients the squarefree
// multidegrees suffice; a sampled check confirms vanishing elsewhere.

#include <cstdint>
#include <optional>
#include <vector>

#include "sqfd/linalg.hpp"
#include "sqfd/monomial.hpp"

namespace sqfd {

/// Exponent vector over the ambient ring; entries are nonnegative and,
/// for this library's purposes, only their positions and multiplicities
/// above one matter.
class Multidegree {
 public:
  explicit Multidegree(std::vector<int> exps);
  static Multidegree squarefree(const Monomial& m);

  int n() const { return static_cast<int>(exps_.size()); }
  int exp(int var) const;  // 1-based
  int total() const;
  std::uint64_t support() const;
  /// Mask of positions with exponent exactly one, i.e. the positions a
  /// Koszul subtraction can remove from the support.
  std::uint64_t ones() const;
  bool is_squarefree() const;
  const std::vector<int>& exps() const { return exps_; }

  friend bool operator==(const Multidegree& a, const Multidegree& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<int> exps_;
};

std::string to_string(const Multidegree& a);  // "(1,0,2)"

/// Order of the subset bases within each homological level.  Homology is
/// basis-independent, which the tests verify by comparing the two.
enum class BasisOrder { Lex, RevLex };

/// One multidegree strand of the Koszul complex: subset bases per level
/// and the differentials between them.  diffs[i] maps level i to level
/// i-1; diffs[0] is the empty map.  The composite of consecutive
/// differentials is checked to vanish at build time.
struct KoszulStrand {
  Multidegree a;
  std::vector<std::vector<std::uint64_t>> bases;  // level -> subset masks
  std::vector<IntMatrix> diffs;

  int levels() const { return static_cast<int>(bases.size()) - 1; }
};

KoszulStrand build_strand(const IdealPair& pair, const Multidegree& a,
                          BasisOrder order = BasisOrder::Lex);

/// Homology dimensions per level, via dim H_i = dim C_i - rank d_i -
/// rank d_{i+1}.  The alternating sums of chain and homology dimensions
/// are checked to agree.
std::vector<int> strand_homology_dims(const KoszulStrand& strand, const FieldSpec& field);

struct DepthResult {
  int depth = 0;
  int projective_dimension = 0;
  Multidegree witness;  // first multidegree attaining the top level
};

/// Depth of I/J over the full polynomial ring, scanning every squarefree
/// multidegree in degree-then-lex order.  Capped at n <= 16.
DepthResult depth(const IdealPair& pair, const FieldSpec& field = FieldSpec::rationals());

inline constexpr int kDepthMaxVars = 16;

/// Samples multidegrees with entries in {0,1,2}, at least one 2, and
/// support containing a generator; returns the first one with nonzero
/// homology, which for a correct implementation never exists.
std::optional<Multidegree> depth_oracle_sample(const IdealPair& pair, const FieldSpec& field,
                                               int trials, std::uint64_t seed);

}  // namespace sqfd
