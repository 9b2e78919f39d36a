#pragma once

// The divisibility poset of squarefree monomials in I \ J, interval
// partitions of it, and the Stanley depth solver.
//
// sdepth_S I/J is the largest k such that the poset admits a partition
// into intervals [u,v] whose tops all have degree >= k.  The solver
// decides each k on the degree-<=k truncation: a partition of the
// truncation in which every interval starting below degree k is topped
// exactly at degree k, and leftover degree-k elements are singletons,
// exists iff sdepth >= k.  A brute-force oracle over the full poset
// guards that reduction for small instances.

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sqfd/monomial.hpp"

namespace sqfd {

/// Elements of I \ J up to a degree bound, grouped by degree and indexed
/// in deg-lex order.
class StanleyPoset {
 public:
  StanleyPoset() = default;

  const IdealPair& pair() const { return pair_; }
  int n() const { return pair_.n(); }
  int d() const { return pair_.d; }
  int max_degree() const { return max_degree_; }
  /// Set when the requested truncation degree lies below d, which forces
  /// an empty poset.
  bool empty_truncation() const { return empty_truncation_; }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Monomial>& elements() const { return elements_; }
  const Monomial& element(int id) const { return elements_[static_cast<std::size_t>(id)]; }
  std::span<const Monomial> layer(int degree) const;
  int layer_size(int degree) const;

  bool contains(const Monomial& m) const;
  int id_of(const Monomial& m) const;  // -1 when absent

  friend StanleyPoset build_poset(const IdealPair& pair, int max_degree);

 private:
  // Placeholder pair so a default-constructed poset is simply empty.
  IdealPair pair_{MonomialIdeal::zero(1), MonomialIdeal::zero(1), 0};
  int max_degree_ = 0;
  bool empty_truncation_ = false;
  std::vector<Monomial> elements_;
  std::vector<int> layer_begin_;  // size max_degree_+2
  std::unordered_map<std::uint64_t, int> index_;
};

/// All monomials of I \ J with degree <= max_degree.  max_degree may be
/// at most n; a bound below d yields an empty poset flagged via
/// empty_truncation().
StanleyPoset build_poset(const IdealPair& pair, int max_degree);

struct Interval {
  Monomial u;
  Monomial v;

  friend bool operator==(const Interval& a, const Interval& b) { return a.u == b.u && a.v == b.v; }
};

/// The 2^(deg v - deg u) monomials w with u | w | v.  Both endpoints must
/// lie in the host; every intermediate automatically does, which is
/// asserted.
std::vector<Monomial> interval_elements(const Interval& iv, const StanleyPoset& host);

struct IntervalPartition {
  StanleyPoset host;
  std::vector<Interval> intervals;

  /// Smallest top degree, the partition's Stanley depth contribution.
  /// Errors on an empty interval list.
  int min_top_degree() const;
};

struct PartitionDiagnostics {
  bool valid = false;
  std::string problem;                // empty when valid
  std::optional<Monomial> witness;    // first offending element, if any
};

/// Checks that the intervals are well formed and cover every host element
/// exactly once.  The first offense in deg-lex order is reported.
PartitionDiagnostics validate_partition(const IntervalPartition& p);

struct SdepthOptions {
  /// Short-circuit the k = d+2 decision via the counting bounds
  /// (s > r+q, r > q, s < 2r) when every generator of I has degree d or
  /// d+1.  Verification paths disable this to keep the search honest.
  bool bound_shortcut = true;
  /// Number of failed covered-set states remembered during the exact
  /// cover search before memoization stops growing.
  std::size_t memo_budget = std::size_t(1) << 20;
};

/// Decides whether sdepth >= k, returning a witness partition of the
/// degree-<=k truncation when present.  Requires d <= k <= n.
std::optional<IntervalPartition> sdepth_decide(const IdealPair& pair, int k,
                                               const SdepthOptions& opts = {});

struct SdepthCertificate {
  int value = 0;
  IntervalPartition witness;   // partition of the degree-<=value truncation
  std::string refutation;      // why value+1 is absent
};

SdepthCertificate sdepth(const IdealPair& pair, const SdepthOptions& opts = {});

/// Exhaustive maximum over all interval partitions of the full poset of
/// the minimum top degree.  Independent of the truncation solver; refuses
/// posets with more than 14 elements.
int sdepth_oracle(const IdealPair& pair);

inline constexpr int kOracleMaxPoset = 14;

/// Extends a partition of a truncation to the given full host by adding
/// the missing elements as singleton intervals, then validates.
IntervalPartition lift_to_full(const IntervalPartition& truncated, const StanleyPoset& full_host);

}  // namespace sqfd
