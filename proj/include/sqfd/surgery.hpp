#pragma once

// Partition surgery: rewriting interval partitions of subquotients of
// I/J into a partition of I/J itself whose tops all have degree >= d+2.
//
// All partitions here are in normal form on the full poset of their
// pair: intervals starting below degree d+2 are topped exactly at
// degree d+2, everything else is a singleton.  Such a partition is
// equivalent to an assignment map h sending each degree-(d+1) element
// to the degree-(d+2) top of its interval, together with the inverse g
// on the tops.  The surgery walks back and forth between two such maps
// (the alternating chain), rewrites the affected intervals, and
// validates every rewrite against the host it claims to cover.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqfd/monomial.hpp"
#include "sqfd/poset.hpp"
#include "sqfd/profile.hpp"

namespace sqfd {

/// The interval [f, f*x_i*x_j] of a partition whose host reaches down to
/// degree d.  Both degree-(d+1) elements f*x_i and f*x_j are swallowed
/// by it, so h maps both to the top while g returns the smaller one.
struct SpecialAssignment {
  Monomial f;
  Monomial top;
  int i = 0;  // i < j, the two variables extending f to the top
  int j = 0;
};

/// The map h (degree-(d+1) bottoms to degree-(d+2) tops) and its inverse
/// g read off a normal-form partition.
class AssignmentMap {
 public:
  /// Record h(from) = to and g(to) = from; duplicate keys on either side
  /// are an input-contract error.
  void add(const Monomial& from, const Monomial& to);
  /// Record the interval [f, top]: h maps both intermediate elements to
  /// top, g returns the one with the smaller extending variable.
  void add_special(const Monomial& f, const Monomial& top);

  std::optional<Monomial> h(const Monomial& m) const;
  std::optional<Monomial> g(const Monomial& m) const;
  bool in_image_h(const Monomial& m) const;
  bool is_special_source(const Monomial& m) const;
  const std::optional<SpecialAssignment>& special() const { return special_; }
  std::size_t size() const { return h_.size(); }

 private:
  std::map<std::uint64_t, Monomial> h_;
  std::map<std::uint64_t, Monomial> g_;
  std::optional<SpecialAssignment> special_;
};

/// Reads the assignment map off a partition in normal form around
/// base_degree = d: every non-singleton interval must top out exactly at
/// degree d+2, anything else is a normalization-required error.
/// Singletons contribute no entries.  Intervals starting at degree d+1
/// become plain entries; an interval starting at degree d becomes the
/// special entry (when several compete, the one with the
/// lexicographically smallest top wins and the rest are ignored — in a
/// valid partition there can only be one).
AssignmentMap read_assignment_map(const IntervalPartition& p, int base_degree);

/// Where the alternating chain is allowed to stop.
struct ChainTargets {
  /// The generator removed from the fresh map's pair; reaching it ends
  /// the chain with the spare top below.
  Monomial b2;
  /// Replacement top used when the chain reaches b2.
  std::optional<Monomial> cbar;
};

/// The walk a_0, c_0 = h2(a_0), a_1 = g1(c_0), c_1 = h2(a_1), ...
/// stop_case 1: some a_e = b2 (tops end with cbar);
/// stop_case 2: some c_e leaves the image of h1 (tops end with c_e);
/// stop_case 3: the chain hits the second of the fresh map's two special
/// sources (tops end at c_{e-1}; fixed_u marks the first hit, whose top
/// is the special top).
struct ChainState {
  std::vector<Monomial> bottoms;  // a_0 .. a_e
  std::vector<Monomial> tops;     // c_0 .. c_e, or c_0 .. c_{e-1} in case 3
  int stop_case = 0;
  int fixed_u = -1;
};

/// Runs the walk from a_0 = b1, pulling tops from fresh and returning to
/// bottoms through the inverse side of old_map.  Inconsistent maps
/// (missing entries, revisits, duplicate tops, a mismatch between
/// old_map and the recorded tops) are input-contract errors.
ChainState alternating_chain(const AssignmentMap& old_map, const AssignmentMap& fresh,
                             const Monomial& b1, const ChainTargets& targets);

/// Removes the intervals `out` (which must be present verbatim), adds
/// `into`, and re-validates against new_host.  Any defect, including a
/// coverage mismatch with the new host, is a swap-invalid error carrying
/// the validator's witness.
IntervalPartition swap_intervals(const IntervalPartition& p, std::span<const Interval> out,
                                 std::span<const Interval> into, const StanleyPoset& new_host);

/// Everything chain_to_partition needs besides the chain itself.
struct SurgeryContext {
  Monomial f;
  int base_degree = 0;
  /// The partition the chain was walked against, on the full poset of
  /// the pair missing the chain's starting generator b1.
  IntervalPartition source;
  /// Its assignment map (the h1/g1 side of the walk).
  AssignmentMap source_map;
  /// Full poset of (B)/((B) cap J), the host that adds b1 back.
  StanleyPoset b_host;
  /// Full poset of I/J itself.
  StanleyPoset full_host;
};

/// Rewrites the source partition along the chain into a partition of the
/// full poset of I/J with every top at degree >= d+2.  Cases 1 and 2
/// pass through b_host and then attach f; case 3 lands on the full host
/// directly, covering f inside [f, c_u].  Elements of the target host
/// that the rewrite leaves uncovered re-enter as singletons when their
/// degree allows it.  A rewrite that fails validation surfaces as an
/// assembly error.
IntervalPartition chain_to_partition(const ChainState& state, const SurgeryContext& ctx);

/// The final move shared by several routes: a partition of b_host covers
/// everything but f, and the two intervals [f*x_a, f*x_a*x_b] and
/// [f*x_b, c'] are traded for [f, f*x_a*x_b] and the singleton [c'].
/// The smallest available variable a is used.
IntervalPartition attach_f(const IntervalPartition& p, const Monomial& f,
                           const StanleyPoset& full_host);

struct UpgradeReport {
  enum class Status { Upgraded, NotApplicable };

  Status status = Status::NotApplicable;
  /// On success: direct-swap, singleton-swap, b1-swap, chain-case-1,
  /// chain-case-2, or chain-case-3.
  std::string route;
  /// On refusal: r-not-1, base-case-E-empty, C-outside-f-B,
  /// no-f-square-in-C, descend-at-In, no-singleton-cbar, or
  /// descend-at-Ib2 (the furthest point any configuration reached).
  std::string reason;
  std::string detail;
  /// On success, a validated partition of the full poset of I/J with
  /// minimum top degree d+2.
  std::optional<IntervalPartition> partition;
  /// The walk behind a chain-case-* route.
  std::optional<ChainState> chain;
};

/// Tries to build a partition of I/J with all tops at degree >= d+2 out
/// of sdepth-(d+2) witnesses of the smaller pairs obtained by removing
/// one generator.  Refusals are honest: a not-applicable report either
/// names the unmet precondition or records that every configuration
/// descends to a smaller pair where the depth bound follows by
/// induction.
UpgradeReport upgrade_partition(const IdealPair& pair);

}  // namespace sqfd
