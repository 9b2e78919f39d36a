#include "sqfd/poset.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace sqfd {

namespace {

// Dynamic bitset sized for one poset; doubles as the memo key.
struct CoverSet {
  std::vector<std::uint64_t> w;

  explicit CoverSet(int bits) : w(static_cast<std::size_t>((bits + 63) / 64), 0) {}
  bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63)); }

  friend bool operator==(const CoverSet& a, const CoverSet& b) { return a.w == b.w; }
};

struct CoverSetHash {
  std::size_t operator()(const CoverSet& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t x : s.w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Enumerates ids of [u,v] within the host; caller guarantees u | v.
void collect_interval_ids(const StanleyPoset& host, const Monomial& u, const Monomial& v,
                          std::vector<int>& out) {
  out.clear();
  std::uint64_t extra = v.mask() & ~u.mask();
  // iterate all submasks of extra, including 0 and extra itself
  std::uint64_t sub = 0;
  while (true) {
    Monomial w = Monomial::from_mask(u.mask() | sub, host.n());
    int id = host.id_of(w);
    if (id < 0)
      fail(Errc::Internal, "interval element " + to_string(w) +
                               " escaped the poset; divisibility closure violated");
    out.push_back(id);
    if (sub == extra) break;
    sub = (sub - extra) & extra;
  }
}

struct BoundCounts {
  bool defined = false;  // all generators of I in degrees d, d+1
  long long r = 0, s = 0, q = 0;
  bool any_fires() const { return defined && (s > r + q || r > q || s < 2 * r); }
};

BoundCounts degree_bound_counts(const IdealPair& pair) {
  BoundCounts b;
  b.defined = true;
  for (const Monomial& g : pair.I.gens())
    if (g.degree() > pair.d + 1) {
      b.defined = false;
      return b;
    }
  StanleyPoset p = build_poset(pair, std::min(pair.n(), pair.d + 2));
  b.r = p.layer_size(pair.d);
  b.s = p.layer_size(pair.d + 1);
  b.q = p.layer_size(pair.d + 2);
  return b;
}

}  // namespace

std::span<const Monomial> StanleyPoset::layer(int degree) const {
  if (degree < 0 || degree > max_degree_ || elements_.empty()) return {};
  auto b = static_cast<std::size_t>(layer_begin_[static_cast<std::size_t>(degree)]);
  auto e = static_cast<std::size_t>(layer_begin_[static_cast<std::size_t>(degree) + 1]);
  return {elements_.data() + b, e - b};
}

int StanleyPoset::layer_size(int degree) const { return static_cast<int>(layer(degree).size()); }

bool StanleyPoset::contains(const Monomial& m) const { return id_of(m) >= 0; }

int StanleyPoset::id_of(const Monomial& m) const {
  if (m.n() != n())
    fail(Errc::AmbientMismatch, "poset over n=" + std::to_string(n()) + " queried with n=" +
                                    std::to_string(m.n()));
  auto it = index_.find(m.mask());
  return it == index_.end() ? -1 : it->second;
}

StanleyPoset build_poset(const IdealPair& pair, int max_degree) {
  int n = pair.n();
  if (max_degree > n)
    fail(Errc::Range, "truncation degree " + std::to_string(max_degree) + " exceeds n=" +
                          std::to_string(n));
  StanleyPoset poset;
  poset.pair_ = pair;
  poset.max_degree_ = std::max(max_degree, 0);
  poset.layer_begin_.assign(static_cast<std::size_t>(poset.max_degree_) + 2, 0);
  if (max_degree < pair.d) {
    poset.empty_truncation_ = true;
    return poset;
  }

  // Layer-by-layer closure: each element of degree k+1 in I\J is either a
  // variable multiple of a degree-k element of I\J or itself a minimal
  // generator of I, so seeding with generators and growing upward while
  // rejecting members of J enumerates exactly the poset.
  std::vector<std::vector<Monomial>> layers(static_cast<std::size_t>(poset.max_degree_) + 1);
  std::unordered_set<std::uint64_t> seen;
  for (const Monomial& g : pair.I.gens())
    if (g.degree() <= poset.max_degree_ && !pair.J.contains(g))
      if (seen.insert(g.mask()).second) layers[static_cast<std::size_t>(g.degree())].push_back(g);
  for (int deg = pair.d; deg < poset.max_degree_; ++deg) {
    for (const Monomial& m : layers[static_cast<std::size_t>(deg)]) {
      for (int v = 1; v <= n; ++v) {
        if (m.contains(v)) continue;
        Monomial up = m.with(v);
        if (seen.count(up.mask())) continue;
        if (pair.J.contains(up)) continue;
        seen.insert(up.mask());
        layers[static_cast<std::size_t>(deg) + 1].push_back(up);
      }
    }
  }

  for (int deg = 0; deg <= poset.max_degree_; ++deg) {
    auto& layer = layers[static_cast<std::size_t>(deg)];
    std::sort(layer.begin(), layer.end(), [](const Monomial& a, const Monomial& b) {
      return lex_less(a, b);
    });
    poset.layer_begin_[static_cast<std::size_t>(deg)] = static_cast<int>(poset.elements_.size());
    for (const Monomial& m : layer) {
      poset.index_.emplace(m.mask(), static_cast<int>(poset.elements_.size()));
      poset.elements_.push_back(m);
    }
  }
  poset.layer_begin_[static_cast<std::size_t>(poset.max_degree_) + 1] =
      static_cast<int>(poset.elements_.size());

  if (poset.elements_.empty())
    fail(Errc::Internal, "valid quotient produced an empty poset at truncation degree " +
                             std::to_string(max_degree));
  return poset;
}

std::vector<Monomial> interval_elements(const Interval& iv, const StanleyPoset& host) {
  if (!divides(iv.u, iv.v))
    fail(Errc::MalformedInterval,
         to_string(iv.u) + " does not divide " + to_string(iv.v));
  if (!host.contains(iv.u))
    fail(Errc::MalformedInterval, "interval bottom " + to_string(iv.u) + " is not a poset element");
  if (!host.contains(iv.v))
    fail(Errc::MalformedInterval, "interval top " + to_string(iv.v) + " is not a poset element");
  std::vector<int> ids;
  collect_interval_ids(host, iv.u, iv.v, ids);
  std::vector<Monomial> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(host.element(id));
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

int IntervalPartition::min_top_degree() const {
  if (intervals.empty()) fail(Errc::Range, "partition has no intervals");
  int best = host.n() + 1;
  for (const Interval& iv : intervals) best = std::min(best, iv.v.degree());
  return best;
}

PartitionDiagnostics validate_partition(const IntervalPartition& p) {
  PartitionDiagnostics diag;
  std::vector<int> cover(static_cast<std::size_t>(p.host.size()), 0);
  std::vector<int> ids;
  for (const Interval& iv : p.intervals) {
    if (iv.u.n() != p.host.n() || iv.v.n() != p.host.n()) {
      diag.problem = "interval [" + to_string(iv.u) + ", " + to_string(iv.v) +
                     "] lives in a different ambient ring";
      return diag;
    }
    if (!divides(iv.u, iv.v)) {
      diag.problem = "interval bottom " + to_string(iv.u) + " does not divide top " + to_string(iv.v);
      return diag;
    }
    if (!p.host.contains(iv.u) || !p.host.contains(iv.v)) {
      diag.problem = "interval [" + to_string(iv.u) + ", " + to_string(iv.v) +
                     "] has an endpoint outside the poset";
      diag.witness = p.host.contains(iv.u) ? iv.v : iv.u;
      return diag;
    }
    collect_interval_ids(p.host, iv.u, iv.v, ids);
    for (int id : ids) ++cover[static_cast<std::size_t>(id)];
  }
  for (int id = 0; id < p.host.size(); ++id) {
    if (cover[static_cast<std::size_t>(id)] == 0) {
      diag.problem = "element " + to_string(p.host.element(id)) + " is uncovered";
      diag.witness = p.host.element(id);
      return diag;
    }
    if (cover[static_cast<std::size_t>(id)] > 1) {
      diag.problem = "element " + to_string(p.host.element(id)) + " is covered " +
                     std::to_string(cover[static_cast<std::size_t>(id)]) + " times";
      diag.witness = p.host.element(id);
      return diag;
    }
  }
  diag.valid = true;
  return diag;
}

namespace {

// Exact cover search over the degree-<=k truncation.  Elements are
// processed in deg-lex (= id) order; the smallest uncovered element below
// degree k must start its own interval, topped at degree k.  Failed cover
// states are memoized up to the configured budget.
struct DecideSearch {
  const StanleyPoset& poset;
  int k;
  std::size_t memo_budget;
  int first_k_id;  // ids below this have degree < k
  CoverSet covered;
  std::vector<Interval> chosen;
  std::unordered_set<CoverSet, CoverSetHash> failed;
  std::vector<int> scratch;

  DecideSearch(const StanleyPoset& p, int k_, std::size_t budget)
      : poset(p), k(k_), memo_budget(budget), first_k_id(0), covered(p.size()) {
    while (first_k_id < poset.size() && poset.element(first_k_id).degree() < k) ++first_k_id;
  }

  bool run() {
    int u = next_uncovered_low();
    if (u < 0) return true;
    if (failed.count(covered)) return false;
    const Monomial& bottom = poset.element(u);
    for (const Monomial& top : poset.layer(k)) {
      if ((bottom.mask() & ~top.mask()) != 0) continue;
      collect_interval_ids(poset, bottom, top, scratch);
      bool free = true;
      for (int id : scratch)
        if (covered.test(id)) {
          free = false;
          break;
        }
      if (!free) continue;
      std::vector<int> ids = scratch;
      for (int id : ids) covered.set(id);
      chosen.push_back(Interval{bottom, top});
      if (run()) return true;
      chosen.pop_back();
      for (int id : ids) covered.reset(id);
    }
    if (failed.size() < memo_budget) failed.insert(covered);
    return false;
  }

  int next_uncovered_low() const {
    for (int id = 0; id < first_k_id; ++id)
      if (!covered.test(id)) return id;
    return -1;
  }
};

}  // namespace

std::optional<IntervalPartition> sdepth_decide(const IdealPair& pair, int k,
                                               const SdepthOptions& opts) {
  if (k < pair.d || k > pair.n())
    fail(Errc::Range, "decision degree " + std::to_string(k) + " outside [d, n] = [" +
                          std::to_string(pair.d) + ", " + std::to_string(pair.n()) + "]");
  StanleyPoset trunc = build_poset(pair, k);
  DecideSearch search(trunc, k, opts.memo_budget);
  if (!search.run()) return std::nullopt;
  IntervalPartition part{trunc, std::move(search.chosen)};
  for (const Monomial& m : trunc.elements()) {
    bool inside = false;
    for (const Interval& iv : part.intervals)
      if (divides(iv.u, m) && divides(m, iv.v)) {
        inside = true;
        break;
      }
    if (!inside) part.intervals.push_back(Interval{m, m});
  }
  PartitionDiagnostics diag = validate_partition(part);
  if (!diag.valid) fail(Errc::Internal, "decision produced an invalid partition: " + diag.problem);
  return part;
}

SdepthCertificate sdepth(const IdealPair& pair, const SdepthOptions& opts) {
  SdepthCertificate cert;
  auto base = sdepth_decide(pair, pair.d, opts);
  if (!base)
    fail(Errc::Internal, "degree-d truncation admits no partition; poset layering is broken");
  cert.value = pair.d;
  cert.witness = std::move(*base);
  for (int k = pair.d + 1; k <= pair.n(); ++k) {
    if (opts.bound_shortcut && k == pair.d + 2) {
      BoundCounts b = degree_bound_counts(pair);
      if (b.any_fires()) {
        cert.refutation = "degree-bound";
        return cert;
      }
    }
    auto attempt = sdepth_decide(pair, k, opts);
    if (!attempt) {
      cert.refutation = "search-exhausted";
      return cert;
    }
    cert.value = k;
    cert.witness = std::move(*attempt);
  }
  cert.refutation = "max-degree";
  return cert;
}

namespace {

// Plain depth-first enumeration of every interval partition of the full
// poset, tracking max over partitions of min top degree.  Kept free of
// truncation logic so it can arbitrate the solver.
struct OracleSearch {
  const StanleyPoset& poset;
  CoverSet covered;
  int best = -1;
  std::vector<int> scratch;

  explicit OracleSearch(const StanleyPoset& p) : poset(p), covered(p.size()) {}

  void run(int min_top_so_far) {
    int u = -1;
    for (int id = 0; id < poset.size(); ++id)
      if (!covered.test(id)) {
        u = id;
        break;
      }
    if (u < 0) {
      best = std::max(best, min_top_so_far);
      return;
    }
    const Monomial& bottom = poset.element(u);
    for (const Monomial& top : poset.elements()) {
      if ((bottom.mask() & ~top.mask()) != 0) continue;
      collect_interval_ids(poset, bottom, top, scratch);
      bool free = true;
      for (int id : scratch)
        if (covered.test(id)) {
          free = false;
          break;
        }
      if (!free) continue;
      std::vector<int> ids = scratch;
      for (int id : ids) covered.set(id);
      run(std::min(min_top_so_far, top.degree()));
      for (int id : ids) covered.reset(id);
    }
  }
};

}  // namespace

int sdepth_oracle(const IdealPair& pair) {
  StanleyPoset full = build_poset(pair, pair.n());
  if (full.size() > kOracleMaxPoset)
    fail(Errc::Capacity, "oracle limited to " + std::to_string(kOracleMaxPoset) +
                             " poset elements, got " + std::to_string(full.size()));
  OracleSearch search(full);
  search.run(full.n() + 1);
  if (search.best < 0) fail(Errc::Internal, "oracle found no partition, singleton cover missing");
  return search.best;
}

IntervalPartition lift_to_full(const IntervalPartition& truncated, const StanleyPoset& full_host) {
  IntervalPartition out{full_host, truncated.intervals};
  std::vector<int> cover(static_cast<std::size_t>(full_host.size()), 0);
  std::vector<int> ids;
  for (const Interval& iv : out.intervals) {
    if (!full_host.contains(iv.u) || !full_host.contains(iv.v))
      fail(Errc::SwapInvalid, "truncated partition uses " + to_string(iv.u) + ".." +
                                  to_string(iv.v) + " which the full host lacks");
    collect_interval_ids(full_host, iv.u, iv.v, ids);
    for (int id : ids) ++cover[static_cast<std::size_t>(id)];
  }
  for (int id = 0; id < full_host.size(); ++id)
    if (cover[static_cast<std::size_t>(id)] == 0)
      out.intervals.push_back(Interval{full_host.element(id), full_host.element(id)});
  PartitionDiagnostics diag = validate_partition(out);
  if (!diag.valid) fail(Errc::SwapInvalid, "lift produced an invalid partition: " + diag.problem);
  return out;
}

}  // namespace sqfd
