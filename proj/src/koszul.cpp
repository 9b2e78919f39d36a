#include "sqfd/koszul.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <unordered_map>

namespace sqfd {

Multidegree::Multidegree(std::vector<int> exps) : exps_(std::move(exps)) {
  if (exps_.empty() || exps_.size() > static_cast<std::size_t>(kMaxVars))
    fail(Errc::Range, "multidegree length must lie in 1.." + std::to_string(kMaxVars));
  for (int e : exps_)
    if (e < 0) fail(Errc::Range, "multidegree entries must be nonnegative");
}

Multidegree Multidegree::squarefree(const Monomial& m) {
  std::vector<int> exps(static_cast<std::size_t>(m.n()), 0);
  for (int v : m.indices()) exps[static_cast<std::size_t>(v) - 1] = 1;
  return Multidegree(std::move(exps));
}

int Multidegree::exp(int var) const {
  if (var < 1 || var > n())
    fail(Errc::BadIndex, "variable index " + std::to_string(var) + " outside 1.." +
                             std::to_string(n()));
  return exps_[static_cast<std::size_t>(var) - 1];
}

int Multidegree::total() const {
  int sum = 0;
  for (int e : exps_) sum += e;
  return sum;
}

std::uint64_t Multidegree::support() const {
  std::uint64_t mask = 0;
  for (int i = 0; i < n(); ++i)
    if (exps_[static_cast<std::size_t>(i)] > 0) mask |= 1ull << i;
  return mask;
}

std::uint64_t Multidegree::ones() const {
  std::uint64_t mask = 0;
  for (int i = 0; i < n(); ++i)
    if (exps_[static_cast<std::size_t>(i)] == 1) mask |= 1ull << i;
  return mask;
}

bool Multidegree::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::string to_string(const Multidegree& a) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < a.n(); ++i) {
    if (i) os << ',';
    os << a.exps()[static_cast<std::size_t>(i)];
  }
  os << ')';
  return os.str();
}

namespace {

bool support_member(const MonomialIdeal& ideal, std::uint64_t support) {
  for (const Monomial& g : ideal.gens())
    if ((g.mask() & ~support) == 0) return true;
  return false;
}

}  // namespace

KoszulStrand build_strand(const IdealPair& pair, const Multidegree& a, BasisOrder order) {
  if (a.n() != pair.n())
    fail(Errc::AmbientMismatch, "multidegree over n=" + std::to_string(a.n()) +
                                    " against a quotient over n=" + std::to_string(pair.n()));
  const std::uint64_t supp = a.support();
  const std::uint64_t ones = a.ones();
  const int levels = std::popcount(supp);
  const int n = pair.n();

  auto in_quotient = [&](std::uint64_t s) {
    return support_member(pair.I, s) && !support_member(pair.J, s);
  };

  KoszulStrand strand{a, {}, {}};
  strand.bases.assign(static_cast<std::size_t>(levels) + 1, {});
  // all subsets of the support, bucketed by cardinality
  std::uint64_t sigma = 0;
  while (true) {
    std::uint64_t residual_supp = supp ^ (sigma & ones);
    if (in_quotient(residual_supp))
      strand.bases[static_cast<std::size_t>(std::popcount(sigma))].push_back(sigma);
    if (sigma == supp) break;
    sigma = (sigma - supp) & supp;
  }
  for (auto& level : strand.bases) {
    std::sort(level.begin(), level.end(), [&](std::uint64_t x, std::uint64_t y) {
      return lex_less(Monomial::from_mask(x, n), Monomial::from_mask(y, n));
    });
    if (order == BasisOrder::RevLex) std::reverse(level.begin(), level.end());
  }

  strand.diffs.reserve(static_cast<std::size_t>(levels) + 1);
  std::unordered_map<std::uint64_t, int> below;  // index within level i-1
  for (int i = 0; i <= levels; ++i) {
    const auto& level = strand.bases[static_cast<std::size_t>(i)];
    IntMatrix d(i == 0 ? 0 : static_cast<int>(strand.bases[static_cast<std::size_t>(i) - 1].size()),
                static_cast<int>(level.size()));
    if (i > 0) {
      for (int col = 0; col < static_cast<int>(level.size()); ++col) {
        std::uint64_t s = level[static_cast<std::size_t>(col)];
        for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
          int bit = std::countr_zero(rest);
          auto it = below.find(s & ~(1ull << bit));
          if (it == below.end()) continue;  // image lands in J, hence zero
          int smaller = std::popcount(s & ((1ull << bit) - 1));
          d.at(it->second, col) = (smaller % 2 == 0) ? 1 : -1;
        }
      }
    }
    strand.diffs.push_back(std::move(d));
    below.clear();
    for (int idx = 0; idx < static_cast<int>(level.size()); ++idx)
      below.emplace(level[static_cast<std::size_t>(idx)], idx);
  }

  for (int i = 2; i <= levels; ++i)
    if (!multiply(strand.diffs[static_cast<std::size_t>(i) - 1],
                  strand.diffs[static_cast<std::size_t>(i)])
             .is_zero())
      fail(Errc::Internal, "Koszul differentials fail to compose to zero at level " +
                               std::to_string(i));
  return strand;
}

std::vector<int> strand_homology_dims(const KoszulStrand& strand, const FieldSpec& field) {
  const int levels = strand.levels();
  if (static_cast<int>(strand.diffs.size()) != levels + 1)
    fail(Errc::Internal, "strand has mismatched level and differential counts");
  std::vector<int> dim(static_cast<std::size_t>(levels) + 1);
  for (int i = 0; i <= levels; ++i)
    dim[static_cast<std::size_t>(i)] = static_cast<int>(strand.bases[static_cast<std::size_t>(i)].size());
  for (int i = 1; i <= levels; ++i) {
    const IntMatrix& d = strand.diffs[static_cast<std::size_t>(i)];
    if (d.rows != dim[static_cast<std::size_t>(i) - 1] || d.cols != dim[static_cast<std::size_t>(i)])
      fail(Errc::Internal, "differential " + std::to_string(i) + " has the wrong shape");
  }

  std::vector<int> rk(static_cast<std::size_t>(levels) + 2, 0);
  for (int i = 1; i <= levels; ++i)
    rk[static_cast<std::size_t>(i)] = rank(strand.diffs[static_cast<std::size_t>(i)], field);

  std::vector<int> h(static_cast<std::size_t>(levels) + 1);
  for (int i = 0; i <= levels; ++i) {
    h[static_cast<std::size_t>(i)] =
        dim[static_cast<std::size_t>(i)] - rk[static_cast<std::size_t>(i)] - rk[static_cast<std::size_t>(i) + 1];
    if (h[static_cast<std::size_t>(i)] < 0)
      fail(Errc::Internal, "negative homology dimension at level " + std::to_string(i));
  }

  long long chain_euler = 0, homology_euler = 0;
  for (int i = 0; i <= levels; ++i) {
    long long sign = (i % 2 == 0) ? 1 : -1;
    chain_euler += sign * dim[static_cast<std::size_t>(i)];
    homology_euler += sign * h[static_cast<std::size_t>(i)];
  }
  if (chain_euler != homology_euler)
    fail(Errc::Internal, "alternating sums of chain and homology dimensions disagree");
  return h;
}

DepthResult depth(const IdealPair& pair, const FieldSpec& field) {
  const int n = pair.n();
  if (n > kDepthMaxVars)
    fail(Errc::Capacity, "depth scan covers 2^n strands and is capped at n = " +
                             std::to_string(kDepthMaxVars) + ", got n = " + std::to_string(n));

  std::vector<Monomial> degrees;
  degrees.reserve(std::size_t(1) << n);
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
    degrees.push_back(Monomial::from_mask(mask, n));
  std::sort(degrees.begin(), degrees.end(), DegLexLess{});

  int pd = -1;
  std::optional<Multidegree> witness;
  for (const Monomial& m : degrees) {
    KoszulStrand strand = build_strand(pair, Multidegree::squarefree(m));
    std::vector<int> h = strand_homology_dims(strand, field);
    for (int i = strand.levels(); i > pd; --i)
      if (h[static_cast<std::size_t>(i)] > 0) {
        pd = i;
        witness = strand.a;
        break;
      }
  }
  if (pd < 0 || !witness)
    fail(Errc::Internal, "a nonzero quotient must have nonzero homology at level zero");
  return DepthResult{n - pd, pd, *witness};
}

std::optional<Multidegree> depth_oracle_sample(const IdealPair& pair, const FieldSpec& field,
                                               int trials, std::uint64_t seed) {
  const int n = pair.n();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<int> exps(static_cast<std::size_t>(n));
    int fuse = 0;
    for (;;) {
      if (++fuse > 100000)
        fail(Errc::Internal, "could not sample a usable non-squarefree multidegree");
      bool has_two = false;
      std::uint64_t supp = 0;
      for (int i = 0; i < n; ++i) {
        exps[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 3);
        if (exps[static_cast<std::size_t>(i)] == 2) has_two = true;
        if (exps[static_cast<std::size_t>(i)] > 0) supp |= 1ull << i;
      }
      if (has_two && support_member(pair.I, supp)) break;
    }
    Multidegree a(exps);
    KoszulStrand strand = build_strand(pair, a);
    std::vector<int> h = strand_homology_dims(strand, field);
    for (int v : h)
      if (v != 0) return a;
  }
  return std::nullopt;
}

}  // namespace sqfd
