#include "sqfd/surgery.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace sqfd {

void AssignmentMap::add(const Monomial& from, const Monomial& to) {
  if (!h_.emplace(from.mask(), to).second)
    fail(Errc::InputContract, to_string(from) + " already has an assigned top");
  if (!g_.emplace(to.mask(), from).second)
    fail(Errc::InputContract, to_string(to) + " is already the top of another interval");
}

void AssignmentMap::add_special(const Monomial& f, const Monomial& top) {
  if (special_) fail(Errc::InputContract, "two intervals start at the base degree");
  if (!divides(f, top) || top.degree() != f.degree() + 2)
    fail(Errc::InputContract,
         "[" + to_string(f) + ", " + to_string(top) + "] does not rise exactly two steps");
  std::vector<int> extra;
  for (int idx : top.indices())
    if (!f.contains(idx)) extra.push_back(idx);
  const Monomial lo = f.with(extra[0]);
  const Monomial hi = f.with(extra[1]);
  if (!h_.emplace(lo.mask(), top).second)
    fail(Errc::InputContract, to_string(lo) + " already has an assigned top");
  if (!h_.emplace(hi.mask(), top).second)
    fail(Errc::InputContract, to_string(hi) + " already has an assigned top");
  if (!g_.emplace(top.mask(), lo).second)
    fail(Errc::InputContract, to_string(top) + " is already the top of another interval");
  special_ = SpecialAssignment{f, top, extra[0], extra[1]};
}

std::optional<Monomial> AssignmentMap::h(const Monomial& m) const {
  auto it = h_.find(m.mask());
  if (it == h_.end()) return std::nullopt;
  return it->second;
}

std::optional<Monomial> AssignmentMap::g(const Monomial& m) const {
  auto it = g_.find(m.mask());
  if (it == g_.end()) return std::nullopt;
  return it->second;
}

bool AssignmentMap::in_image_h(const Monomial& m) const { return g_.count(m.mask()) != 0; }

bool AssignmentMap::is_special_source(const Monomial& m) const {
  if (!special_) return false;
  return m == special_->f.with(special_->i) || m == special_->f.with(special_->j);
}

AssignmentMap read_assignment_map(const IntervalPartition& p, int base_degree) {
  AssignmentMap map;
  const Interval* special = nullptr;
  for (const Interval& iv : p.intervals) {
    if (iv.u == iv.v) continue;  // singletons carry no assignment
    const std::string name = "[" + to_string(iv.u) + ", " + to_string(iv.v) + "]";
    if (!divides(iv.u, iv.v)) fail(Errc::MalformedInterval, name + " is not an interval");
    if (iv.v.degree() != base_degree + 2)
      fail(Errc::NormalizationRequired, name + " tops out at degree " +
                                            std::to_string(iv.v.degree()) + " instead of " +
                                            std::to_string(base_degree + 2));
    const int du = iv.u.degree();
    if (du == base_degree + 1) {
      map.add(iv.u, iv.v);
    } else if (du == base_degree) {
      if (special == nullptr || lex_less(iv.v, special->v)) special = &iv;
    } else {
      fail(Errc::InputContract, name + " starts below the base degree");
    }
  }
  if (special != nullptr) map.add_special(special->u, special->v);
  return map;
}

ChainState alternating_chain(const AssignmentMap& old_map, const AssignmentMap& fresh,
                             const Monomial& b1, const ChainTargets& targets) {
  ChainState st;
  std::set<std::uint64_t> seen;
  Monomial a = b1;
  int first_special = -1;
  const std::size_t cap = fresh.size() + 4;
  for (std::size_t k = 0;; ++k) {
    if (k > cap)
      fail(Errc::InputContract,
           "the alternating walk did not stop within " + std::to_string(cap) + " steps");
    if (!seen.insert(a.mask()).second)
      fail(Errc::InputContract, "the alternating walk revisited " + to_string(a));
    st.bottoms.push_back(a);
    if (a == targets.b2) {
      if (!targets.cbar)
        fail(Errc::InputContract,
             "the walk reached the removed generator but no spare top was supplied");
      st.tops.push_back(*targets.cbar);
      st.stop_case = 1;
      break;
    }
    const bool special = fresh.is_special_source(a);
    if (special && first_special >= 0) {
      st.stop_case = 3;
      st.fixed_u = first_special;
      break;
    }
    auto c = fresh.h(a);
    if (!c) fail(Errc::InputContract, "the fresh map does not cover " + to_string(a));
    if (special) first_special = static_cast<int>(k);
    st.tops.push_back(*c);
    if (!old_map.in_image_h(*c)) {
      st.stop_case = 2;
      break;
    }
    a = *old_map.g(*c);
  }
  if (st.stop_case != 2) {
    // The walk must invert cleanly: h1 matches a_1..a_e with c_0..c_{e-1}
    // one-to-one.
    for (std::size_t p = 1; p < st.bottoms.size(); ++p) {
      auto t = old_map.h(st.bottoms[p]);
      if (!t || !(*t == st.tops[p - 1]))
        fail(Errc::InputContract,
             "the walk is not inverse-consistent at " + to_string(st.bottoms[p]));
    }
    std::set<std::uint64_t> tops_seen;
    for (const Monomial& t : st.tops)
      if (!tops_seen.insert(t.mask()).second)
        fail(Errc::InputContract, "the walk assigns " + to_string(t) + " twice");
  }
  return st;
}

namespace {

std::vector<Interval> remove_intervals(std::vector<Interval> kept, std::span<const Interval> out) {
  for (const Interval& o : out) {
    auto it = std::find(kept.begin(), kept.end(), o);
    if (it == kept.end())
      fail(Errc::SwapInvalid, "interval [" + to_string(o.u) + ", " + to_string(o.v) +
                                  "] is not part of the partition");
    kept.erase(it);
  }
  return kept;
}

std::string diagnose(const PartitionDiagnostics& diag) {
  std::string msg = diag.problem;
  if (diag.witness) msg += " (at " + to_string(*diag.witness) + ")";
  return msg;
}

/// Appends every uncovered element of the host as a singleton interval,
/// refusing elements below min_singleton_degree, then validates.
IntervalPartition complete_and_validate(const StanleyPoset& host, std::vector<Interval> intervals,
                                        int min_singleton_degree) {
  std::vector<char> covered(static_cast<std::size_t>(host.size()), 0);
  for (const Interval& iv : intervals) {
    try {
      for (const Monomial& m : interval_elements(iv, host))
        covered[static_cast<std::size_t>(host.id_of(m))] = 1;
    } catch (const Error& e) {
      if (e.code() == Errc::MalformedInterval)
        fail(Errc::Assembly, std::string("the assembly produced a bad interval: ") + e.what());
      throw;
    }
  }
  for (int id = 0; id < host.size(); ++id) {
    if (covered[static_cast<std::size_t>(id)]) continue;
    const Monomial& m = host.element(id);
    if (m.degree() < min_singleton_degree)
      fail(Errc::Assembly, to_string(m) + " of degree " + std::to_string(m.degree()) +
                               " is left uncovered by the assembly");
    intervals.push_back({m, m});
  }
  IntervalPartition p{host, std::move(intervals)};
  PartitionDiagnostics diag = validate_partition(p);
  if (!diag.valid) fail(Errc::Assembly, "the assembled partition is invalid: " + diagnose(diag));
  return p;
}

const Interval* interval_with_bottom(const IntervalPartition& p, const Monomial& u) {
  for (const Interval& iv : p.intervals)
    if (iv.u == u) return &iv;
  return nullptr;
}

const Interval* interval_covering(const IntervalPartition& p, const Monomial& m) {
  for (const Interval& iv : p.intervals)
    if (divides(iv.u, m) && divides(m, iv.v)) return &iv;
  return nullptr;
}

}  // namespace

IntervalPartition swap_intervals(const IntervalPartition& p, std::span<const Interval> out,
                                 std::span<const Interval> into, const StanleyPoset& new_host) {
  std::vector<Interval> kept = remove_intervals(p.intervals, out);
  kept.insert(kept.end(), into.begin(), into.end());
  IntervalPartition next{new_host, std::move(kept)};
  PartitionDiagnostics diag = validate_partition(next);
  if (!diag.valid) fail(Errc::SwapInvalid, "the swapped partition fails validation: " + diagnose(diag));
  return next;
}

IntervalPartition attach_f(const IntervalPartition& p, const Monomial& f,
                           const StanleyPoset& full_host) {
  const Interval* first = nullptr;
  for (int a = 1; a <= f.n() && first == nullptr; ++a) {
    if (f.contains(a)) continue;
    first = interval_with_bottom(p, f.with(a));
  }
  if (first == nullptr)
    fail(Errc::Assembly, "no interval starts at a variable multiple of " + to_string(f));
  std::vector<int> extra;
  for (int idx : first->v.indices())
    if (!first->u.contains(idx)) extra.push_back(idx);
  if (extra.size() != 1)
    fail(Errc::Assembly,
         "the interval at " + to_string(first->u) + " does not rise exactly one step");
  const Interval* second = interval_with_bottom(p, f.with(extra[0]));
  if (second == nullptr)
    fail(Errc::Assembly, "no interval starts at the partner " + to_string(f.with(extra[0])));
  std::vector<Interval> out{*first, *second};
  std::vector<Interval> into{{f, first->v}, {second->v, second->v}};
  try {
    return swap_intervals(p, out, into, full_host);
  } catch (const Error& e) {
    if (e.code() == Errc::SwapInvalid)
      fail(Errc::Assembly, std::string("attaching f failed: ") + e.what());
    throw;
  }
}

IntervalPartition chain_to_partition(const ChainState& state, const SurgeryContext& ctx) {
  const std::size_t len = state.bottoms.size();
  if (len == 0) fail(Errc::InputContract, "the chain is empty");
  if (state.stop_case < 1 || state.stop_case > 3)
    fail(Errc::InputContract, "the chain carries no stop case");
  const bool direct = state.stop_case == 3;
  const std::size_t want_tops = direct ? len - 1 : len;
  if (state.tops.size() != want_tops)
    fail(Errc::InputContract, "the chain pairs " + std::to_string(len) + " bottoms with " +
                                  std::to_string(state.tops.size()) + " tops");
  if (direct &&
      (state.fixed_u < 0 || static_cast<std::size_t>(state.fixed_u) >= state.tops.size()))
    fail(Errc::InputContract, "a case-3 chain needs a valid first special index");

  std::vector<Interval> out;
  for (std::size_t p = 1; p < len; ++p) {
    auto top = ctx.source_map.h(state.bottoms[p]);
    if (!top)
      fail(Errc::InputContract, "the source map does not cover " + to_string(state.bottoms[p]));
    out.push_back({state.bottoms[p], *top});
  }

  try {
    if (direct) {
      std::vector<Interval> kept = remove_intervals(ctx.source.intervals, out);
      for (std::size_t p = 0; p + 1 < len; ++p) {
        if (static_cast<int>(p) == state.fixed_u) continue;
        kept.push_back({state.bottoms[p], state.tops[p]});
      }
      kept.push_back({ctx.f, state.tops[static_cast<std::size_t>(state.fixed_u)]});
      return complete_and_validate(ctx.full_host, std::move(kept), ctx.base_degree + 2);
    }
    const Monomial last = state.tops.back();
    if (state.stop_case == 1 || ctx.source.host.id_of(last) >= 0) out.push_back({last, last});
    std::vector<Interval> kept = remove_intervals(ctx.source.intervals, out);
    for (std::size_t p = 0; p < len; ++p) kept.push_back({state.bottoms[p], state.tops[p]});
    IntervalPartition mid = complete_and_validate(ctx.b_host, std::move(kept), ctx.base_degree + 2);
    return attach_f(mid, ctx.f, ctx.full_host);
  } catch (const Error& e) {
    if (e.code() == Errc::SwapInvalid)
      fail(Errc::Assembly, std::string("chain assembly failed: ") + e.what());
    throw;
  }
}

namespace {

UpgradeReport refuse(std::string reason, std::string detail) {
  UpgradeReport r;
  r.status = UpgradeReport::Status::NotApplicable;
  r.reason = std::move(reason);
  r.detail = std::move(detail);
  return r;
}

int reason_rank(const std::string& reason) {
  if (reason == "descend-at-Ib2") return 3;
  if (reason == "no-singleton-cbar") return 2;
  if (reason == "descend-at-In") return 1;
  return 0;
}

IdealPair layer_pair(std::span<const Monomial> gens, const MonomialIdeal& J, int n) {
  MonomialIdeal I = minimalize(gens, n);
  return validate_pair(I, intersect(I, J));
}

/// Multiples of b1 of degree >= d+2 in I\J whose only degree-(d+1)
/// divisor inside the quotient is b1 itself; they are singletons in any
/// normal-form partition and leave the poset together with b1.
std::vector<Monomial> exclusive_multiples_of(const StanleyPoset& full,
                                             const InstanceProfile& prof, const Monomial& b1) {
  std::vector<Monomial> out;
  for (int deg = prof.d + 2; deg <= full.max_degree(); ++deg)
    for (const Monomial& m : full.layer(deg)) {
      if (!divides(b1, m)) continue;
      bool other = false;
      for (const Monomial& b : prof.B)
        if (!(b == b1) && divides(b, m)) {
          other = true;
          break;
        }
      if (!other) out.push_back(m);
    }
  return out;
}

UpgradeReport success(std::string route, std::string detail, IntervalPartition partition,
                      std::optional<ChainState> chain, int d) {
  if (partition.min_top_degree() < d + 2)
    fail(Errc::Internal, "an upgraded partition fell short of degree " + std::to_string(d + 2));
  UpgradeReport r;
  r.status = UpgradeReport::Status::Upgraded;
  r.route = std::move(route);
  r.detail = std::move(detail);
  r.partition = std::move(partition);
  r.chain = std::move(chain);
  return r;
}

}  // namespace

UpgradeReport upgrade_partition(const IdealPair& pair) {
  const int d = pair.d;
  const int n = pair.n();
  InstanceProfile prof = classify(pair);
  if (prof.r != 1)
    return refuse("r-not-1", "the quotient has " + std::to_string(prof.r) +
                                 " monomials of degree " + std::to_string(d) +
                                 ", the surgery needs exactly one");
  if (prof.E.empty())
    return refuse("base-case-E-empty", "I is generated by f alone, nothing can be removed");
  if (!prof.c_in_fb)
    return refuse("C-outside-f-B", "a degree-" + std::to_string(d + 2) +
                                       " monomial of the quotient escapes (f, B)");
  for (const Monomial& g : pair.I.gens())
    if (g.degree() >= d + 3 && !pair.J.contains(g))
      return refuse("C-outside-f-B", "generator " + to_string(g) + " of degree " +
                                         std::to_string(g.degree()) +
                                         " puts part of the quotient outside (f, B)");
  const Monomial f = *prof.f;
  std::vector<Monomial> squares;
  for (const Monomial& c : prof.C)
    if (divides(f, c)) squares.push_back(c);
  if (squares.empty())
    return refuse("no-f-square-in-C", "no degree-" + std::to_string(d + 2) +
                                          " monomial of the quotient is a multiple of f");

  const StanleyPoset full = build_poset(pair, n);
  const StanleyPoset b_host = build_poset(layer_pair(prof.B, pair.J, n), n);

  std::string best_reason;
  std::string best_detail;
  auto note = [&](const std::string& reason, const std::string& detail) {
    if (reason_rank(reason) > reason_rank(best_reason)) {
      best_reason = reason;
      best_detail = detail;
    }
  };

  for (const Monomial& cstar : squares) {
    std::vector<int> extra;
    for (int idx : cstar.indices())
      if (!f.contains(idx)) extra.push_back(idx);
    for (int flip = 0; flip < 2; ++flip) {
      const int i = extra[flip == 0 ? 0 : 1];
      const int j = extra[flip == 0 ? 1 : 0];
      const Monomial fxi = f.with(i);
      const Monomial fxj = f.with(j);
      const std::string config = "square " + to_string(cstar) + " keeping x" + std::to_string(i) +
                                 " and dropping x" + std::to_string(j);

      IdealPair pair_n = subquotient_In(pair, prof, j);
      auto wn = sdepth_decide(pair_n, d + 2);
      if (!wn) {
        note("descend-at-In", config + ": the reduced pair keeps sdepth " + std::to_string(d + 1) +
                                  ", the depth bound follows there by induction");
        continue;
      }
      IntervalPartition Pn = lift_to_full(*wn, build_poset(pair_n, n));

      const Interval* cover = interval_covering(Pn, cstar);
      if (cover == nullptr)
        fail(Errc::Internal, to_string(cstar) + " is uncovered in a validated partition");
      if (cover->u == cstar) {
        const Interval* anchor = interval_with_bottom(Pn, fxi);
        if (anchor == nullptr)
          fail(Errc::Internal, to_string(fxi) + " bottoms no interval in a validated partition");
        std::vector<Interval> out{*cover, *anchor};
        std::vector<Interval> into{{f, cstar}, {anchor->v, anchor->v}};
        return success("singleton-swap", config, swap_intervals(Pn, out, into, full),
                       std::nullopt, d);
      }
      if (cover->u == fxi) {
        std::vector<Interval> out{*cover};
        std::vector<Interval> into{{f, cstar}};
        return success("direct-swap", config, swap_intervals(Pn, out, into, full), std::nullopt,
                       d);
      }
      const Monomial b1 = cover->u;
      if (std::find(prof.E.begin(), prof.E.end(), b1) == prof.E.end())
        fail(Errc::Internal,
             "unexpected bottom " + to_string(b1) + " under " + to_string(cstar));

      const std::vector<Monomial> mb1 = exclusive_multiples_of(full, prof, b1);
      std::vector<Monomial> bgens;
      for (const Monomial& b : prof.B)
        if (!(b == b1)) bgens.push_back(b);
      const StanleyPoset bb1_host = build_poset(layer_pair(bgens, pair.J, n), n);
      std::vector<Interval> out{*cover};
      for (const Monomial& m : mb1) out.push_back({m, m});
      std::vector<Interval> into{{fxj, cstar}};
      const IntervalPartition Pbb1 = swap_intervals(Pn, out, into, bb1_host);
      const AssignmentMap map1 = read_assignment_map(Pbb1, d);

      std::vector<Monomial> singles;
      for (const Interval& iv : Pbb1.intervals)
        if (iv.u == iv.v && iv.u.degree() == d + 2) singles.push_back(iv.u);
      std::sort(singles.begin(), singles.end(), lex_less);

      bool any_usable = false;
      for (const Monomial& cbar : singles) {
        if (divides(b1, cbar)) {
          std::vector<Interval> kept =
              remove_intervals(Pbb1.intervals, std::vector<Interval>{{cbar, cbar}});
          kept.push_back({b1, cbar});
          IntervalPartition mid = complete_and_validate(b_host, std::move(kept), d + 2);
          return success("b1-swap", config + ", spare top " + to_string(cbar),
                         attach_f(mid, f, full), std::nullopt, d);
        }
        const Monomial* b2 = nullptr;
        for (const Monomial& e : prof.E)
          if (divides(e, cbar)) {
            b2 = &e;
            break;
          }
        if (b2 == nullptr) continue;
        any_usable = true;
        IdealPair pair_b2 = subquotient_Ib(pair, prof, *b2);
        auto w2 = sdepth_decide(pair_b2, d + 2);
        if (!w2) {
          note("descend-at-Ib2", config + ": removing " + to_string(*b2) + " keeps sdepth " +
                                     std::to_string(d + 1) +
                                     ", the depth bound follows there by induction");
          continue;
        }
        IntervalPartition P2 = lift_to_full(*w2, build_poset(pair_b2, n));
        AssignmentMap map2 = read_assignment_map(P2, d);
        if (!map2.special())
          fail(Errc::Internal, "a witness for " + to_string(*b2) + " has no interval at f");
        ChainState st = alternating_chain(map1, map2, b1, ChainTargets{*b2, cbar});
        SurgeryContext ctx{f, d, Pbb1, map1, b_host, full};
        IntervalPartition upgraded = chain_to_partition(st, ctx);
        return success("chain-case-" + std::to_string(st.stop_case),
                       config + ", removed " + to_string(b1) + ", re-entered through " +
                           to_string(*b2) + ", spare top " + to_string(cbar),
                       std::move(upgraded), st, d);
      }
      if (!any_usable)
        note("no-singleton-cbar",
             config + ": no degree-" + std::to_string(d + 2) +
                 " singleton with a generator divisor remains after the rebuild");
    }
  }
  return refuse(best_reason, best_detail);
}

}  // namespace sqfd
