#include "sqfd/profile.hpp"

#include <algorithm>

namespace sqfd {

InstanceProfile classify(const IdealPair& pair) {
  InstanceProfile p;
  p.d = pair.d;
  StanleyPoset poset = build_poset(pair, std::min(pair.n(), pair.d + 2));
  auto layer_b = poset.layer(pair.d + 1);
  auto layer_c = poset.layer(pair.d + 2);
  p.B.assign(layer_b.begin(), layer_b.end());
  p.C.assign(layer_c.begin(), layer_c.end());
  p.r = poset.layer_size(pair.d);
  p.s = static_cast<long long>(p.B.size());
  p.q = static_cast<long long>(p.C.size());
  if (p.r == 1) p.f = poset.layer(pair.d)[0];
  for (const Monomial& g : pair.I.gens())
    if (g.degree() >= pair.d + 1) p.E.push_back(g);

  p.s_gt_r_plus_q = p.s > p.r + p.q;
  p.r_gt_q = p.r > p.q;
  p.s_lt_2r = p.s < 2 * p.r;
  p.s_eq_q_plus_1 = p.s == p.q + 1;
  if (p.f) {
    p.c_in_fb = true;
    for (const Monomial& c : p.C) {
      bool covered = divides(*p.f, c);
      for (std::size_t i = 0; !covered && i < p.B.size(); ++i) covered = divides(p.B[i], c);
      if (!covered) {
        p.c_in_fb = false;
        break;
      }
    }
  }
  return p;
}

BoundVerdict bound_conditions(const InstanceProfile& profile, const IdealPair& pair) {
  BoundVerdict v;
  v.applicable = true;
  for (const Monomial& g : pair.I.gens())
    if (g.degree() > pair.d + 1) {
      v.applicable = false;
      break;
    }
  v.s_gt_r_plus_q = profile.s_gt_r_plus_q;
  v.r_gt_q = profile.r_gt_q;
  v.s_lt_2r = profile.s_lt_2r;
  return v;
}

IdealPair subquotient_In(const IdealPair& pair, const InstanceProfile& profile, int var) {
  if (!profile.f)
    fail(Errc::InputContract, "the B-subquotient needs r = 1, got r = " +
                                  std::to_string(profile.r));
  if (var < 1 || var > pair.n() || profile.f->contains(var))
    fail(Errc::InputContract, "x" + std::to_string(var) + " does not extend " +
                                  to_string(*profile.f) + " to a quotient monomial");
  Monomial fx = profile.f->with(var);
  std::vector<Monomial> gens;
  bool dropped = false;
  for (const Monomial& b : profile.B) {
    if (b == fx) {
      dropped = true;
      continue;
    }
    gens.push_back(b);
  }
  if (!dropped)
    fail(Errc::InputContract, to_string(fx) + " is not a degree-" + std::to_string(pair.d + 1) +
                                  " monomial of the quotient");
  if (gens.empty())
    fail(Errc::InputContract, "removing " + to_string(fx) + " leaves no generators");
  MonomialIdeal In = minimalize(gens, pair.n());
  return validate_pair(In, intersect(In, pair.J));
}

IdealPair subquotient_Ib(const IdealPair& pair, const InstanceProfile& profile, const Monomial& b) {
  if (!profile.f)
    fail(Errc::InputContract, "the E-subquotient needs r = 1, got r = " +
                                  std::to_string(profile.r));
  if (std::find(profile.E.begin(), profile.E.end(), b) == profile.E.end())
    fail(Errc::InputContract, to_string(b) + " is not a high-degree generator of I");
  std::vector<Monomial> gens{*profile.f};
  for (const Monomial& e : profile.E)
    if (e != b) gens.push_back(e);
  MonomialIdeal Ib = minimalize(gens, pair.n());
  return validate_pair(Ib, intersect(Ib, pair.J));
}

TheoremVerdict theorem_check(const IdealPair& pair, const FieldSpec& field) {
  TheoremVerdict v;
  v.profile = classify(pair);
  v.sdepth_value = sdepth(pair).value;
  v.depth_value = depth(pair, field).depth;
  v.hypotheses_hold =
      v.profile.r == 1 && !v.profile.s_eq_q_plus_1 && v.sdepth_value == pair.d + 1;
  v.conclusion_holds = v.depth_value <= pair.d + 1;
  return v;
}

bool c_condition(const InstanceProfile& profile) {
  if (!profile.f)
    fail(Errc::NotApplicable, "the covering condition is defined for r = 1, got r = " +
                                  std::to_string(profile.r));
  const Monomial& f = *profile.f;
  for (const Monomial& c : profile.C) {
    bool covered = false;
    if (divides(f, c)) {
      for (const Monomial& a : profile.E)
        if (divides(a, c)) {
          covered = true;
          break;
        }
    }
    for (std::size_t i = 0; !covered && i < profile.E.size(); ++i) {
      if (!divides(profile.E[i], c)) continue;
      for (std::size_t j = i + 1; j < profile.E.size() && !covered; ++j)
        covered = divides(profile.E[j], c);
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace sqfd
