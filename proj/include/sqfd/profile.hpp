#pragma once

// Numerical classification of a quotient I/J around its minimal degree d:
// the degree-d count r, the layers B (degree d+1) and C (degree d+2) of
// I\J, the high-degree generators E, the bound conditions implying
// sdepth <= d+1, the r=1 subquotients used by the partition surgery, and
// the covering condition suspected to force depth <= d+1.

#include <optional>
#include <vector>

#include "sqfd/koszul.hpp"
#include "sqfd/monomial.hpp"
#include "sqfd/poset.hpp"

namespace sqfd {

struct InstanceProfile {
  int d = 0;
  /// The unique degree-d monomial of I, present exactly when r = 1.
  std::optional<Monomial> f;
  /// Minimal generators of I of degree >= d+1, in deg-lex order.
  std::vector<Monomial> E;
  /// Degree-(d+1) monomials of I\J, in lex order.
  std::vector<Monomial> B;
  /// Degree-(d+2) monomials of I\J, in lex order.
  std::vector<Monomial> C;
  long long r = 0;
  long long s = 0;
  long long q = 0;
  bool s_gt_r_plus_q = false;
  bool r_gt_q = false;
  bool s_lt_2r = false;
  bool s_eq_q_plus_1 = false;
  /// True when r = 1 and every element of C is divisible by f or by some
  /// member of B.
  bool c_in_fb = false;
};

InstanceProfile classify(const IdealPair& pair);

struct BoundVerdict {
  /// The three conditions read r, s, q off the generators' neighborhood,
  /// which matches their intended meaning only when every generator of I
  /// has degree d or d+1.
  bool applicable = false;
  bool s_gt_r_plus_q = false;
  bool r_gt_q = false;
  bool s_lt_2r = false;

  bool any_fires() const { return applicable && (s_gt_r_plus_q || r_gt_q || s_lt_2r); }
};

/// Which of the counting conditions (s > r+q, r > q, s < 2r) fire; each
/// firing condition forces sdepth <= d+1.
BoundVerdict bound_conditions(const InstanceProfile& profile, const IdealPair& pair);

/// The pair (B \ {f*x_var}) / ((B \ {f*x_var}) ∩ J).  Requires r = 1 and
/// f*x_var in B.
IdealPair subquotient_In(const IdealPair& pair, const InstanceProfile& profile, int var);

/// The pair (f, E \ {b}) / ((f, E \ {b}) ∩ J).  Requires r = 1 and b in E.
IdealPair subquotient_Ib(const IdealPair& pair, const InstanceProfile& profile, const Monomial& b);

struct TheoremVerdict {
  /// r = 1, s != q+1, and sdepth = d+1.
  bool hypotheses_hold = false;
  /// depth <= d+1; must be true whenever the hypotheses hold.
  bool conclusion_holds = false;
  int sdepth_value = 0;
  int depth_value = 0;
  InstanceProfile profile;
};

TheoremVerdict theorem_check(const IdealPair& pair,
                             const FieldSpec& field = FieldSpec::rationals());

/// True when every c in C lies in (f) ∩ (a) for some a in E, or in
/// (a) ∩ (a') for distinct a, a' in E.  Requires r = 1.
bool c_condition(const InstanceProfile& profile);

}  // namespace sqfd
