#include "sqfd/instances.hpp"

#include <algorithm>
#include <bit>

namespace sqfd {

namespace {

Monomial m(std::initializer_list<int> vars, int n) { return Monomial(vars, n); }

std::vector<NamedInstance> build_named() {
  std::vector<NamedInstance> out;
  out.push_back({"example1",
                 validate_pair(MonomialIdeal(5, {m({1, 2}, 5), m({3, 4, 5}, 5)}),
                               MonomialIdeal(5, {m({1, 2, 3, 5}, 5), m({1, 2, 4, 5}, 5)}))});
  out.push_back({"remark",
                 validate_pair(MonomialIdeal(5, {m({1, 2}, 5), m({3, 4, 5}, 5)}),
                               MonomialIdeal(5, {m({1, 2, 4, 5}, 5), m({2, 3, 4, 5}, 5)}))});
  out.push_back(
      {"example3",
       validate_pair(
           MonomialIdeal(5, {m({1}, 5), m({2, 3}, 5), m({2, 4}, 5), m({2, 5}, 5), m({3, 4}, 5)}),
           MonomialIdeal(
               5, {m({1, 3, 5}, 5), m({1, 4, 5}, 5), m({3, 4, 5}, 5), m({1, 2, 3, 4}, 5)}))});
  // A quotient whose depth-preserving rewrite walks a full alternating
  // chain and stops through the two-special-sources exit.
  out.push_back(
      {"chain3",
       validate_pair(MonomialIdeal(5, {m({3}, 5), m({1, 2}, 5), m({1, 4}, 5), m({2, 5}, 5)}),
                     MonomialIdeal(5, {m({1, 2, 5}, 5), m({1, 3, 5}, 5), m({1, 4, 5}, 5)}))});
  return out;
}

/// All squarefree monomials of the given degree, in mask order.
std::vector<Monomial> degree_slice(int n, int degree) {
  std::vector<Monomial> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
    if (std::popcount(mask) == degree) out.push_back(Monomial::from_mask(mask, n));
  return out;
}

void check_gen_params(int n, int d) {
  if (n < 1 || n > 20) fail(Errc::InputContract, "generators support 1 <= n <= 20");
  if (d < 1 || d + 2 > n)
    fail(Errc::InputContract, "degree " + std::to_string(d) + " leaves no room below n = " +
                                  std::to_string(n));
}

}  // namespace

const std::vector<NamedInstance>& named_instances() {
  static const std::vector<NamedInstance> table = build_named();
  return table;
}

IdealPair named_instance(const std::string& name) {
  for (const NamedInstance& ni : named_instances())
    if (ni.name == name) return ni.pair;
  fail(Errc::NotApplicable, "no bundled instance is called '" + name + "'");
}

IdealPair gen_r1(Rng& rng, int n, int d) {
  check_gen_params(n, d);
  for (;;) {
    const std::vector<Monomial> base = degree_slice(n, d);
    const Monomial f = base[rng.draw(base.size())];

    std::vector<Monomial> pool;
    for (const Monomial& e : degree_slice(n, d + 1))
      if (!divides(f, e)) pool.push_back(e);
    std::vector<Monomial> gens{f};
    const std::size_t want = 1 + rng.draw(std::min<std::size_t>(pool.size(), 4));
    std::size_t taken = 0;
    for (const Monomial& e : pool) {
      if (taken < want && rng.draw(pool.size()) < want) {
        gens.push_back(e);
        ++taken;
      }
    }
    if (taken == 0) gens.push_back(pool[rng.draw(pool.size())]);
    MonomialIdeal I = minimalize(gens, n);

    std::vector<Monomial> jgens;
    for (const Monomial& c : degree_slice(n, d + 2))
      if (ideal_contains(I, c) && rng.draw(3) == 0) jgens.push_back(c);
    MonomialIdeal J = jgens.empty() ? MonomialIdeal::zero(n) : minimalize(jgens, n);
    try {
      return validate_pair(I, J);
    } catch (const Error&) {
      continue;
    }
  }
}

IdealPair gen_bound(Rng& rng, int n, int d) {
  check_gen_params(n, d);
  for (;;) {
    const std::vector<Monomial> base = degree_slice(n, d);
    std::vector<Monomial> gens;
    const std::size_t r = 1 + rng.draw(std::min<std::size_t>(base.size(), 3));
    std::size_t taken = 0;
    for (const Monomial& g : base)
      if (taken < r && rng.draw(base.size()) < r) {
        gens.push_back(g);
        ++taken;
      }
    if (taken == 0) gens.push_back(base[rng.draw(base.size())]);
    for (const Monomial& e : degree_slice(n, d + 1)) {
      bool covered = false;
      for (const Monomial& g : gens)
        if (g.degree() == d && divides(g, e)) {
          covered = true;
          break;
        }
      if (!covered && rng.draw(6) == 0) gens.push_back(e);
    }
    MonomialIdeal I = minimalize(gens, n);

    std::vector<Monomial> jgens;
    for (const Monomial& c : degree_slice(n, d + 1))
      if (ideal_contains(I, c) && rng.draw(8) == 0) jgens.push_back(c);
    for (const Monomial& c : degree_slice(n, d + 2))
      if (ideal_contains(I, c) && rng.draw(4) == 0) jgens.push_back(c);
    MonomialIdeal J = jgens.empty() ? MonomialIdeal::zero(n) : minimalize(jgens, n);
    try {
      return validate_pair(I, J);
    } catch (const Error&) {
      continue;
    }
  }
}

}  // namespace sqfd
