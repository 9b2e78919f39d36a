#pragma once

// Shared helpers for the test suites: a deterministic seeded RNG with a
// bounded draw, and random instance generators small enough for the
// exhaustive oracles.

#include <cstdint>
#include <random>
#include <vector>

#include "sqfd/monomial.hpp"

namespace sqfd::testutil {

// mt19937_64 has a standard-specified sequence; the modulo draw keeps the
// derived values implementation-independent too (std distributions are not).
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t draw(std::uint64_t k) { return eng() % k; }
  bool coin() { return draw(2) == 1; }
};

inline Monomial random_monomial(Rng& rng, int n, bool allow_unit = false) {
  std::uint64_t limit = 1ull << n;
  for (;;) {
    std::uint64_t mask = rng.draw(limit);
    if (mask == 0 && !allow_unit) continue;
    return Monomial::from_mask(mask, n);
  }
}

// A random valid quotient pair with n in [n_min, n_max].  J is zero about
// a third of the time, otherwise generated from proper multiples of
// generators of I so that containment and the grading hypothesis hold by
// construction.
inline IdealPair random_pair(Rng& rng, int n_min, int n_max) {
  for (;;) {
    int n = n_min + static_cast<int>(rng.draw(static_cast<std::uint64_t>(n_max - n_min + 1)));
    std::vector<Monomial> igens;
    std::size_t count = 1 + rng.draw(4);
    for (std::size_t i = 0; i < count; ++i) igens.push_back(random_monomial(rng, n));
    MonomialIdeal I = minimalize(igens, n);

    MonomialIdeal J = MonomialIdeal::zero(n);
    if (rng.draw(3) != 0) {
      std::vector<Monomial> jgens;
      std::size_t jcount = 1 + rng.draw(3);
      for (std::size_t i = 0; i < jcount; ++i) {
        const Monomial& g = I.gens()[rng.draw(I.num_gens())];
        if (g.degree() == n) continue;  // no room for a proper multiple
        Monomial m = g;
        while (m.degree() == g.degree() || rng.coin()) {
          int var = 1 + static_cast<int>(rng.draw(static_cast<std::uint64_t>(n)));
          if (!m.contains(var)) m = m.with(var);
          if (m.degree() == n) break;
        }
        jgens.push_back(m);
      }
      if (!jgens.empty()) J = minimalize(jgens, n);
    }
    try {
      return validate_pair(I, J);
    } catch (const Error&) {
      continue;  // rare (e.g. J swallowed all of I); just redraw
    }
  }
}

}  // namespace sqfd::testutil
