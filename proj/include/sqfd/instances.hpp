#pragma once

// Instance generation: the named example quotients shipped with the
// toolkit and the seeded random generators behind the corpus commands.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sqfd/monomial.hpp"

namespace sqfd {

// mt19937_64 has a standard-specified sequence; the modulo draw keeps
// every derived value implementation-independent as well (the std
// distribution adapters are not portable across library vendors).
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t draw(std::uint64_t k) { return eng() % k; }
  bool coin() { return draw(2) == 1; }
};

struct NamedInstance {
  std::string name;
  IdealPair pair;
};

/// The bundled example quotients, in a fixed order.
const std::vector<NamedInstance>& named_instances();

/// Looks up a bundled quotient by name; throws NotApplicable if absent.
IdealPair named_instance(const std::string& name);

/// Random quotient with a unique minimal generator f of degree d, the
/// remaining generators an antichain of degree-(d+1) monomials outside
/// (f), and J spanned by degree-(d+2) monomials of I.  Always valid.
IdealPair gen_r1(Rng& rng, int n, int d);

/// Random quotient whose generators all have degree d or d+1, with one
/// or more degree-d generators; J is spanned by monomials of I of
/// degrees d+1 and d+2.  Always valid.
IdealPair gen_bound(Rng& rng, int n, int d);

}  // namespace sqfd
