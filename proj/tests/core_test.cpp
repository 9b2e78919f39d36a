#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "sqfd/monomial.hpp"
#include "test_util.hpp"

using namespace sqfd;
using testutil::Rng;

namespace {

Monomial m(std::initializer_list<int> vars, int n) { return Monomial(vars, n); }

bool raw_member(const std::vector<Monomial>& gens, const Monomial& x) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return divides(g, x); });
}

}  // namespace

TEST_CASE("monomial construction and accessors") {
  Monomial a = m({1, 3, 5}, 5);
  CHECK(a.n() == 5);
  CHECK(a.degree() == 3);
  CHECK(a.contains(1));
  CHECK(!a.contains(2));
  CHECK(a.indices() == std::vector<int>{1, 3, 5});
  CHECK(to_string(a) == "x1*x3*x5");

  Monomial unit = Monomial::from_mask(0, 3);
  CHECK(unit.is_unit());
  CHECK(unit.degree() == 0);
  CHECK(to_string(unit) == "1");

  CHECK(a.with(2) == m({1, 2, 3, 5}, 5));
  CHECK(a.without(3) == m({1, 5}, 5));
  CHECK(a.with(1) == a);
  CHECK(a.without(2) == a);
}

TEST_CASE("monomial construction rejects bad input") {
  CHECK_THROWS_AS(Monomial({0}, 3), Error);
  CHECK_THROWS_AS(Monomial({4}, 3), Error);
  CHECK_THROWS_AS(Monomial({1, 1}, 3), Error);
  CHECK_THROWS_AS(Monomial::from_mask(0b1000, 3), Error);
  CHECK_THROWS_AS(Monomial::from_mask(0, 0), Error);
  CHECK_THROWS_AS(Monomial::from_mask(0, 65), Error);

  try {
    Monomial({1, 1}, 3);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSquarefree);
  }
}

TEST_CASE("ambient of 64 variables works at the boundary") {
  Monomial top = Monomial::from_mask(~0ull, 64);
  CHECK(top.degree() == 64);
  CHECK(top.contains(64));
  CHECK(top.without(64).degree() == 63);
}

TEST_CASE("divisibility and lcm") {
  CHECK(divides(m({1}, 4), m({1, 2}, 4)));
  CHECK(!divides(m({1, 3}, 4), m({1, 2}, 4)));
  CHECK(divides(m({1, 2}, 4), m({1, 2}, 4)));
  CHECK(lcm(m({1, 2}, 4), m({2, 3}, 4)) == m({1, 2, 3}, 4));
  CHECK_THROWS_AS(divides(m({1}, 3), m({1}, 4)), Error);
}

TEST_CASE("lex order hand cases") {
  CHECK(lex_less(m({1}, 5), m({2}, 5)));
  CHECK(lex_less(m({1, 2}, 5), m({1, 3}, 5)));
  CHECK(lex_less(m({1, 2, 5}, 5), m({1, 3, 4}, 5)));
  CHECK(lex_less(m({1}, 5), m({1, 2}, 5)));       // proper prefix first
  CHECK(lex_less(m({1, 2, 3}, 5), m({1, 3}, 5)));  // second index decides
  CHECK(lex_less(m({1, 3}, 5), m({2}, 5)));
  CHECK(!lex_less(m({2}, 5), m({2}, 5)));
}

TEST_CASE("lex order matches index-sequence comparison exhaustively") {
  const int n = 5;
  for (std::uint64_t a = 0; a < (1u << n); ++a)
    for (std::uint64_t b = 0; b < (1u << n); ++b) {
      Monomial ma = Monomial::from_mask(a, n), mb = Monomial::from_mask(b, n);
      auto ia = ma.indices(), ib = mb.indices();
      bool expect = std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
      CHECK(lex_less(ma, mb) == expect);
    }
}

TEST_CASE("deg-lex is a strict total order refining degree") {
  const int n = 5;
  for (std::uint64_t a = 0; a < (1u << n); ++a)
    for (std::uint64_t b = 0; b < (1u << n); ++b) {
      Monomial ma = Monomial::from_mask(a, n), mb = Monomial::from_mask(b, n);
      int cmp = (deg_lex_less(ma, mb) ? 1 : 0) + (deg_lex_less(mb, ma) ? 2 : 0);
      if (a == b)
        CHECK(cmp == 0);
      else
        CHECK((cmp == 1 || cmp == 2));
      if (ma.degree() < mb.degree()) CHECK(deg_lex_less(ma, mb));
    }
}

TEST_CASE("ideal membership is support divisibility") {
  MonomialIdeal I(4, {m({1, 2}, 4), m({3}, 4)});
  CHECK(I.contains(m({1, 2}, 4)));
  CHECK(I.contains(m({1, 2, 4}, 4)));
  CHECK(I.contains(m({3, 4}, 4)));
  CHECK(!I.contains(m({1, 4}, 4)));
  CHECK(!I.contains(Monomial::from_mask(0, 4)));
  CHECK(I.min_gen_degree() == 1);
  CHECK(!I.is_zero());
}

TEST_CASE("zero ideal") {
  MonomialIdeal Z = MonomialIdeal::zero(3);
  CHECK(Z.is_zero());
  CHECK(!Z.contains(m({1}, 3)));
  CHECK_THROWS_AS(Z.min_gen_degree(), Error);
}

TEST_CASE("ideal constructor enforces the antichain invariant") {
  CHECK_THROWS_AS(MonomialIdeal(3, {m({1}, 3), m({1, 2}, 3)}), Error);
  CHECK_THROWS_AS(MonomialIdeal(3, {Monomial::from_mask(0, 3)}), Error);
  CHECK_THROWS_AS(MonomialIdeal(3, {m({1}, 4)}), Error);
  try {
    MonomialIdeal(3, {m({1}, 3), m({1, 2}, 3)});
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotMinimal);
  }
}

TEST_CASE("generators are stored in deg-lex order") {
  MonomialIdeal I(5, {m({3, 4, 5}, 5), m({1, 2}, 5)});
  REQUIRE(I.num_gens() == 2);
  CHECK(I.gens()[0] == m({1, 2}, 5));
  CHECK(I.gens()[1] == m({3, 4, 5}, 5));
}

TEST_CASE("minimalize golden case") {
  std::vector<Monomial> gens = {m({1, 2}, 3), m({1}, 3), m({2, 3}, 3), m({1}, 3)};
  MonomialIdeal I = minimalize(gens, 3);
  REQUIRE(I.num_gens() == 2);
  CHECK(I.gens()[0] == m({1}, 3));
  CHECK(I.gens()[1] == m({2, 3}, 3));
  CHECK_THROWS_AS(minimalize({}, 3), Error);
}

TEST_CASE("minimalize preserves the ideal and yields an antichain") {
  Rng rng(20260822);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.draw(4));
    std::vector<Monomial> gens;
    std::size_t count = 1 + rng.draw(6);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(testutil::random_monomial(rng, n));
    MonomialIdeal I = minimalize(gens, n);
    for (std::size_t i = 0; i < I.num_gens(); ++i)
      for (std::size_t j = 0; j < I.num_gens(); ++j)
        if (i != j) CHECK(!divides(I.gens()[i], I.gens()[j]));
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      Monomial x = Monomial::from_mask(mask, n);
      CHECK(I.contains(x) == raw_member(gens, x));
    }
  }
}

TEST_CASE("intersection agrees with simultaneous membership") {
  Rng rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.draw(4));
    auto mk = [&](std::size_t count) {
      std::vector<Monomial> gens;
      for (std::size_t i = 0; i < count; ++i) gens.push_back(testutil::random_monomial(rng, n));
      return minimalize(gens, n);
    };
    MonomialIdeal a = mk(1 + rng.draw(4)), b = mk(1 + rng.draw(4));
    MonomialIdeal c = intersect(a, b);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      Monomial x = Monomial::from_mask(mask, n);
      CHECK(c.contains(x) == (a.contains(x) && b.contains(x)));
    }
  }
}

TEST_CASE("intersection with the zero ideal is zero") {
  MonomialIdeal a(3, {m({1}, 3)});
  CHECK(intersect(a, MonomialIdeal::zero(3)).is_zero());
  CHECK(intersect(MonomialIdeal::zero(3), a).is_zero());
}

TEST_CASE("pair validation accepts a standard quotient") {
  MonomialIdeal I(5, {m({1, 2}, 5), m({3, 4, 5}, 5)});
  MonomialIdeal J(5, {m({1, 2, 3, 5}, 5), m({1, 2, 4, 5}, 5)});
  IdealPair p = validate_pair(I, J);
  CHECK(p.d == 2);
  CHECK(p.n() == 5);
  CHECK(validate_pair(I, MonomialIdeal::zero(5)).d == 2);
}

TEST_CASE("pair validation rejects each hypothesis violation") {
  MonomialIdeal I(4, {m({1, 2}, 4)});

  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };

  CHECK(code_of([&] { validate_pair(MonomialIdeal::zero(4), MonomialIdeal::zero(4)); }) ==
        Errc::EmptyIdeal);
  CHECK(code_of([&] { validate_pair(I, MonomialIdeal(4, {m({3, 4}, 4)})); }) == Errc::Containment);
  CHECK(code_of([&] { validate_pair(I, I); }) == Errc::TrivialQuotient);
  CHECK(code_of([&] {
          validate_pair(MonomialIdeal(4, {m({1, 2}, 4), m({3, 4}, 4)}),
                        MonomialIdeal(4, {m({3, 4}, 4)}));
        }) == Errc::GradingHypothesis);
  CHECK(code_of([&] { validate_pair(I, MonomialIdeal::zero(3)); }) == Errc::AmbientMismatch);
}

TEST_CASE("error text names the offending generator") {
  MonomialIdeal I(4, {m({1, 2}, 4)});
  try {
    validate_pair(I, MonomialIdeal(4, {m({3, 4}, 4)}));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("x3*x4") != std::string::npos);
  }
}
