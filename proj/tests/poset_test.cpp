#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sqfd/poset.hpp"
#include "test_util.hpp"

using namespace sqfd;
using testutil::Rng;

namespace {

Monomial m(std::initializer_list<int> vars, int n) { return Monomial(vars, n); }

// Quotient with poset layers 1,4,3 and Stanley depth 3: two generators in
// degrees 2 and 3, two degree-4 relations.
IdealPair two_gen_pair() {
  return validate_pair(MonomialIdeal(5, {m({1, 2}, 5), m({3, 4, 5}, 5)}),
                       MonomialIdeal(5, {m({1, 2, 3, 5}, 5), m({1, 2, 4, 5}, 5)}));
}

// Same numerator, relations chosen so the Stanley depth rises to 4.
IdealPair two_gen_pair_deep() {
  return validate_pair(MonomialIdeal(5, {m({1, 2}, 5), m({3, 4, 5}, 5)}),
                       MonomialIdeal(5, {m({1, 2, 4, 5}, 5), m({2, 3, 4, 5}, 5)}));
}

// Five generators over n=5 with a size-16 poset concentrated in degrees
// 1..3; Stanley depth 3.
IdealPair five_gen_pair() {
  return validate_pair(
      MonomialIdeal(5, {m({1}, 5), m({2, 3}, 5), m({2, 4}, 5), m({2, 5}, 5), m({3, 4}, 5)}),
      MonomialIdeal(5, {m({1, 3, 5}, 5), m({1, 4, 5}, 5), m({3, 4, 5}, 5), m({1, 2, 3, 4}, 5)}));
}

// All monomials of I \ J with degree <= k, straight from the definition.
std::vector<Monomial> brute_elements(const IdealPair& pair, int k) {
  std::vector<Monomial> out;
  for (std::uint64_t mask = 1; mask < (1ull << pair.n()); ++mask) {
    Monomial x = Monomial::from_mask(mask, pair.n());
    if (x.degree() <= k && pair.I.contains(x) && !pair.J.contains(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

}  // namespace

TEST_CASE("poset layers of the two-generator quotient") {
  StanleyPoset p = build_poset(two_gen_pair(), 5);
  CHECK(p.size() == 8);
  CHECK(p.layer_size(2) == 1);
  CHECK(p.layer_size(3) == 4);
  CHECK(p.layer_size(4) == 3);
  CHECK(p.layer_size(5) == 0);
  CHECK(p.layer(2)[0] == m({1, 2}, 5));
  CHECK(p.contains(m({3, 4, 5}, 5)));
  CHECK(!p.contains(m({1, 2, 3, 5}, 5)));  // killed by a relation
  CHECK(!p.contains(m({1, 3}, 5)));        // not in the numerator ideal

  StanleyPoset trunc = build_poset(two_gen_pair(), 3);
  CHECK(trunc.size() == 5);
  CHECK(trunc.max_degree() == 3);

  StanleyPoset below = build_poset(two_gen_pair(), 1);
  CHECK(below.empty_truncation());
  CHECK(below.size() == 0);

  CHECK_THROWS_AS(build_poset(two_gen_pair(), 6), Error);
}

TEST_CASE("poset ids are deg-lex positions") {
  StanleyPoset p = build_poset(five_gen_pair(), 5);
  CHECK(p.size() == 16);
  for (int id = 0; id < p.size(); ++id) CHECK(p.id_of(p.element(id)) == id);
  for (int id = 0; id + 1 < p.size(); ++id)
    CHECK(deg_lex_less(p.element(id), p.element(id + 1)));
}

TEST_CASE("poset matches brute-force enumeration on random quotients") {
  Rng rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    IdealPair pair = testutil::random_pair(rng, 2, 6);
    int k = pair.d + static_cast<int>(rng.draw(static_cast<std::uint64_t>(pair.n() - pair.d + 1)));
    StanleyPoset p = build_poset(pair, k);
    CHECK(p.elements() == brute_elements(pair, k));
  }
}

TEST_CASE("interval elements and malformed intervals") {
  StanleyPoset p = build_poset(two_gen_pair(), 5);
  auto cube = interval_elements(Interval{m({1, 2}, 5), m({1, 2, 3, 4}, 5)}, p);
  REQUIRE(cube.size() == 4);
  CHECK(cube[0] == m({1, 2}, 5));
  CHECK(cube[1] == m({1, 2, 3}, 5));
  CHECK(cube[2] == m({1, 2, 4}, 5));
  CHECK(cube[3] == m({1, 2, 3, 4}, 5));

  auto single = interval_elements(Interval{m({1, 2}, 5), m({1, 2}, 5)}, p);
  CHECK(single.size() == 1);

  CHECK_THROWS_AS(interval_elements(Interval{m({1, 2, 3}, 5), m({1, 2}, 5)}, p), Error);
  CHECK_THROWS_AS(interval_elements(Interval{m({1, 3}, 5), m({1, 2, 3}, 5)}, p), Error);
  CHECK_THROWS_AS(interval_elements(Interval{m({3, 4, 5}, 5), m({1, 2, 3, 4, 5}, 5)}, p), Error);
}

TEST_CASE("partition validation reports cover defects") {
  StanleyPoset p = build_poset(two_gen_pair(), 3);

  IntervalPartition good{p,
                         {Interval{m({1, 2}, 5), m({1, 2, 3}, 5)},
                          Interval{m({1, 2, 4}, 5), m({1, 2, 4}, 5)},
                          Interval{m({1, 2, 5}, 5), m({1, 2, 5}, 5)},
                          Interval{m({3, 4, 5}, 5), m({3, 4, 5}, 5)}}};
  CHECK(validate_partition(good).valid);
  CHECK(good.min_top_degree() == 3);

  IntervalPartition uncovered = good;
  uncovered.intervals.pop_back();
  PartitionDiagnostics diag = validate_partition(uncovered);
  CHECK(!diag.valid);
  REQUIRE(diag.witness.has_value());
  CHECK(*diag.witness == m({3, 4, 5}, 5));

  IntervalPartition doubled = good;
  doubled.intervals.push_back(Interval{m({1, 2, 4}, 5), m({1, 2, 4}, 5)});
  diag = validate_partition(doubled);
  CHECK(!diag.valid);
  CHECK(diag.problem.find("covered 2 times") != std::string::npos);

  IntervalPartition backwards = good;
  backwards.intervals[0] = Interval{m({1, 2, 3}, 5), m({1, 2}, 5)};
  CHECK(!validate_partition(backwards).valid);
}

TEST_CASE("decision goldens for the two-generator quotients") {
  IdealPair pair = two_gen_pair();
  CHECK(sdepth_decide(pair, 2).has_value());
  auto at3 = sdepth_decide(pair, 3);
  REQUIRE(at3.has_value());
  CHECK(validate_partition(*at3).valid);
  CHECK(at3->min_top_degree() == 3);
  CHECK(!sdepth_decide(pair, 4).has_value());
  CHECK(!sdepth_decide(pair, 5).has_value());

  IdealPair deep = two_gen_pair_deep();
  auto at4 = sdepth_decide(deep, 4);
  REQUIRE(at4.has_value());
  CHECK(validate_partition(*at4).valid);
  CHECK(!sdepth_decide(deep, 5).has_value());

  CHECK_THROWS_AS(sdepth_decide(pair, 1), Error);
  CHECK_THROWS_AS(sdepth_decide(pair, 6), Error);
}

TEST_CASE("certificates for the named quotients") {
  SdepthCertificate a = sdepth(two_gen_pair());
  CHECK(a.value == 3);
  CHECK(a.refutation == "search-exhausted");
  CHECK(validate_partition(a.witness).valid);

  SdepthCertificate b = sdepth(two_gen_pair_deep());
  CHECK(b.value == 4);
  CHECK(b.refutation == "search-exhausted");

  SdepthCertificate c = sdepth(five_gen_pair());
  CHECK(c.value == 3);
  CHECK(validate_partition(c.witness).valid);
  CHECK(c.witness.min_top_degree() == 3);
}

TEST_CASE("solver agrees with the exhaustive oracle") {
  Rng rng(1001);
  int checked = 0;
  while (checked < 120) {
    IdealPair pair = testutil::random_pair(rng, 2, 5);
    StanleyPoset full = build_poset(pair, pair.n());
    if (full.size() > kOracleMaxPoset) continue;
    ++checked;
    int expect = sdepth_oracle(pair);
    SdepthOptions with_bound, no_bound;
    no_bound.bound_shortcut = false;
    CHECK(sdepth(pair, with_bound).value == expect);
    CHECK(sdepth(pair, no_bound).value == expect);
  }
}

TEST_CASE("oracle refuses oversized posets") {
  CHECK_THROWS_AS(sdepth_oracle(five_gen_pair()), Error);
  try {
    sdepth_oracle(five_gen_pair());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Capacity);
  }
}

TEST_CASE("decision is monotone and witnesses are sound") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    IdealPair pair = testutil::random_pair(rng, 2, 5);
    bool seen_absent = false;
    for (int k = pair.d; k <= pair.n(); ++k) {
      auto part = sdepth_decide(pair, k);
      if (part.has_value()) {
        CHECK(!seen_absent);  // presence can never resume after a failure
        CHECK(validate_partition(*part).valid);
        CHECK(part->min_top_degree() == k);
        for (const Interval& iv : part->intervals)
          if (iv.u.degree() < k) CHECK(iv.v.degree() == k);
      } else {
        seen_absent = true;
      }
    }
  }
}

TEST_CASE("certificate value is at least the minimal generator degree") {
  Rng rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    IdealPair pair = testutil::random_pair(rng, 2, 6);
    SdepthCertificate cert = sdepth(pair);
    CHECK(cert.value >= pair.d);
    CHECK(cert.value <= pair.n());
    CHECK(validate_partition(cert.witness).valid);
    CHECK(cert.witness.min_top_degree() == cert.value);
    if (cert.value == pair.n()) CHECK(cert.refutation == "max-degree");
  }
}

TEST_CASE("memoization budget does not change answers") {
  Rng rng(31337);
  SdepthOptions no_memo;
  no_memo.memo_budget = 0;
  for (int trial = 0; trial < 25; ++trial) {
    IdealPair pair = testutil::random_pair(rng, 2, 5);
    CHECK(sdepth(pair).value == sdepth(pair, no_memo).value);
  }
}

TEST_CASE("solver output is deterministic") {
  for (int run = 0; run < 2; ++run) {
    SdepthCertificate a = sdepth(five_gen_pair());
    SdepthCertificate b = sdepth(five_gen_pair());
    REQUIRE(a.witness.intervals.size() == b.witness.intervals.size());
    for (std::size_t i = 0; i < a.witness.intervals.size(); ++i)
      CHECK(a.witness.intervals[i] == b.witness.intervals[i]);
    CHECK(a.refutation == b.refutation);
  }
}

TEST_CASE("lifting a truncated witness to the full poset") {
  IdealPair pair = two_gen_pair();
  auto at3 = sdepth_decide(pair, 3);
  REQUIRE(at3.has_value());
  StanleyPoset full = build_poset(pair, pair.n());
  IntervalPartition lifted = lift_to_full(*at3, full);
  CHECK(validate_partition(lifted).valid);
  CHECK(lifted.intervals.size() == at3->intervals.size() + 3);  // three degree-4 singletons
  CHECK(lifted.min_top_degree() == 3);
}
