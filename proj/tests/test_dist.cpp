#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "giry/dist.hpp"
#include "giry/errors.hpp"

#include "oracles.hpp"

using giry::BigInt;
using giry::Decomposition;
using giry::Density;
using giry::Dist;
using giry::Event;
using giry::Index;
using giry::Map;
using giry::ProductSpace;
using giry::Rat;
using giry::RatVec;
using giry::Space;

namespace {

Rat rat(long long num, long long den) { return Rat(BigInt(num), BigInt(den)); }

Dist make(const Space& space, const std::vector<Rat>& weights) {
  RatVec w(space.size());
  for (Index i = 0; i < space.size(); ++i) w(i) = weights[static_cast<std::size_t>(i)];
  return Dist(space, std::move(w));
}

const Space X3("X", {"x1", "x2", "x3"});
const Space AB("A", {"a", "b"});

}  // namespace

TEST_CASE("distribution construction enforces the probability axioms") {
  CHECK_NOTHROW(make(X3, {rat(1, 2), rat(1, 4), rat(1, 4)}));
  CHECK_THROWS_AS(make(X3, {rat(1, 2), rat(1, 2), rat(1, 2)}), giry::InvalidValue);
  CHECK_THROWS_AS(make(X3, {rat(3, 2), rat(-1, 4), rat(-1, 4)}), giry::InvalidValue);
  CHECK_THROWS_AS(Dist(X3, RatVec::Zero(2)), giry::InvalidValue);
  CHECK(Dist::uniform(AB).weight("a") == rat(1, 2));
  CHECK(make(X3, {rat(1, 2), rat(1, 4), rat(1, 4)}).weight("x2") == rat(1, 4));
}

TEST_CASE("dirac puts all mass on one point") {
  Dist d = giry::dirac(AB, "a");
  CHECK(d.weight("a") == Rat(1));
  CHECK(d.weight("b") == Rat(0));
  CHECK(giry::dirac(X3, Index(1)).weight(1) == Rat(1));
  CHECK_THROWS_AS(giry::dirac(AB, "zz"), giry::UnknownPoint);
  CHECK_THROWS_AS(giry::dirac(AB, Index(5)), giry::UnknownPoint);

  Dist unique_on_terminal = giry::dirac(giry::terminal_space(), Index(0));
  CHECK(unique_on_terminal.weight(0) == Rat(1));
}

TEST_CASE("mass of events") {
  CHECK(giry::mass(Dist::uniform(AB), Event::of_labels(AB, {"a"})) == rat(1, 2));
  Dist p = make(X3, {rat(1, 2), rat(1, 4), rat(1, 4)});
  CHECK(giry::mass(p, Event::none(X3)) == Rat(0));
  CHECK(giry::mass(p, Event::of_labels(X3, {"x1", "x3"})) == rat(3, 4));
  CHECK(giry::mass(p, Event::full(X3)) == Rat(1));
  CHECK_THROWS_AS(giry::mass(p, Event::full(AB)), giry::SpaceMismatch);

  oracle::Vec ov = {rat(1, 2), rat(1, 4), rat(1, 4)};
  CHECK(giry::mass(p, Event::of_labels(X3, {"x1", "x3"})) == oracle::mass(ov, {0, 2}));
}

TEST_CASE("support drops zero-weight points") {
  CHECK(giry::support(giry::dirac(AB, "a")).members() == std::vector<Index>{0});
  CHECK(giry::support(Dist::uniform(AB)).count() == 2);
  Dist p = make(X3, {Rat(0), rat(1, 3), rat(2, 3)});
  CHECK(giry::support(p).members() == std::vector<Index>{1, 2});
}

TEST_CASE("tensor products") {
  Dist da = giry::dirac(AB, "a");
  Space UV("U", {"u", "v"});
  Dist du = giry::dirac(UV, "v");
  Dist t = giry::tensor(da, du);
  CHECK(t.weight("(a,v)") == Rat(1));

  Dist uu = giry::tensor(Dist::uniform(AB), Dist::uniform(UV));
  for (Index i = 0; i < 4; ++i) CHECK(uu.weight(i) == rat(1, 4));

  Dist p = make(AB, {rat(1, 2), rat(1, 2)});
  Dist q = make(UV, {rat(3, 4), rat(1, 4)});
  Dist pq = giry::tensor(p, q);
  CHECK(pq.weight("(a,u)") == rat(3, 8));
  CHECK(pq.weight("(a,v)") == rat(1, 8));
  CHECK(pq.weight("(b,u)") == rat(3, 8));
  CHECK(pq.weight("(b,v)") == rat(1, 8));

  // tensor marginals recover the factors
  ProductSpace xy(AB, UV);
  CHECK(giry::pushforward(giry::proj_left(xy), pq) == p);
  CHECK(giry::pushforward(giry::proj_right(xy), pq) == q);
}

TEST_CASE("pushforward") {
  Dist p = make(X3, {rat(1, 2), rat(1, 4), rat(1, 4)});
  CHECK(giry::pushforward(giry::identity_map(X3), p) == p);
  CHECK(giry::pushforward(giry::constant_map(X3, AB, 1), p) == giry::dirac(AB, "b"));

  Map f(X3, AB, {0, 0, 1});
  Dist pushed = giry::pushforward(f, p);
  CHECK(pushed.weight("a") == rat(3, 4));
  CHECK(pushed.weight("b") == rat(1, 4));

  oracle::Vec expected =
      oracle::pushforward_by_preimage({rat(1, 2), rat(1, 4), rat(1, 4)}, {0, 0, 1}, 2);
  CHECK(pushed.weight(0) == expected[0]);
  CHECK(pushed.weight(1) == expected[1]);

  CHECK_THROWS_AS(giry::pushforward(Map(AB, X3, {0, 1}), p), giry::SpaceMismatch);
}

TEST_CASE("absolute continuity and mutual singularity") {
  Dist u3 = Dist::uniform(X3);
  Dist even = make(X3, {rat(1, 2), rat(1, 2), Rat(0)});
  Dist last = make(X3, {Rat(0), Rat(0), Rat(1)});

  CHECK(giry::absolutely_continuous(u3, u3));
  CHECK_FALSE(giry::absolutely_continuous(giry::dirac(AB, "a"), giry::dirac(AB, "b")));
  CHECK(giry::absolutely_continuous(even, u3));
  CHECK_FALSE(giry::absolutely_continuous(u3, even));

  CHECK(giry::mutually_singular(giry::dirac(AB, "a"), giry::dirac(AB, "b")));
  CHECK_FALSE(giry::mutually_singular(u3, u3));
  CHECK(giry::mutually_singular(even, last));
}

TEST_CASE("derivative is the pointwise ratio, zero off the base support") {
  Dist u2 = Dist::uniform(AB);
  Density one = giry::rn_derivative(u2, u2);
  CHECK(one.value(0) == Rat(1));
  CHECK(one.value(1) == Rat(1));

  Dist m = make(AB, {rat(2, 3), rat(1, 3)});
  Density h = giry::rn_derivative(m, u2);
  CHECK(h.value(0) == rat(4, 3));
  CHECK(h.value(1) == rat(2, 3));

  Dist point = giry::dirac(AB, "a");
  Density h2 = giry::rn_derivative(point, u2);
  CHECK(h2.value(0) == Rat(2));
  CHECK(h2.value(1) == Rat(0));

  oracle::Vec ratio = *oracle::pointwise_ratio({Rat(1), Rat(0)}, {rat(1, 2), rat(1, 2)});
  CHECK(h2.value(0) == ratio[0]);
  CHECK(h2.value(1) == ratio[1]);

  CHECK_THROWS_AS(giry::rn_derivative(u2, point), giry::NotAbsolutelyContinuous);
  CHECK_FALSE(oracle::pointwise_ratio({rat(1, 2), rat(1, 2)}, {Rat(1), Rat(0)}).has_value());
}

TEST_CASE("densities integrate back to the measure") {
  Dist nu = make(X3, {rat(1, 2), rat(1, 4), rat(1, 4)});
  Dist m = make(X3, {rat(1, 8), rat(5, 8), rat(1, 4)});
  Density h = giry::rn_derivative(m, nu);
  for (Index i = 0; i < 3; ++i) {
    CHECK(giry::mass_with_density(h, nu, Event(X3, {i})) == m.weight(i));
  }
  CHECK(giry::mass_with_density(h, nu, Event::full(X3)) == Rat(1));
  CHECK(giry::mass_with_density(h, nu, Event::of_labels(X3, {"x1", "x2"})) == rat(3, 4));
}

TEST_CASE("lebesgue decomposition, degenerate cases") {
  Dist u3 = Dist::uniform(X3);
  Dist even = make(X3, {rat(1, 2), rat(1, 2), Rat(0)});
  Dist last = make(X3, {Rat(0), Rat(0), Rat(1)});

  Decomposition all_ac = giry::lebesgue_decompose(even, u3);
  CHECK(all_ac.alpha == Rat(1));
  REQUIRE(all_ac.ac_part.has_value());
  CHECK(*all_ac.ac_part == even);
  CHECK_FALSE(all_ac.singular_part.has_value());

  Decomposition all_sing = giry::lebesgue_decompose(last, even);
  CHECK(all_sing.alpha == Rat(0));
  CHECK_FALSE(all_sing.ac_part.has_value());
  REQUIRE(all_sing.singular_part.has_value());
  CHECK(*all_sing.singular_part == last);
}

TEST_CASE("lebesgue decomposition, proper split") {
  Space pqr("P", {"p", "q", "r"});
  Dist m = make(pqr, {rat(1, 2), rat(1, 4), rat(1, 4)});
  Dist nu = make(pqr, {rat(1, 2), rat(1, 2), Rat(0)});

  Decomposition d = giry::lebesgue_decompose(m, nu);
  CHECK(d.alpha == rat(3, 4));
  REQUIRE(d.ac_part.has_value());
  REQUIRE(d.singular_part.has_value());
  CHECK(*d.ac_part == make(pqr, {rat(2, 3), rat(1, 3), Rat(0)}));
  CHECK(*d.singular_part == make(pqr, {Rat(0), Rat(0), Rat(1)}));
  CHECK(giry::absolutely_continuous(*d.ac_part, nu));
  CHECK(giry::mutually_singular(*d.singular_part, nu));

  // exact reconstruction
  for (Index i = 0; i < 3; ++i) {
    Rat rebuilt = d.alpha * d.ac_part->weight(i) + (Rat(1) - d.alpha) * d.singular_part->weight(i);
    CHECK(rebuilt == m.weight(i));
  }

  oracle::Split os = oracle::restrict_normalize({rat(1, 2), rat(1, 4), rat(1, 4)},
                                                {rat(1, 2), rat(1, 2), Rat(0)});
  CHECK(d.alpha == os.alpha);
  for (Index i = 0; i < 3; ++i) {
    CHECK(d.ac_part->weight(i) == (*os.ac)[static_cast<std::size_t>(i)]);
    CHECK(d.singular_part->weight(i) == (*os.sing)[static_cast<std::size_t>(i)]);
  }
}
