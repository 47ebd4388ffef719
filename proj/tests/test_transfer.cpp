#include <gtest/gtest.h>

#include "centrax/central.hpp"
#include "centrax/congruence.hpp"
#include "centrax/error.hpp"
#include "centrax/fixtures.hpp"
#include "centrax/transfer.hpp"

using namespace centrax;

namespace {

  std::vector<Pair> all_pairs(std::size_t n) {
    std::vector<Pair> s;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        s.emplace_back(x, y);
      }
    }
    return s;
  }

  AlgebraPtr point(AlgebraPtr const& like) {
    return quotient(like, Congruence::universal(like->size())).algebra;
  }

  // Homomorphisms between members of families where RexDFC is evidenced.
  std::vector<Homomorphism> rexdfc_homomorphisms() {
    std::vector<std::vector<AlgebraPtr>> families = {
        {share(fixtures::meet_chain(2)), share(fixtures::meet_chain(3)),
         share(fixtures::meet_power(2)), share(fixtures::meet_power(3))},
        {share(fixtures::chain(2)), share(fixtures::chain(3)), share(fixtures::boolean_lattice(2)),
         share(fixtures::boolean_lattice(3))}};
    std::vector<Homomorphism> out;
    for (auto const& family : families) {
      for (auto const& a : family) {
        for (auto const& b : family) {
          for (auto const& m : all_homomorphisms(*a, *b)) {
            out.push_back(validate_homomorphism(a, b, m));
          }
        }
      }
    }
    out.push_back(fixtures::alpha());
    return out;
  }

}  // namespace

TEST(Pushout, EmptyCollapse) {
  auto const f  = fixtures::alpha();
  auto const sq = pushout_quotient(f, {});
  EXPECT_TRUE(sq.top.theta.is_identity());
  EXPECT_TRUE(sq.bottom.theta.is_identity());
  EXPECT_EQ(sq.right.map, f.map);
  EXPECT_TRUE(sq.commutes());
}

TEST(Pushout, AlphaAlongCentralElement) {
  auto const f = fixtures::alpha();
  auto const z = central_elements(f.dom);
  for (auto const& c : z.elements()) {
    std::vector<Pair> const s = {{f.dom->one()[0], c.e[0]}};
    auto const sq = pushout_quotient(f, s);
    auto const fe = f(c.e);
    EXPECT_EQ(sq.bottom.theta, cg_tuples(*f.cod, f.cod->one(), fe));
    EXPECT_EQ(sq.top.theta, cg_tuples(*f.dom, f.dom->one(), c.e));
    EXPECT_TRUE(sq.commutes());
  }
}

TEST(Pushout, CollapseEverything) {
  auto const f  = fixtures::alpha();
  auto const sq = pushout_quotient(f, all_pairs(f.dom->size()));
  EXPECT_EQ(sq.top.algebra->size(), 1u);
  EXPECT_EQ(sq.bottom.algebra->size(), 1u);
}

TEST(Pushout, RejectsOutOfRange) {
  auto const f = fixtures::alpha();
  std::vector<Pair> const s = {{0, 9}};
  EXPECT_THROW(pushout_quotient(f, s), ValidationError);
}

// Every square commutes, the induced map is the only homomorphism that
// makes it commute, and the cocone check passes.
TEST(Pushout, CommutesAndRightLegIsUnique) {
  for (auto const& f : {fixtures::alpha(), fixtures::c_into_d()}) {
    for (Element x = 0; x < f.dom->size(); ++x) {
      for (Element y = x + 1; y < f.dom->size(); ++y) {
        std::vector<Pair> const s = {{x, y}};
        auto const sq = pushout_quotient(f, s);
        ASSERT_TRUE(sq.commutes());
        std::size_t fitting = 0;
        for (auto const& m : all_homomorphisms(*sq.top.algebra, *sq.bottom.algebra)) {
          bool ok = true;
          for (Element a = 0; a < f.dom->size(); ++a) {
            ok = ok && m[sq.top.canonical(a)] == sq.bottom.canonical(f(a));
          }
          fitting += ok;
          if (ok) {
            EXPECT_EQ(m, sq.right.map);
          }
        }
        EXPECT_EQ(fitting, 1u);
        std::size_t above = 0;
        for (auto const& gamma : all_congruences(*f.cod)) {
          above += sq.bottom.theta.contained_in(gamma);
        }
        EXPECT_EQ(verify_pushout_cocones(sq), above);
      }
    }
  }
}

TEST(Quotients, UniversalProperty) {
  auto const a = share(fixtures::meet_power(2));
  std::vector<Pair> const s = {{0, 1}};
  auto const q = quotient(a, cg(*a, s));
  auto const b = share(fixtures::meet_chain(2));
  std::size_t cocones = 0;
  for (auto const& m : all_homomorphisms(*a, *b)) {
    auto const g = validate_homomorphism(a, b, m);
    if (g(0) != g(1)) {
      EXPECT_THROW(factor_through_quotient(q, s, g), PreconditionError);
      continue;
    }
    auto const h = factor_through_quotient(q, s, g);
    for (Element x = 0; x < a->size(); ++x) {
      EXPECT_EQ(h(q.canonical(x)), g(x));
    }
    ++cocones;
  }
  EXPECT_GT(cocones, 0u);
}

TEST(Stability, IdentityOnDiamond) {
  auto const d = share(fixtures::boolean_lattice(2));
  auto const r = stability_pushout_check(identity_homomorphism(d));
  EXPECT_TRUE(r.stable);
  EXPECT_EQ(r.cases.size(), 4u);
  EXPECT_EQ(r.squares, 8u);
}

TEST(Stability, Alpha) {
  auto const r = stability_pushout_check(fixtures::alpha());
  EXPECT_FALSE(r.stable);
  ASSERT_TRUE(r.first_failure.has_value());
  auto const& c = r.cases[*r.first_failure];
  EXPECT_EQ(c.e, (Tuple{1}));
  EXPECT_EQ(c.g, (Tuple{2}));
  EXPECT_FALSE(c.bijective);
}

TEST(Stability, IntoThePoint) {
  for (auto const& a : {share(fixtures::meet_power(2)), share(fixtures::boolean_lattice(3))}) {
    auto const p = point(a);
    auto const f = validate_homomorphism(a, p, Tuple(a->size(), 0));
    EXPECT_TRUE(stability_pushout_check(f).stable);
  }
}

TEST(Stability, Premise) {
  auto const j = share(fixtures::join_power(2));
  EXPECT_THROW(stability_pushout_check(identity_homomorphism(j)), PreconditionError);
}

TEST(Stability, AgreesWithPreservation) {
  std::size_t disagreements = 0, count = 0;
  for (auto const& f : rexdfc_homomorphisms()) {
    auto const s = stability_pushout_check(f);
    auto const r = analyze_homomorphism(f);
    disagreements += s.stable != r.preserves_complementary;
    ++count;
  }
  EXPECT_EQ(disagreements, 0u);
  EXPECT_GT(count, 40u);
}

TEST(Codisjointness, Examples) {
  auto const two = fixtures::chain(2);
  auto const r   = codisjointness_check(two, two);
  EXPECT_TRUE(r.trivial);
  EXPECT_EQ(r.left_size, 1u);

  for (auto const& a : {fixtures::n5(), fixtures::meet_power(3), fixtures::zmod(6)}) {
    EXPECT_TRUE(codisjointness_check(a, a).trivial) << a.name();
  }

  auto const bad = fixtures::degenerate();
  auto const d   = codisjointness_check(bad, bad);
  EXPECT_FALSE(d.trivial);
  EXPECT_EQ(d.left_size, 2u);
}
