#include <gtest/gtest.h>

#include <random>
#include <set>

#include "centrax/congruence.hpp"
#include "centrax/error.hpp"
#include "centrax/fixtures.hpp"

#include "oracles.hpp"

using namespace centrax;

namespace {

  Congruence of(oracle::Partition const& p) {
    return Congruence::from_rep(p);
  }

  std::vector<FiniteAlgebra> small_fixtures() {
    return {fixtures::trivial(),    fixtures::chain(2),        fixtures::chain(3),
            fixtures::chain(4),     fixtures::boolean_lattice(2), fixtures::m3(),
            fixtures::n5(),         fixtures::meet_chain(3),   fixtures::join_chain(3),
            fixtures::meet_power(2), fixtures::join_power(2),  fixtures::meet_m3(),
            fixtures::zmod(4),      fixtures::zmod(6),         fixtures::degenerate()};
  }

  // Evaluates both sides of every defining equation of the chain directly.
  bool chain_holds(FiniteAlgebra const& a, MaltsevChain const& ch) {
    auto at = [&](Tuple const& u, std::size_t i) {
      Tuple args = u;
      args.insert(args.end(), ch.parameters.begin(), ch.parameters.end());
      return eval_term(a, ch.terms[i], args);
    };
    std::size_t const k = ch.length();
    if (k % 2 == 0 || at(ch.c, 0) != ch.a || at(ch.d, k - 1) != ch.b) {
      return false;
    }
    for (std::size_t i = 1; i < k; ++i) {
      // 1-based i: even uses c, odd uses d.
      Tuple const& u = i % 2 == 0 ? ch.c : ch.d;
      if (at(u, i - 1) != at(u, i)) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST(Cg, Examples) {
  auto const two = fixtures::chain(2);
  EXPECT_TRUE(cg(two, std::vector<Pair>{}).is_identity());
  EXPECT_TRUE(cg(two, std::vector<Pair>{{0, 1}}).is_universal());

  auto const d     = fixtures::boolean_lattice(2);
  auto const theta = cg(d, std::vector<Pair>{{0, 1}});
  EXPECT_EQ(theta.reps()[0], 0u);
  EXPECT_EQ(theta, of(oracle::least_congruence(d, {{0, 1}})));
  EXPECT_EQ(theta.blocks(), (std::vector<Tuple>{{0, 1}, {2, 3}}));
}

TEST(Cg, AgreesWithPartitionSearchOnFixtures) {
  for (auto const& a : small_fixtures()) {
    if (a.size() > 6) {
      continue;
    }
    for (Element x = 0; x < a.size(); ++x) {
      for (Element y = 0; y < a.size(); ++y) {
        EXPECT_EQ(principal(a, x, y), of(oracle::least_congruence(a, {{x, y}}))) << a.name();
      }
    }
  }
}

TEST(Cg, AgreesWithPartitionSearchOnRandomAlgebras) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 60; ++round) {
    std::size_t const n = 2 + rng() % 4;
    auto const        a = oracle::random_algebra(rng, n, 1 + rng() % 2, rng() % 2);
    std::vector<Pair> pairs;
    for (std::size_t i = 0, count = rng() % 3; i < count; ++i) {
      pairs.emplace_back(rng() % n, rng() % n);
    }
    EXPECT_EQ(cg(a, pairs), of(oracle::least_congruence(a, pairs))) << "round " << round;
  }
}

TEST(Cg, ExtendsBase) {
  auto const a    = fixtures::chain(4);
  auto const base = principal(a, 0, 1);
  EXPECT_EQ(cg(a, base, std::vector<Pair>{{2, 3}}), cg(a, std::vector<Pair>{{0, 1}, {2, 3}}));
}

TEST(AllCongruences, MatchesBruteForce) {
  for (auto const& a : small_fixtures()) {
    auto const got = all_congruences(a);
    std::vector<Congruence> want;
    for (auto const& p : oracle::congruences(a)) {
      want.push_back(of(p));
    }
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << a.name();
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(AllCongruences, Counts) {
  EXPECT_EQ(all_congruences(fixtures::chain(2)).size(), 2u);
  EXPECT_EQ(all_congruences(fixtures::boolean_lattice(2)).size(), 4u);
  EXPECT_EQ(all_congruences(fixtures::trivial()).size(), 1u);
}

TEST(AllCongruences, Cap) {
  EXPECT_THROW(all_congruences(fixtures::meet_power(4)), CapExceeded);
  Caps caps;
  caps.congruence = 3;
  EXPECT_THROW(all_congruences(fixtures::chain(4), caps), CapExceeded);
}

TEST(Lattice, JoinMeetExamples) {
  auto const d  = fixtures::boolean_lattice(2);
  auto const ta = principal(d, 0, 1);
  auto const tb = principal(d, 0, 2);
  EXPECT_TRUE(join(ta, tb).is_universal());
  EXPECT_TRUE(meet(ta, tb).is_identity());
  EXPECT_EQ(join(ta, Congruence::identity(4)), ta);
  EXPECT_EQ(meet(ta, Congruence::universal(4)), ta);
  EXPECT_THROW(join(ta, Congruence::identity(3)), ValidationError);
  EXPECT_THROW(meet(ta, Congruence::identity(5)), ValidationError);
}

// Idempotence, commutativity, associativity and absorption on Con(A).
TEST(Lattice, AxiomsOnEveryFixture) {
  for (auto const& a : small_fixtures()) {
    auto const con = all_congruences(a);
    std::set<Congruence> const members(con.begin(), con.end());
    for (auto const& x : con) {
      EXPECT_EQ(join(x, x), x);
      EXPECT_EQ(meet(x, x), x);
      for (auto const& y : con) {
        EXPECT_EQ(join(x, y), join(y, x));
        EXPECT_EQ(meet(x, y), meet(y, x));
        EXPECT_EQ(join(x, meet(x, y)), x);
        EXPECT_EQ(meet(x, join(x, y)), x);
        EXPECT_TRUE(members.contains(join(x, y)));
        EXPECT_TRUE(members.contains(meet(x, y)));
        for (auto const& z : con) {
          EXPECT_EQ(join(x, join(y, z)), join(join(x, y), z));
          EXPECT_EQ(meet(x, meet(y, z)), meet(meet(x, y), z));
        }
      }
    }
  }
}

TEST(Compose, MatchesRelationOracle) {
  for (auto const& a : small_fixtures()) {
    auto const con = all_congruences(a);
    for (auto const& x : con) {
      for (auto const& y : con) {
        auto const got  = compose(x, y);
        auto const want = oracle::compose(Tuple(x.reps().begin(), x.reps().end()),
                                          Tuple(y.reps().begin(), y.reps().end()));
        for (Element u = 0; u < a.size(); ++u) {
          for (Element v = 0; v < a.size(); ++v) {
            ASSERT_EQ(got.contains(u, v), want[u][v]);
          }
        }
        EXPECT_EQ(permutes(x, y), want == oracle::compose(Tuple(y.reps().begin(), y.reps().end()),
                                                         Tuple(x.reps().begin(), x.reps().end())));
      }
    }
  }
}

TEST(Compose, Examples) {
  auto const d     = fixtures::boolean_lattice(2);
  auto const delta = principal(d, 0, 1);
  EXPECT_EQ(compose(Congruence::identity(4), delta), Relation::of(delta));
  // Projection kernels of the diamond.
  EXPECT_TRUE(permutes(principal(d, 0, 1), principal(d, 0, 2)));

  // 3-chain: compare with the relation oracle directly.
  auto const c3 = fixtures::chain(3);
  auto const t0 = principal(c3, 0, 1);
  auto const t1 = principal(c3, 1, 2);
  auto const l  = oracle::compose(Tuple(t0.reps().begin(), t0.reps().end()),
                                  Tuple(t1.reps().begin(), t1.reps().end()));
  auto const r  = oracle::compose(Tuple(t1.reps().begin(), t1.reps().end()),
                                  Tuple(t0.reps().begin(), t0.reps().end()));
  EXPECT_EQ(permutes(t0, t1), l == r);
}

// permutes(theta, delta) iff every (x, y) in the join gives a solvable system.
TEST(Systems, PermutabilityCriterion) {
  for (auto const& a : small_fixtures()) {
    auto const con = all_congruences(a);
    for (auto const& x : con) {
      for (auto const& y : con) {
        auto const j        = join(x, y);
        bool       solvable = true;
        for (Element u = 0; u < a.size(); ++u) {
          for (Element v = 0; v < a.size(); ++v) {
            if (j.related(u, v)) {
              solvable = solvable && solve_system({{{x, u}, {y, v}}}).has_value();
            }
          }
        }
        EXPECT_EQ(permutes(x, y), solvable) << a.name();
      }
    }
  }
}

TEST(Systems, Examples) {
  std::size_t const n = 5;
  EXPECT_EQ(solve_system({{{Congruence::identity(n), 2}, {Congruence::universal(n), 4}}}), 2u);
  EXPECT_EQ(solve_system({{{Congruence::identity(n), 3}, {Congruence::identity(n), 3}}}), 3u);

  // Projection kernels of the diamond pin the central element's coordinate.
  auto const d = fixtures::boolean_lattice(2);
  auto const theta = principal(d, 0, 1);
  auto const delta = principal(d, 0, 2);
  auto const e     = solve_system({{{theta, 0}, {delta, 3}}});
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(theta.related(*e, 0));
  EXPECT_TRUE(delta.related(*e, 3));
  EXPECT_EQ(*e, 1u);
}

TEST(Systems, Invalid) {
  EXPECT_THROW(solve_system({}), PreconditionError);
  EXPECT_THROW(solve_system({{{Congruence::identity(3), 0}, {Congruence::identity(3), 1}}}),
               PreconditionError);
}

TEST(Systems, UniqueWhenMeetIsIdentity) {
  auto const d = fixtures::boolean_lattice(2);
  auto const theta = principal(d, 0, 1);
  auto const delta = principal(d, 0, 2);
  for (Element x = 0; x < 4; ++x) {
    for (Element y = 0; y < 4; ++y) {
      auto const s = solve_system({{{theta, x}, {delta, y}}});
      ASSERT_TRUE(s.has_value());
      int count = 0;
      for (Element z = 0; z < 4; ++z) {
        count += theta.related(z, x) && delta.related(z, y);
      }
      EXPECT_EQ(count, 1);
    }
  }
}

TEST(Maltsev, GeneratorPairIsItsOwnWitness) {
  auto const a = fixtures::n5();
  Tuple const c = {1, 2}, d = {3, 4};
  auto const ch = maltsev_witness(a, 2, 4, c, d);
  ASSERT_EQ(ch.length(), 1u);
  EXPECT_EQ(ch.terms[0], Term::variable(1));
  EXPECT_FALSE(chain_violation(a, ch).has_value());
}

TEST(Maltsev, MeetSemilatticeSquare) {
  auto const a  = fixtures::meet_power(2);
  Tuple const c = {2}, d = {3};
  auto const ch = maltsev_witness(a, 0, 1, c, d);
  ASSERT_EQ(ch.length(), 1u);
  EXPECT_EQ(ch.parameters, (Tuple{1}));
  auto const meet = *a.signature().find("meet");
  EXPECT_EQ(ch.terms[0], Term::operation(meet, {Term::variable(0), Term::variable(1)}));
  EXPECT_TRUE(chain_holds(a, ch));
}

TEST(Maltsev, ReflexivePair) {
  auto const a  = fixtures::chain(3);
  Tuple const c = {0}, d = {1};
  auto const ch = maltsev_witness(a, 2, 2, c, d);
  ASSERT_EQ(ch.length(), 1u);
  // t1 ignores the generator slot: it is the parameter lambda = (2).
  EXPECT_EQ(ch.terms[0], Term::variable(1));
  EXPECT_EQ(ch.parameters, (Tuple{2}));
  EXPECT_TRUE(chain_holds(a, ch));
}

TEST(Maltsev, NotAMember) {
  auto const a  = fixtures::chain(3);
  Tuple const c = {0}, d = {1};
  EXPECT_THROW(maltsev_witness(a, 1, 2, c, d), PreconditionError);
}

TEST(Maltsev, LengthCap) {
  // Successor on 0 < 1 < 2 < 3: (0, 3) needs three links of theta(0, 1).
  FiniteAlgebra const a("successor", 4, Signature({{"g", 1}}), {{1, 2, 3, 3}}, {0}, {3});
  Tuple const c = {0}, d = {1};
  auto const ch = maltsev_witness(a, 0, 3, c, d);
  EXPECT_GE(ch.length(), 3u);
  EXPECT_TRUE(chain_holds(a, ch));
  Caps caps;
  caps.chain_length = 1;
  EXPECT_THROW(maltsev_witness(a, 0, 3, c, d, caps), CapExceeded);
  caps              = Caps{};
  caps.term_depth   = 0;
  EXPECT_THROW(maltsev_witness(a, 0, 3, c, d, caps), CapExceeded);
}

// Every member pair of every principal congruence gets a chain that
// validates, on fixtures and on random algebras.
TEST(Maltsev, EveryChainValidates) {
  std::vector<FiniteAlgebra> algebras = small_fixtures();
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    algebras.push_back(oracle::random_algebra(rng, 2 + rng() % 4, 1 + rng() % 2, rng() % 2));
  }
  for (auto const& a : algebras) {
    for (Element c = 0; c < a.size(); ++c) {
      for (Element d = 0; d < a.size(); ++d) {
        auto const theta = principal(a, c, d);
        Tuple const cc = {c}, dd = {d};
        for (Element x = 0; x < a.size(); ++x) {
          for (Element y = 0; y < a.size(); ++y) {
            if (!theta.related(x, y)) {
              continue;
            }
            try {
              auto const ch = maltsev_witness(a, x, y, cc, dd);
              EXPECT_TRUE(chain_holds(a, ch)) << a.name();
              EXPECT_FALSE(chain_violation(a, ch).has_value());
            } catch (CapExceeded const&) {
              // Explicit refusal is allowed; silent truncation is not.
            }
          }
        }
      }
    }
  }
}

TEST(Maltsev, TupleGenerators) {
  auto const a = fixtures::meet_power(3);
  Tuple const c = {7, 4}, d = {1, 0};
  auto const theta = cg_tuples(a, c, d);
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (theta.related(x, y)) {
        EXPECT_TRUE(chain_holds(a, maltsev_witness(a, x, y, c, d)));
      }
    }
  }
}

TEST(Maltsev, VariableNames) {
  EXPECT_EQ(chain_variable_name(2, 0), "u0");
  EXPECT_EQ(chain_variable_name(2, 1), "u1");
  EXPECT_EQ(chain_variable_name(2, 2), "w0");
}
