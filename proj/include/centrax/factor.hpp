#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "centrax/algebra.hpp"
#include "centrax/caps.hpp"
#include "centrax/partition.hpp"

namespace centrax {

  // A pair of complementary factor congruences:
  // theta meet delta = identity and theta o delta = universal.
  struct FactorPair {
    Congruence theta;
    Congruence delta;

    friend bool operator==(FactorPair const&, FactorPair const&) = default;
    friend auto operator<=>(FactorPair const&, FactorPair const&) = default;
  };

  bool is_factor_pair(Congruence const& theta, Congruence const& delta);

  // All ordered factor pairs of A, sorted by (theta, delta).
  std::vector<FactorPair> factor_pairs(FiniteAlgebra const& algebra, Caps const& caps = {});

  // Same, from an already computed Con(A).
  std::vector<FactorPair> factor_pairs(std::vector<Congruence> const& con);

  // A = A/theta x A/delta, witnessed by iso: a -> (a/theta, a/delta).
  struct Decomposition {
    QuotientAlgebra left;
    QuotientAlgebra right;
    ProductAlgebra  product;
    Homomorphism    iso;
    // Product element -> element of A, computed by solving the system
    // (theta, delta, x, y) for representatives x, y of the two blocks.
    Tuple inverse;
  };

  // Throws PreconditionError if pair is not a factor pair of A.
  Decomposition decompose(AlgebraPtr algebra, FactorPair const& pair, Caps const& caps = {});

  struct Factorization {
    Congruence left;   // on A
    Congruence right;  // on B
  };

  // delta is a congruence of A x B (row-major encoding). Returns the
  // factors when delta = left x right, nothing otherwise.
  std::optional<Factorization> factorize(FiniteAlgebra const& a,
                                         FiniteAlgebra const& b,
                                         Congruence const&    delta);

  // left x right as a partition of A x B.
  Congruence product_congruence(Congruence const& left, Congruence const& right);

  struct SkewWitness {
    Congruence        gamma;
    std::vector<Pair> generators;  // a minimum-size generating set
    bool              violates_first;   // Pi_1 meet (Pi_2 v gamma) not in gamma
    bool              violates_second;  // Pi_2 meet (Pi_1 v gamma) not in gamma
  };

  struct PrincipalWitness {
    Pair       pair;     // product elements
    Congruence generated;
    Congruence expected;  // theta(a, c) x theta(b, d)
  };

  // Three independent checks that Con(A x B) has the Fraser-Horn property.
  struct FhpReport {
    std::size_t congruence_count   = 0;
    bool        all_factorize      = true;  // (i)
    bool        projection_bounds  = true;  // (ii)
    bool        principal_products = true;  // (iii)
    std::size_t skew_count         = 0;
    std::optional<SkewWitness>      witness;            // first by canonical witness order
    std::vector<SkewWitness>        minimal_witnesses;  // all with the minimum generator count
    std::optional<PrincipalWitness> principal_witness;

    bool holds() const noexcept {
      return all_factorize && projection_bounds && principal_products;
    }
    bool verdicts_agree() const noexcept {
      return all_factorize == projection_bounds && projection_bounds == principal_products;
    }
  };

  // Throws CapExceeded when |A x B| > caps.congruence.
  //
  // Skew witnesses are ordered by: size of a minimum generating set, then
  // number of identified pairs, then violations of the Pi_1 inequality
  // before Pi_2-only ones, then the canonical congruence order.
  FhpReport check_fhp(AlgebraPtr a, AlgebraPtr b, Caps const& caps = {});

  // Size of a minimum set of pairs generating gamma, together with one such
  // set (lexicographically least among minimum ones).
  std::vector<Pair> minimum_generators(FiniteAlgebra const& algebra, Congruence const& gamma);

}  // namespace centrax
