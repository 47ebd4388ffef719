#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "centrax/algebra.hpp"
#include "centrax/caps.hpp"
#include "centrax/central.hpp"

namespace centrax {

  //   A ---top---> A/theta(S)
  //   |f               |right
  //   v                v
  //   B --bottom-> B/theta(f(S))
  struct PushoutSquare {
    Homomorphism      f;
    std::vector<Pair> collapse;  // S
    QuotientAlgebra   top;
    QuotientAlgebra   bottom;
    Homomorphism      right;

    // bottom o f = right o top, checked on every element of A.
    bool commutes() const;
  };

  PushoutSquare pushout_quotient(Homomorphism const& f, std::span<Pair const> collapse);

  // Universal property of nu_S: for g : A -> C identifying every pair of S,
  // the unique h : A/theta(S) -> C with h o nu_S = g. Throws
  // PreconditionError if g does not identify S.
  Homomorphism factor_through_quotient(QuotientAlgebra const& q,
                                       std::span<Pair const>  collapse,
                                       Homomorphism const&    g);

  // Pushout property of the square against the cocones
  // (nu_gamma : B -> B/gamma, A/theta(S) -> B/gamma) for every gamma in
  // Con(B) containing theta(f(S)): each must factor through bottom and right
  // by a unique map. Returns the number of cocones verified; throws Error on
  // a failure.
  std::size_t verify_pushout_cocones(PushoutSquare const& square, Caps const& caps = {});

  struct StabilityCase {
    Tuple e;
    Tuple g;         // complement of e in A
    Tuple fe;
    Tuple fg;
    std::size_t left_size  = 0;  // |B / theta(1, f(g))|
    std::size_t right_size = 0;  // |B / theta(1, f(e))|
    bool        bijective  = false;
  };

  struct StabilityReport {
    bool                       stable = true;
    std::size_t                squares = 0;
    std::vector<StabilityCase> cases;
    std::optional<std::size_t> first_failure;  // index into cases
  };

  // For every complementary central pair (e, g) of dom f, pushes the
  // decomposition A = A/theta(1,g) x A/theta(1,e) along f and checks that
  // B -> B/theta(1,f(g)) x B/theta(1,f(e)) is bijective. Throws
  // PreconditionError unless theta_{1,e} = theta(1,e) holds on both dom f
  // and cod f.
  StabilityReport stability_pushout_check(Homomorphism const&   f,
                                          CentralAlgebra const& dom_centrals,
                                          CentralAlgebra const& cod_centrals);

  StabilityReport stability_pushout_check(Homomorphism const& f, Caps const& caps = {});

  struct CodisjointnessReport {
    bool        trivial    = false;
    std::size_t left_size  = 0;  // |A / theta(0, 1)|
    std::size_t right_size = 0;  // |B / theta(0, 1)|
  };

  // The pushout of A <- A x B -> B identifies 0 with 1 on both legs; it is
  // terminal iff A/theta(0,1) and B/theta(0,1) are both trivial.
  CodisjointnessReport codisjointness_check(FiniteAlgebra const& a, FiniteAlgebra const& b);

}  // namespace centrax
