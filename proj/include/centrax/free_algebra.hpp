#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "centrax/algebra.hpp"
#include "centrax/caps.hpp"
#include "centrax/congruence.hpp"
#include "centrax/formula.hpp"

namespace centrax {

  // The free algebra on k generators in the variety generated by one finite
  // algebra G, realised as the subalgebra of G^(G^k) generated by the k
  // coordinate projections and the constants.
  struct FreeAlgebra {
    AlgebraPtr         algebra;
    std::size_t        rank = 0;
    Tuple              generators;  // element of algebra for each variable
    std::vector<Term>  term_table;  // one minimal-depth term per element
    std::vector<Tuple> vectors;     // element -> its vector in G^(G^k)
  };

  // Breadth-first generation by depth. Within a depth level symbols are
  // tried in signature order and argument tuples in order of discovery, so
  // each representative is minimal-depth with lexicographic tie-breaking.
  //
  // Throws CapExceeded when |G|^k is not addressable, or when the generated
  // algebra outgrows caps.power (only checked if |G|^(|G|^k) itself exceeds
  // caps.power).
  FreeAlgebra free_algebra(FiniteAlgebra const& generator, std::size_t rank, Caps const& caps = {});

  // The homomorphism F -> target extending generator i |-> images[i],
  // obtained by evaluating the term table in target. Throws
  // HomomorphismError if target is not in the variety (the induced map fails
  // to be a homomorphism).
  Homomorphism induced_homomorphism(FreeAlgebra const&       free,
                                    AlgebraPtr               target,
                                    std::span<Element const> images);

  struct RightFormulaSynthesis {
    PCFormula    formula;
    MaltsevChain chain;
    FreeAlgebra  two;   // F(x, y)
    FreeAlgebra  one;   // F(y)
    AlgebraPtr   pair;  // P = F(x, y) x F(y)
  };

  // Builds P = F(x, y) x F(y), extracts a Maltsev chain for
  // ((x, y), (y, y)) in theta^P([1,1], [0,1]) and reads off
  // phi(x, y, z) = pi(x, y, 1, z). The result satisfies
  // A x B |= phi((a,b), (c,d), [0,1]) iff b = d for A, B in the variety.
  //
  // Throws PreconditionError if the premise fails on the evidence available
  // (theta_{1,e} != theta(1, e) on G or G x G, or the pair is not in the
  // congruence), and CapExceeded from the free algebra or chain caps.
  RightFormulaSynthesis synthesize_right_formula(AlgebraPtr generator, Caps const& caps = {});

}  // namespace centrax
