#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centrax/algebra.hpp"
#include "centrax/caps.hpp"
#include "centrax/factor.hpp"
#include "centrax/formula.hpp"
#include "centrax/partition.hpp"

namespace centrax {

  // A central element e with its factor pair: theta0 = theta_{0,e} and
  // theta1 = theta_{1,e}, so that [e, 0] lies in theta0 and [e, 1] in theta1.
  struct CentralElement {
    Tuple      e;
    Congruence theta0;
    Congruence theta1;
  };

  // Z(A) with its Boolean operations, built once from the factor pairs of A
  // and then queried by table lookup. Elements are sorted by their tuple.
  class CentralAlgebra {
   public:
    CentralAlgebra() = default;

    AlgebraPtr const& algebra() const noexcept {
      return _algebra;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<CentralElement> const& elements() const noexcept {
      return _elements;
    }
    CentralElement const& operator[](std::size_t i) const {
      return _elements[i];
    }

    std::optional<std::size_t> find(Tuple const& e) const;
    bool contains(Tuple const& e) const {
      return find(e).has_value();
    }

    // Index-level operations.
    std::size_t meet(std::size_t i, std::size_t j) const {
      return _meet[i * size() + j];
    }
    std::size_t join(std::size_t i, std::size_t j) const {
      return _join[i * size() + j];
    }
    std::size_t complement(std::size_t i) const {
      return _complement[i];
    }
    std::size_t bottom() const noexcept {
      return _bottom;
    }
    std::size_t top() const noexcept {
      return _top;
    }

    // e <= f iff theta_{0,e} is contained in theta_{0,f}.
    bool leq(std::size_t i, std::size_t j) const;

    // Tuple-level operations; throw PreconditionError on a non-central tuple.
    Tuple complement(Tuple const& e) const;
    Tuple meet(Tuple const& e, Tuple const& f) const;
    Tuple join(Tuple const& e, Tuple const& f) const;

    // e and f are complementary central elements.
    bool complementary(Tuple const& e, Tuple const& f) const;

    friend CentralAlgebra central_elements(AlgebraPtr, Caps const&);

   private:
    std::size_t index_of(Tuple const& e) const;

    AlgebraPtr                  _algebra;
    std::vector<CentralElement> _elements;
    std::vector<std::size_t>    _meet;
    std::vector<std::size_t>    _join;
    std::vector<std::size_t>    _complement;
    std::size_t                 _bottom = 0;
    std::size_t                 _top    = 0;
  };

  // Central element of the factor pair (theta, delta): the unique e with
  // [e, 0] in theta and [e, 1] in delta, solved coordinatewise. Empty when
  // some coordinate system has no solution.
  std::optional<Tuple> central_of(FiniteAlgebra const& algebra, FactorPair const& pair);

  // Z(A). Requires check_zero_one(A). Throws PreconditionError when the map
  // from factor pairs to central elements is not a bijection (A violates
  // the determining property), and CapExceeded past caps.congruence.
  CentralAlgebra central_elements(AlgebraPtr algebra, Caps const& caps = {});

  // The Boolean operations computed directly from their defining systems:
  //   complement:  [z, 1] in theta_{0,e},            [z, 0] in theta_{1,e}
  //   meet:        [z, 0] in theta_{0,e} ^ theta_{0,f}, [z, 1] in theta_{1,e} v theta_{1,f}
  //   join:        [z, 0] in theta_{0,e} v theta_{0,f}, [z, 1] in theta_{1,e} ^ theta_{1,f}
  // Throw PreconditionError when a system has no solution.
  Tuple complement_by_system(FiniteAlgebra const& algebra, CentralElement const& e);
  Tuple meet_by_system(FiniteAlgebra const& algebra, CentralElement const& e, CentralElement const& f);
  Tuple join_by_system(FiniteAlgebra const& algebra, CentralElement const& e, CentralElement const& f);

  // Membership characterisations: a = e meet f iff [0, a] in theta_{0,e} and
  // [a, f] in theta_{1,e}; a = e join f iff [1, a] in theta_{1,e} and [a, f]
  // in theta_{0,e}.
  bool is_meet_by_membership(FiniteAlgebra const& algebra,
                             CentralElement const& e,
                             Tuple const&          f,
                             Tuple const&          a);
  bool is_join_by_membership(FiniteAlgebra const& algebra,
                             CentralElement const& e,
                             Tuple const&          f,
                             Tuple const&          a);

  struct DpReport {
    bool        holds      = true;
    std::size_t pair_count = 0;  // complementary central pairs examined
    // First complementary pair (e, f) not determined by exactly one factor pair.
    std::optional<std::pair<Tuple, Tuple>> witness;
    std::size_t                            witness_matches = 0;
  };

  // For every complementary central pair (e, f) there is exactly one factor
  // pair (theta, delta) with (e_i,0_i), (f_i,1_i) in theta and (e_i,1_i),
  // (f_i,0_i) in delta.
  DpReport check_dp(FiniteAlgebra const& algebra, Caps const& caps = {});

  struct DefinabilityReport {
    bool                 holds = true;
    std::size_t          checked = 0;
    std::optional<Tuple> witness;  // first central element failing the equality
  };

  // theta_{1,e} = theta(1, e) for every central e.
  DefinabilityReport check_rexdfc(CentralAlgebra const& centrals);
  // theta_{0,e} = theta(0, e) for every central e.
  DefinabilityReport check_lexdfc(CentralAlgebra const& centrals);

  struct PreservationReport {
    Homomorphism hom;
    bool         preserves_centrals      = false;
    bool         preserves_complementary = false;
    bool         boolean_hom             = false;
    std::optional<Tuple>                   non_central;     // e with f(e) not central
    std::optional<std::pair<Tuple, Tuple>> broken_pair;     // e <> g with f(e), f(g) not
    std::optional<std::string>             boolean_failure; // first failing Boolean law
  };

  // dom_centrals and cod_centrals must be Z(dom f) and Z(cod f).
  PreservationReport analyze_homomorphism(Homomorphism const&   f,
                                          CentralAlgebra const& dom_centrals,
                                          CentralAlgebra const& cod_centrals);

  PreservationReport analyze_homomorphism(Homomorphism const& f, Caps const& caps = {});

  struct FormulaCheck {
    bool        holds   = true;
    std::size_t checked = 0;
    // (a, b, c, d): A x B |= phi((a,c), (b,d), [0,1]) disagrees with the target.
    std::optional<std::array<Element, 4>> counterexample;
  };

  // (R): A x B |= phi((a,c), (b,d), [0,1]) iff c = d, for all a, b in A and
  // c, d in B. (L) is the same with a = b. Exhaustive over the four
  // arguments; runs on the parallel kernel.
  FormulaCheck check_formula_r(Formula const& phi, AlgebraPtr a, AlgebraPtr b, Caps const& caps = {});
  FormulaCheck check_formula_l(Formula const& phi, AlgebraPtr a, AlgebraPtr b, Caps const& caps = {});

}  // namespace centrax
