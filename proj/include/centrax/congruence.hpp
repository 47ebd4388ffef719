#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "centrax/algebra.hpp"
#include "centrax/caps.hpp"
#include "centrax/partition.hpp"

namespace centrax {

  // Least congruence of A containing the given pairs. Union-find merge,
  // then every merged pair is pushed through every unary polynomial
  // (one operation with all arguments but one fixed) until stable.
  Congruence cg(FiniteAlgebra const& algebra, std::span<Pair const> pairs);

  // Least congruence containing base and the given pairs; base must already
  // be a congruence of A.
  Congruence cg(FiniteAlgebra const&  algebra,
                Congruence const&     base,
                std::span<Pair const> pairs);

  Congruence principal(FiniteAlgebra const& algebra, Element a, Element b);

  // theta(c, d): generated by the pairs (c_i, d_i).
  Congruence cg_tuples(FiniteAlgebra const&     algebra,
                       std::span<Element const> c,
                       std::span<Element const> d);

  bool is_compatible(FiniteAlgebra const& algebra, Congruence const& theta);

  // Throw ValidationError when the bases differ.
  Congruence join(Congruence const& theta, Congruence const& delta);
  Congruence meet(Congruence const& theta, Congruence const& delta);

  // theta o delta = {(x, z) : x theta y, y delta z for some y}.
  Relation compose(Congruence const& theta, Congruence const& delta);
  bool     permutes(Congruence const& theta, Congruence const& delta);

  // (theta_1..theta_k, x_1..x_k) with (x_i, x_j) in theta_i v theta_j.
  struct CongruenceSystem {
    std::vector<std::pair<Congruence, Element>> equations;
  };

  // Least solution x with (x, x_i) in theta_i for all i, if any. Throws
  // PreconditionError when the compatibility condition fails.
  std::optional<Element> solve_system(CongruenceSystem const& system);

  // Con(A) in canonical (lexicographic representative) order. Throws
  // CapExceeded when |A| > caps.congruence.
  std::vector<Congruence> all_congruences(FiniteAlgebra const& algebra,
                                          Caps const&          caps = {});

  // Certificate that (a, b) lies in theta(c, d).
  //
  // Terms have arity m + p: variables 0..m-1 take the generator tuple,
  // variables m..m+p-1 take the parameters. With 1-based indices:
  //   a = t_1(c, lambda),             b = t_k(d, lambda),
  //   t_i(c, lambda) = t_{i+1}(c, lambda)   for even i < k,
  //   t_i(d, lambda) = t_{i+1}(d, lambda)   for odd i < k,
  // and k is odd.
  struct MaltsevChain {
    std::vector<Term> terms;
    Tuple             parameters;
    Element           a = 0;
    Element           b = 0;
    Tuple             c;
    Tuple             d;

    std::size_t length() const noexcept {
      return terms.size();
    }
  };

  // Builds the chain by recording which unary polynomial caused each merge
  // during the closure of theta(c, d), then walking the merge forest from a
  // to b. Throws PreconditionError if (a, b) is not in theta(c, d), and
  // CapExceeded if the chain or a term exceeds caps.chain_length or
  // caps.term_depth.
  MaltsevChain maltsev_witness(FiniteAlgebra const&     algebra,
                               Element                  a,
                               Element                  b,
                               std::span<Element const> c,
                               std::span<Element const> d,
                               Caps const&              caps = {});

  // Empty when every defining equation of the chain holds in A; otherwise a
  // description of the first failing equation.
  std::optional<std::string> chain_violation(FiniteAlgebra const& algebra,
                                             MaltsevChain const&  chain);

  // Names chain variables u0.. for generators and w0.. for parameters.
  std::string chain_variable_name(std::size_t generators, std::size_t index);

}  // namespace centrax
