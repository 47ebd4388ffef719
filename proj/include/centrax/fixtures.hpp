#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "centrax/algebra.hpp"

// Built-in algebras and homomorphisms. Lattices use the signature
// (meet, join, 0, 1), semilattices (meet, 0, 1) or (join, 0, 1), rings
// (add, mul, neg, 0, 1); the designated constants are the nullary symbols.
namespace centrax::fixtures {

  FiniteAlgebra trivial();

  // Bounded lattices.
  FiniteAlgebra chain(std::size_t n);
  FiniteAlgebra boolean_lattice(std::size_t k);  // 2^k, elements (b_1,..,b_k)
  FiniteAlgebra m3();                            // D = {0, a, b, c, 1}
  FiniteAlgebra n5();                            // {0, a, b, c, 1}, a < c

  enum class Semilattice { meet, join };

  // Bounded semilattice on {0..n-1} ordered by leq (row-major n x n, leq[i*n+j]
  // means i <= j). Throws ValidationError if the order lacks the required
  // meets (or joins) or a bottom and top.
  FiniteAlgebra semilattice_from_order(std::string              name,
                                       std::size_t              n,
                                       std::vector<bool> const& leq,
                                       Semilattice              kind,
                                       std::vector<std::string> display = {});

  FiniteAlgebra meet_chain(std::size_t n);
  FiniteAlgebra join_chain(std::size_t n);
  FiniteAlgebra meet_power(std::size_t k);
  FiniteAlgebra join_power(std::size_t k);
  FiniteAlgebra meet_m3();  // M3 as a bounded meet semilattice

  // Z_n as a commutative ring with unit.
  FiniteAlgebra zmod(std::size_t n);

  // Two elements, zero = one = 0: fails check_zero_one on purpose.
  FiniteAlgebra degenerate();

  // size elements, `binary` binary operations f0.., `unary` unary ones
  // g0..; zero = (0), one = (size-1). Tables come from a 64-bit Mersenne
  // Twister reduced mod size, so a seed reproduces bit-exactly.
  FiniteAlgebra random_algebra(std::uint64_t seed,
                               std::size_t   size,
                               std::size_t   binary,
                               std::size_t   unary = 0);

  // alpha : 2x2 -> 2x2x2 (bounded meet semilattices),
  // (0,0)->(0,0,0), (0,1)->(1,0,0), (1,0)->(0,0,1), (1,1)->(1,1,1).
  Homomorphism alpha();

  // Inclusion of the four-element Boolean lattice into D.
  Homomorphism c_into_d();

  struct Params {
    std::optional<std::size_t>   n;
    std::optional<std::size_t>   k;
    std::optional<std::uint64_t> seed;
  };

  using Fixture = std::variant<FiniteAlgebra, Homomorphism>;

  // Throws ValidationError on an unknown name or missing parameter.
  Fixture build(std::string_view name, Params const& params = {});

  // Catalog entries with a one-line description each.
  std::vector<std::pair<std::string, std::string>> catalog();

}  // namespace centrax::fixtures
