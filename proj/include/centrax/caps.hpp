#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace centrax {

  // Size limits for the exhaustive algorithms. Exceeding one raises
  // CapExceeded instead of running for an unbounded time.
  struct Caps {
    std::size_t carrier      = 16;       // input algebras
    std::size_t product      = 64;       // constructed products
    std::size_t congruence   = 12;       // Con(A) enumeration
    std::size_t power        = 1 << 20;  // vectors in a free-algebra power
    std::size_t chain_length = 64;       // Maltsev chain terms
    std::size_t term_depth   = 16;       // Maltsev chain term depth

    // Accepts either a bare integer (sets the Con(A) enumeration cap) or a
    // comma separated list such as "carrier=20,congruence=14,power=4096".
    // Returns nullopt on a malformed spec.
    static std::optional<Caps> parse(std::string_view spec, Caps base);
    static std::optional<Caps> parse(std::string_view spec);

    // Defaults overridden by the CENTRAX_CAP environment variable, if set.
    static Caps from_environment();
  };

}  // namespace centrax
