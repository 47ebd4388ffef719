#include "centrax/fixtures.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "centrax/error.hpp"

namespace centrax::fixtures {

  namespace {
    Signature lattice_signature() {
      return Signature({{"meet", 2}, {"join", 2}, {"0", 0}, {"1", 0}});
    }

    Signature semilattice_signature(Semilattice kind) {
      return Signature({{kind == Semilattice::meet ? "meet" : "join", 2}, {"0", 0}, {"1", 0}});
    }

    Tuple binary_table(std::size_t n, auto&& f) {
      Tuple t(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          t[x * n + y] = f(x, y);
        }
      }
      return t;
    }

    void check_order(std::size_t n, std::vector<bool> const& leq) {
      if (leq.size() != n * n) {
        throw ValidationError("order matrix must have n*n entries");
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (!leq[x * n + x]) {
          throw ValidationError("order is not reflexive");
        }
        for (std::size_t y = 0; y < n; ++y) {
          if (x != y && leq[x * n + y] && leq[y * n + x]) {
            throw ValidationError("order is not antisymmetric");
          }
          for (std::size_t z = 0; z < n; ++z) {
            if (leq[x * n + y] && leq[y * n + z] && !leq[x * n + z]) {
              throw ValidationError("order is not transitive");
            }
          }
        }
      }
    }

    // Greatest lower bound (or least upper bound when upper) of x and y.
    Element bound(std::size_t n, std::vector<bool> const& leq, Element x, Element y, bool upper) {
      auto below = [&](std::size_t a, std::size_t b) { return upper ? leq[b * n + a] : leq[a * n + b]; };
      auto lower = [&](std::size_t z) { return below(z, x) && below(z, y); };
      for (Element z = 0; z < n; ++z) {
        if (!lower(z)) {
          continue;
        }
        bool greatest = true;
        for (Element w = 0; w < n && greatest; ++w) {
          greatest = !lower(w) || below(w, z);
        }
        if (greatest) {
          return z;
        }
      }
      throw ValidationError("elements " + std::to_string(x) + " and " + std::to_string(y)
                            + " have no " + (upper ? "join" : "meet"));
    }

    Element extreme(std::size_t n, std::vector<bool> const& leq, bool top) {
      for (Element z = 0; z < n; ++z) {
        bool all = true;
        for (std::size_t x = 0; x < n; ++x) {
          all = all && (top ? leq[x * n + z] : leq[z * n + x]);
        }
        if (all) {
          return z;
        }
      }
      throw ValidationError(top ? "order has no top" : "order has no bottom");
    }

    FiniteAlgebra lattice_from_order(std::string              name,
                                     std::size_t              n,
                                     std::vector<bool> const& leq,
                                     std::vector<std::string> display) {
      check_order(n, leq);
      std::vector<Tuple> tables{
          binary_table(n, [&](Element x, Element y) { return bound(n, leq, x, y, false); }),
          binary_table(n, [&](Element x, Element y) { return bound(n, leq, x, y, true); }),
          Tuple{extreme(n, leq, false)},
          Tuple{extreme(n, leq, true)}};
      Tuple zero{tables[2][0]}, one{tables[3][0]};
      return FiniteAlgebra(std::move(name), n, lattice_signature(), std::move(tables),
                           std::move(zero), std::move(one), std::move(display));
    }

    std::vector<bool> chain_order(std::size_t n) {
      std::vector<bool> leq(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          leq[x * n + y] = x <= y;
        }
      }
      return leq;
    }

    // 0 < a, b, c < 1 with a, b, c pairwise incomparable.
    std::vector<bool> m3_order() {
      std::vector<bool> leq(25, false);
      for (std::size_t x = 0; x < 5; ++x) {
        leq[x * 5 + x] = true;
        leq[0 * 5 + x] = true;
        leq[x * 5 + 4] = true;
      }
      return leq;
    }

    std::vector<std::string> const m3_names{"0", "a", "b", "c", "1"};

    FiniteAlgebra power(FiniteAlgebra const& base, std::size_t k, std::string name) {
      if (k == 0) {
        throw ValidationError("power needs k >= 1");
      }
      if (k == 1) {
        return base.renamed(std::move(name));
      }
      std::vector<AlgebraPtr> factors(k, share(base));
      Caps                    caps;
      caps.product = std::max<std::size_t>(caps.product, std::size_t{1} << k);
      return product(factors, caps).algebra->renamed(std::move(name));
    }

    std::size_t need(std::optional<std::size_t> v, char const* what, std::string_view name) {
      if (!v) {
        throw ValidationError("fixture '" + std::string(name) + "' needs parameter " + what);
      }
      return *v;
    }
  }  // namespace

  FiniteAlgebra trivial() {
    return FiniteAlgebra("trivial", 1, lattice_signature(), {{0}, {0}, {0}, {0}}, {0}, {0});
  }

  FiniteAlgebra chain(std::size_t n) {
    if (n == 0) {
      throw ValidationError("chain needs n >= 1");
    }
    return lattice_from_order("chain-" + std::to_string(n), n, chain_order(n), {});
  }

  FiniteAlgebra boolean_lattice(std::size_t k) {
    return power(chain(2), k, "boolean-lattice-" + std::to_string(k));
  }

  FiniteAlgebra m3() {
    return lattice_from_order("m3", 5, m3_order(), m3_names);
  }

  FiniteAlgebra n5() {
    // 0 < a < c < 1 and 0 < b < 1.
    std::vector<bool> leq(25, false);
    for (std::size_t x = 0; x < 5; ++x) {
      leq[x * 5 + x] = true;
      leq[0 * 5 + x] = true;
      leq[x * 5 + 4] = true;
    }
    leq[1 * 5 + 3] = true;
    return lattice_from_order("n5", 5, leq, {"0", "a", "b", "c", "1"});
  }

  FiniteAlgebra semilattice_from_order(std::string              name,
                                       std::size_t              n,
                                       std::vector<bool> const& leq,
                                       Semilattice              kind,
                                       std::vector<std::string> display) {
    if (n == 0) {
      throw ValidationError("semilattice needs n >= 1");
    }
    check_order(n, leq);
    bool const         upper = kind == Semilattice::join;
    std::vector<Tuple> tables{
        binary_table(n, [&](Element x, Element y) { return bound(n, leq, x, y, upper); }),
        Tuple{extreme(n, leq, false)},
        Tuple{extreme(n, leq, true)}};
    Tuple zero{tables[1][0]}, one{tables[2][0]};
    return FiniteAlgebra(std::move(name), n, semilattice_signature(kind), std::move(tables),
                         std::move(zero), std::move(one), std::move(display));
  }

  FiniteAlgebra meet_chain(std::size_t n) {
    return semilattice_from_order("meet-chain-" + std::to_string(n), n, chain_order(n),
                                  Semilattice::meet);
  }

  FiniteAlgebra join_chain(std::size_t n) {
    return semilattice_from_order("join-chain-" + std::to_string(n), n, chain_order(n),
                                  Semilattice::join);
  }

  FiniteAlgebra meet_power(std::size_t k) {
    return power(meet_chain(2), k, "meet-power-" + std::to_string(k));
  }

  FiniteAlgebra join_power(std::size_t k) {
    return power(join_chain(2), k, "join-power-" + std::to_string(k));
  }

  FiniteAlgebra meet_m3() {
    return semilattice_from_order("meet-m3", 5, m3_order(), Semilattice::meet, m3_names);
  }

  FiniteAlgebra zmod(std::size_t n) {
    if (n == 0) {
      throw ValidationError("zmod needs n >= 1");
    }
    Tuple neg(n);
    for (Element x = 0; x < n; ++x) {
      neg[x] = static_cast<Element>((n - x) % n);
    }
    std::vector<Tuple> tables{
        binary_table(n, [&](Element x, Element y) { return static_cast<Element>((x + y) % n); }),
        binary_table(n, [&](Element x, Element y) { return static_cast<Element>((x * y) % n); }),
        std::move(neg),
        Tuple{0},
        Tuple{static_cast<Element>(1 % n)}};
    Element const one = tables[4][0];
    return FiniteAlgebra("zmod-" + std::to_string(n), n,
                         Signature({{"add", 2}, {"mul", 2}, {"neg", 1}, {"0", 0}, {"1", 0}}),
                         std::move(tables), {0}, {one});
  }

  FiniteAlgebra degenerate() {
    return FiniteAlgebra("degenerate", 2, Signature({{"meet", 2}}), {{0, 0, 0, 1}}, {0}, {0});
  }

  FiniteAlgebra random_algebra(std::uint64_t seed, std::size_t size, std::size_t binary, std::size_t unary) {
    if (size == 0) {
      throw ValidationError("random algebra needs size >= 1");
    }
    std::mt19937_64     rng(seed);
    std::vector<Symbol> symbols;
    std::vector<Tuple>  tables;
    for (std::size_t i = 0; i < binary + unary; ++i) {
      bool const        is_binary = i < binary;
      std::size_t const len       = is_binary ? size * size : size;
      symbols.push_back({is_binary ? "f" + std::to_string(i) : "g" + std::to_string(i - binary),
                         is_binary ? std::size_t{2} : std::size_t{1}});
      Tuple t(len);
      for (auto& v : t) {
        v = static_cast<Element>(rng() % size);
      }
      tables.push_back(std::move(t));
    }
    return FiniteAlgebra("random-" + std::to_string(seed), size, Signature(std::move(symbols)),
                         std::move(tables), {0}, {static_cast<Element>(size - 1)});
  }

  Homomorphism alpha() {
    return validate_homomorphism(share(meet_power(2)), share(meet_power(3)), {0, 4, 1, 7});
  }

  Homomorphism c_into_d() {
    return validate_homomorphism(share(boolean_lattice(2)), share(m3()), {0, 1, 2, 4});
  }

  Fixture build(std::string_view raw, Params const& params) {
    std::string name(raw);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) {
      return c == '_' ? '-' : static_cast<char>(std::tolower(c));
    });
    if (name == "trivial") {
      return trivial();
    }
    if (name == "chain") {
      return chain(need(params.n, "n", name));
    }
    if (name == "boolean-lattice" || name == "diamond") {
      return boolean_lattice(name == "diamond" ? 2 : need(params.k, "k", name));
    }
    if (name == "m3" || name == "d") {
      return m3();
    }
    if (name == "n5") {
      return n5();
    }
    if (name == "meet-chain") {
      return meet_chain(need(params.n, "n", name));
    }
    if (name == "join-chain") {
      return join_chain(need(params.n, "n", name));
    }
    if (name == "meet-power") {
      return meet_power(need(params.k, "k", name));
    }
    if (name == "join-power") {
      return join_power(need(params.k, "k", name));
    }
    if (name == "meet-m3") {
      return meet_m3();
    }
    if (name == "zmod") {
      return zmod(need(params.n, "n", name));
    }
    if (name == "degenerate") {
      return degenerate();
    }
    if (name == "random") {
      if (!params.seed) {
        throw ValidationError("fixture 'random' needs parameter seed");
      }
      return random_algebra(*params.seed, params.n.value_or(4), params.k.value_or(1));
    }
    if (name == "alpha") {
      return alpha();
    }
    if (name == "c-into-d") {
      return c_into_d();
    }
    throw ValidationError("unknown fixture '" + std::string(raw) + "'");
  }

  std::vector<std::pair<std::string, std::string>> catalog() {
    return {
        {"trivial", "one-element bounded lattice"},
        {"chain", "bounded lattice chain on n elements (--n)"},
        {"boolean-lattice", "bounded lattice 2^k (--k); 'diamond' is k = 2"},
        {"m3", "five-element lattice D = {0, a, b, c, 1}, a, b, c incomparable"},
        {"n5", "five-element lattice 0 < a < c < 1, 0 < b < 1"},
        {"meet-chain", "bounded meet semilattice chain (--n)"},
        {"join-chain", "bounded join semilattice chain (--n)"},
        {"meet-power", "bounded meet semilattice 2^k (--k)"},
        {"join-power", "bounded join semilattice 2^k (--k)"},
        {"meet-m3", "M3 as a bounded meet semilattice"},
        {"zmod", "Z_n as a commutative ring with unit (--n)"},
        {"degenerate", "two elements with zero = one; fails the zero-one check"},
        {"random", "random algebra (--seed, --n size, --k binary operations); zero-one check not guaranteed"},
        {"alpha", "homomorphism 2x2 -> 2x2x2 of bounded meet semilattices"},
        {"c-into-d", "inclusion of the Boolean lattice 2x2 into m3"},
    };
  }

}  // namespace centrax::fixtures
