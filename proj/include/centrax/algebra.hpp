#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centrax/caps.hpp"
#include "centrax/partition.hpp"
#include "centrax/types.hpp"

namespace centrax {

  struct Symbol {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(Symbol const&, Symbol const&) = default;
  };

  class Signature {
   public:
    Signature() = default;
    // Throws ValidationError on duplicate names.
    explicit Signature(std::vector<Symbol> symbols);

    std::size_t size() const noexcept {
      return _symbols.size();
    }
    Symbol const& operator[](std::size_t i) const {
      return _symbols[i];
    }
    std::vector<Symbol> const& symbols() const noexcept {
      return _symbols;
    }
    std::optional<std::size_t> find(std::string_view name) const;

    friend bool operator==(Signature const&, Signature const&) = default;

   private:
    std::vector<Symbol> _symbols;
  };

  // An algebra as read from a file, before any checking. Table entries and
  // constants are kept signed and wide so out-of-range input is reportable.
  struct AlgebraDescription {
    std::string                                  name;
    long long                                    size = 0;
    std::vector<Symbol>                          signature;
    std::map<std::string, std::vector<long long>> tables;
    std::vector<long long>                       zero;
    std::vector<long long>                       one;
    std::vector<std::string>                     display;
  };

  // A finite algebra on {0..size-1} with designated constant tuples zero and
  // one of common length width() >= 1. Tables are row-major with the first
  // argument most significant. Immutable after construction.
  class FiniteAlgebra {
   public:
    // Both constructors validate and throw ValidationError on failure.
    explicit FiniteAlgebra(AlgebraDescription const& raw);
    FiniteAlgebra(std::string              name,
                  std::size_t              size,
                  Signature                signature,
                  std::vector<Tuple>       tables,
                  Tuple                    zero,
                  Tuple                    one,
                  std::vector<std::string> display = {});

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t size() const noexcept {
      return _size;
    }
    Signature const& signature() const noexcept {
      return _signature;
    }
    Tuple const& zero() const noexcept {
      return _zero;
    }
    Tuple const& one() const noexcept {
      return _one;
    }
    // Length m of the constant tuples.
    std::size_t width() const noexcept {
      return _zero.size();
    }

    std::span<Element const> table(std::size_t op) const {
      return _tables[op];
    }

    Element apply(std::size_t op, std::span<Element const> args) const;

    Element apply(std::size_t op, Element a, Element b) const {
      return _tables[op][a * _size + b];
    }

    std::string display(Element x) const;
    std::vector<std::string> const& display_names() const noexcept {
      return _display;
    }
    // Looks up a display name, falling back to a decimal index.
    std::optional<Element> element_named(std::string_view name) const;

    AlgebraDescription describe() const;

    FiniteAlgebra renamed(std::string name) const;

   private:
    void validate() const;

    std::string              _name;
    std::size_t              _size = 0;
    Signature                _signature;
    std::vector<Tuple>       _tables;
    Tuple                    _zero;
    Tuple                    _one;
    std::vector<std::string> _display;
  };

  using AlgebraPtr = std::shared_ptr<FiniteAlgebra const>;

  inline AlgebraPtr share(FiniteAlgebra algebra) {
    return std::make_shared<FiniteAlgebra const>(std::move(algebra));
  }

  FiniteAlgebra validate_algebra(AlgebraDescription const& raw);

  // Same carrier size, signature, tables and constants; names are ignored.
  bool same_structure(FiniteAlgebra const& a, FiniteAlgebra const& b);

  // Number of entries in a table of the given arity: size^arity.
  std::size_t table_length(std::size_t size, std::size_t arity);

  ////////////////////////////////////////////////////////////////////////
  // Terms
  ////////////////////////////////////////////////////////////////////////

  // A term over a signature. Leaves are variables or components of the
  // designated constant tuples zero/one of whatever algebra it is
  // evaluated in.
  class Term {
   public:
    enum class Kind : std::uint8_t { variable, operation, zero, one };

    static Term variable(std::size_t index);
    static Term operation(std::size_t symbol, std::vector<Term> args);
    static Term zero(std::size_t component);
    static Term one(std::size_t component);

    Kind kind() const noexcept {
      return _kind;
    }
    // Variable index, symbol index, or constant component depending on kind.
    std::size_t index() const noexcept {
      return _index;
    }
    std::vector<Term> const& args() const noexcept {
      return _args;
    }

    std::size_t depth() const;
    // One more than the largest variable index, 0 for closed terms.
    std::size_t variable_bound() const;

    // Rewrites every variable leaf.
    Term substitute(std::function<Term(std::size_t)> const& f) const;

    friend bool operator==(Term const&, Term const&) = default;

   private:
    Term(Kind kind, std::size_t index, std::vector<Term> args)
        : _kind(kind), _index(index), _args(std::move(args)) {}

    Kind              _kind  = Kind::variable;
    std::size_t       _index = 0;
    std::vector<Term> _args;
  };

  // Throws ValidationError if a symbol index or arity does not fit sig.
  void check_term(Signature const& sig, Term const& t);

  // Throws PreconditionError on an unbound variable.
  Element eval_term(FiniteAlgebra const&     algebra,
                    Term const&              t,
                    std::span<Element const> assignment);

  using VariableNamer = std::function<std::string(std::size_t)>;

  // (symbol arg ...) for operations, bare names for variables, (zero i) /
  // (one i) for designated constants; a nullary symbol prints as (name).
  std::string to_sexpr(Term const& t, Signature const& sig, VariableNamer const& name);

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct Homomorphism {
    AlgebraPtr dom;
    AlgebraPtr cod;
    Tuple      map;

    Element operator()(Element x) const {
      return map[x];
    }
    Tuple operator()(std::span<Element const> xs) const;

    bool injective() const;
    bool surjective() const;
  };

  // Checks totality, range, designated constants and every operation.
  // Throws HomomorphismError with a violating symbol and tuple.
  Homomorphism validate_homomorphism(AlgebraPtr dom, AlgebraPtr cod, Tuple map);

  Homomorphism identity_homomorphism(AlgebraPtr algebra);

  // g after f.
  Homomorphism compose(Homomorphism const& g, Homomorphism const& f);

  // All homomorphisms dom -> cod (as maps), by backtracking. The order is
  // lexicographic on the maps.
  std::vector<Tuple> all_homomorphisms(FiniteAlgebra const& dom,
                                       FiniteAlgebra const& cod);

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  // Direct product with row-major element encoding: the first factor is
  // the most significant coordinate.
  struct ProductAlgebra {
    std::vector<AlgebraPtr>   factors;
    AlgebraPtr                algebra;
    std::vector<Homomorphism> projections;

    Element encode(std::span<Element const> coords) const;
    Tuple   decode(Element x) const;
  };

  // Throws ValidationError on a signature or width mismatch and CapExceeded
  // when the product is larger than caps.product.
  ProductAlgebra product(std::vector<AlgebraPtr> const& factors, Caps const& caps = {});

  struct QuotientAlgebra {
    AlgebraPtr         base;
    Congruence         theta;
    std::vector<Tuple> blocks;
    AlgebraPtr         algebra;
    Homomorphism       canonical;
  };

  // Throws ValidationError if theta is not a congruence of base.
  QuotientAlgebra quotient(AlgebraPtr base, Congruence theta);

  struct Subalgebra {
    AlgebraPtr   algebra;
    Homomorphism embedding;
  };

  // Least subuniverse containing gens and the designated constants, with
  // elements listed in increasing order of the parent carrier.
  Subalgebra subalgebra_generated(AlgebraPtr parent, std::span<Element const> gens);

  // True iff collapsing zero with one collapses the whole algebra.
  bool check_zero_one(FiniteAlgebra const& algebra);

}  // namespace centrax
