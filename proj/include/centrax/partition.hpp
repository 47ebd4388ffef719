#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "centrax/types.hpp"

namespace centrax {

  // An equivalence relation on {0..n-1} in canonical form: rep(x) is the
  // least element of the block of x. Two congruences are equal iff their
  // representative arrays are equal, and the array order is the canonical
  // order used for every report.
  //
  // Compatibility with the operations of an algebra is a property of the
  // pair (algebra, partition); see is_compatible in congruence.hpp.
  class Congruence {
   public:
    Congruence() = default;

    static Congruence identity(std::size_t n);
    static Congruence universal(std::size_t n);

    // Any labelling of the carrier; elements with equal labels share a block.
    static Congruence from_labels(std::span<Element const> labels);

    // Throws ValidationError unless rep is in canonical form.
    static Congruence from_rep(Tuple rep);

    std::size_t base_size() const noexcept {
      return _rep.size();
    }

    Element rep(Element x) const {
      return _rep[x];
    }

    std::span<Element const> reps() const noexcept {
      return _rep;
    }

    bool related(Element a, Element b) const {
      return _rep[a] == _rep[b];
    }

    std::size_t block_count() const;

    // Blocks ordered by least element, each block sorted.
    std::vector<Tuple> blocks() const;

    // x -> index of its block in blocks().
    Tuple block_indices() const;

    bool is_identity() const;
    bool is_universal() const;

    // Inclusion as relations.
    bool contained_in(Congruence const& other) const;

    // Number of unordered pairs {a,b}, a != b, that are related.
    std::size_t nontrivial_pairs() const;

    friend bool operator==(Congruence const&, Congruence const&) = default;
    friend auto operator<=>(Congruence const&, Congruence const&) = default;

   private:
    explicit Congruence(Tuple rep) : _rep(std::move(rep)) {}

    Tuple _rep;
  };

  // A binary relation on {0..n-1} as a dense bit matrix.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n) : _n(n), _bits(n * n, 0) {}

    static Relation of(Congruence const& theta);

    std::size_t base_size() const noexcept {
      return _n;
    }

    bool contains(Element a, Element b) const {
      return _bits[a * _n + b] != 0;
    }

    void insert(Element a, Element b) {
      _bits[a * _n + b] = 1;
    }

    std::size_t pair_count() const;

    friend bool operator==(Relation const&, Relation const&) = default;

   private:
    std::size_t       _n = 0;
    std::vector<char> _bits;
  };

}  // namespace centrax
