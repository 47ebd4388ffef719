#include "centrax/partition.hpp"

#include <algorithm>
#include <string>

#include "centrax/error.hpp"

namespace centrax {

  Congruence Congruence::identity(std::size_t n) {
    Tuple rep(n);
    for (std::size_t x = 0; x < n; ++x) {
      rep[x] = static_cast<Element>(x);
    }
    return Congruence(std::move(rep));
  }

  Congruence Congruence::universal(std::size_t n) {
    return Congruence(Tuple(n, 0));
  }

  Congruence Congruence::from_labels(std::span<Element const> labels) {
    std::size_t const n = labels.size();
    Tuple             rep(n);
    for (std::size_t x = 0; x < n; ++x) {
      rep[x] = static_cast<Element>(x);
      for (std::size_t y = 0; y < x; ++y) {
        if (labels[y] == labels[x]) {
          rep[x] = rep[y];
          break;
        }
      }
    }
    return Congruence(std::move(rep));
  }

  Congruence Congruence::from_rep(Tuple rep) {
    for (std::size_t x = 0; x < rep.size(); ++x) {
      if (rep[x] > x || rep[rep[x]] != rep[x]) {
        throw ValidationError("representative array is not canonical at index "
                              + std::to_string(x));
      }
    }
    return Congruence(std::move(rep));
  }

  std::size_t Congruence::block_count() const {
    std::size_t count = 0;
    for (std::size_t x = 0; x < _rep.size(); ++x) {
      count += (_rep[x] == x);
    }
    return count;
  }

  std::vector<Tuple> Congruence::blocks() const {
    Tuple const        index = block_indices();
    std::vector<Tuple> result(block_count());
    for (std::size_t x = 0; x < _rep.size(); ++x) {
      result[index[x]].push_back(static_cast<Element>(x));
    }
    return result;
  }

  Tuple Congruence::block_indices() const {
    Tuple   index(_rep.size());
    Element next = 0;
    for (std::size_t x = 0; x < _rep.size(); ++x) {
      index[x] = _rep[x] == x ? next++ : index[_rep[x]];
    }
    return index;
  }

  bool Congruence::is_identity() const {
    return block_count() == _rep.size();
  }

  bool Congruence::is_universal() const {
    return std::all_of(_rep.begin(), _rep.end(), [](Element r) { return r == 0; });
  }

  bool Congruence::contained_in(Congruence const& other) const {
    // Every block of this must sit inside a block of other; comparing each
    // element with its representative is enough.
    for (std::size_t x = 0; x < _rep.size(); ++x) {
      if (!other.related(static_cast<Element>(x), _rep[x])) {
        return false;
      }
    }
    return true;
  }

  std::size_t Congruence::nontrivial_pairs() const {
    std::size_t total = 0;
    for (auto const& block : blocks()) {
      total += block.size() * (block.size() - 1) / 2;
    }
    return total;
  }

  Relation Relation::of(Congruence const& theta) {
    Relation    r(theta.base_size());
    std::size_t n = theta.base_size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (theta.related(a, b)) {
          r.insert(a, b);
        }
      }
    }
    return r;
  }

  std::size_t Relation::pair_count() const {
    return static_cast<std::size_t>(std::count(_bits.begin(), _bits.end(), 1));
  }

}  // namespace centrax
