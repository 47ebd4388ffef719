#include "centrax/factor.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "centrax/congruence.hpp"
#include "centrax/error.hpp"
#include "centrax/kernels.hpp"

namespace centrax {

  bool is_factor_pair(Congruence const& theta, Congruence const& delta) {
    return kernels::complementary(theta, delta);
  }

  std::vector<FactorPair> factor_pairs(FiniteAlgebra const& algebra, Caps const& caps) {
    return factor_pairs(all_congruences(algebra, caps));
  }

  std::vector<FactorPair> factor_pairs(std::vector<Congruence> const& con) {
    std::vector<FactorPair> result;
    for (auto [i, j] : kernels::parallel::factor_pair_indices(con)) {
      result.push_back(FactorPair{con[i], con[j]});
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  Decomposition decompose(AlgebraPtr algebra, FactorPair const& pair, Caps const& caps) {
    if (pair.theta.base_size() != algebra->size() || pair.delta.base_size() != algebra->size()
        || !is_factor_pair(pair.theta, pair.delta) || !is_compatible(*algebra, pair.theta)
        || !is_compatible(*algebra, pair.delta)) {
      throw PreconditionError("not a factor pair of '" + algebra->name() + "'");
    }
    Decomposition d{quotient(algebra, pair.theta), quotient(algebra, pair.delta), {}, {}, {}};
    d.product = product({d.left.algebra, d.right.algebra}, caps);

    Tuple map(algebra->size());
    for (Element x = 0; x < algebra->size(); ++x) {
      Element const coords[2] = {d.left.canonical(x), d.right.canonical(x)};
      map[x]                  = d.product.encode(coords);
    }
    d.iso = validate_homomorphism(algebra, d.product.algebra, std::move(map));

    d.inverse.resize(d.product.algebra->size());
    for (Element p = 0; p < d.inverse.size(); ++p) {
      Tuple const      coords = d.product.decode(p);
      CongruenceSystem system{{{pair.theta, d.left.blocks[coords[0]].front()},
                               {pair.delta, d.right.blocks[coords[1]].front()}}};
      auto const       x = solve_system(system);
      if (!x) {
        throw PreconditionError("factor pair system without solution");
      }
      d.inverse[p] = *x;
    }
    return d;
  }

  Congruence product_congruence(Congruence const& left, Congruence const& right) {
    std::size_t const nb = right.base_size();
    Tuple             rep(left.base_size() * nb);
    for (Element a = 0; a < left.base_size(); ++a) {
      for (Element b = 0; b < nb; ++b) {
        rep[a * nb + b] = static_cast<Element>(left.rep(a) * nb + right.rep(b));
      }
    }
    return Congruence::from_rep(std::move(rep));
  }

  std::optional<Factorization> factorize(FiniteAlgebra const& a,
                                         FiniteAlgebra const& b,
                                         Congruence const&    delta) {
    std::size_t const na = a.size(), nb = b.size();
    if (delta.base_size() != na * nb) {
      throw ValidationError("congruence is not on the product carrier");
    }
    // Coordinate relations: (a1, a2) whenever ((a1, y), (a2, y)) in delta
    // for some y, closed under transitivity by the join.
    Congruence left  = Congruence::identity(na);
    Congruence right = Congruence::identity(nb);
    for (Element y = 0; y < nb; ++y) {
      Tuple labels(na);
      for (Element x = 0; x < na; ++x) {
        labels[x] = delta.rep(x * nb + y);
      }
      left = join(left, Congruence::from_labels(labels));
    }
    for (Element x = 0; x < na; ++x) {
      Tuple labels(nb);
      for (Element y = 0; y < nb; ++y) {
        labels[y] = delta.rep(x * nb + y);
      }
      right = join(right, Congruence::from_labels(labels));
    }
    if (product_congruence(left, right) != delta) {
      return std::nullopt;
    }
    return Factorization{std::move(left), std::move(right)};
  }

  std::vector<Pair> minimum_generators(FiniteAlgebra const& algebra, Congruence const& gamma) {
    std::size_t const n = algebra.size();
    // One candidate per distinct principal congruence below gamma: the
    // lexicographically least pair generating it.
    std::vector<Pair>       pairs;
    std::vector<Congruence> principals;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (!gamma.related(x, y)) {
          continue;
        }
        Congruence p = principal(algebra, x, y);
        if (std::find(principals.begin(), principals.end(), p) == principals.end()) {
          principals.push_back(std::move(p));
          pairs.emplace_back(x, y);
        }
      }
    }
    if (gamma.is_identity()) {
      return {};
    }
    // Combinations in lexicographic order, by increasing size.
    for (std::size_t k = 1; k <= pairs.size(); ++k) {
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) {
        pick[i] = i;
      }
      while (true) {
        Congruence acc = principals[pick[0]];
        for (std::size_t i = 1; i < k; ++i) {
          acc = join(acc, principals[pick[i]]);
        }
        if (acc == gamma) {
          std::vector<Pair> result;
          for (std::size_t i : pick) {
            result.push_back(pairs[i]);
          }
          return result;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == pairs.size() - k + i - 1) {
          --i;
        }
        if (i == 0) {
          break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
          pick[j] = pick[j - 1] + 1;
        }
      }
    }
    throw PreconditionError("partition is not a congruence of '" + algebra.name() + "'");
  }

  FhpReport check_fhp(AlgebraPtr a, AlgebraPtr b, Caps const& caps) {
    ProductAlgebra const p   = product({a, b}, caps);
    FiniteAlgebra const& ab  = *p.algebra;
    std::size_t const    nb  = b->size();
    auto const           con = all_congruences(ab, caps);

    FhpReport report;
    report.congruence_count = con.size();

    Tuple first(ab.size()), second(ab.size());
    for (Element x = 0; x < ab.size(); ++x) {
      first[x]  = static_cast<Element>(x / nb);
      second[x] = static_cast<Element>(x % nb);
    }
    Congruence const pi1 = Congruence::from_labels(first);
    Congruence const pi2 = Congruence::from_labels(second);

    struct Skew {
      Congruence gamma;
      bool       first;
      bool       second;
    };
    std::vector<Skew> skew;
    for (auto const& gamma : con) {
      bool const factors   = factorize(*a, *b, gamma).has_value();
      bool const violates1 = !meet(pi1, join(pi2, gamma)).contained_in(gamma);
      bool const violates2 = !meet(pi2, join(pi1, gamma)).contained_in(gamma);
      report.all_factorize     = report.all_factorize && factors;
      report.projection_bounds = report.projection_bounds && !violates1 && !violates2;
      if (!factors || violates1 || violates2) {
        skew.push_back({gamma, violates1, violates2});
      }
    }
    report.skew_count = skew.size();

    for (Element x = 0; x < ab.size() && report.principal_products; ++x) {
      for (Element y = x + 1; y < ab.size(); ++y) {
        Congruence generated = principal(ab, x, y);
        Congruence expected  = product_congruence(principal(*a, x / nb, y / nb),
                                                 principal(*b, x % nb, y % nb));
        if (generated != expected) {
          report.principal_products = false;
          report.principal_witness  = PrincipalWitness{{x, y}, std::move(generated), std::move(expected)};
          break;
        }
      }
    }

    if (skew.empty()) {
      return report;
    }
    // Generator counts for all skew congruences at once, as join-closure
    // depth over the principal congruences.
    std::vector<Congruence> principals;
    for (Element x = 0; x < ab.size(); ++x) {
      for (Element y = x + 1; y < ab.size(); ++y) {
        principals.push_back(principal(ab, x, y));
      }
    }
    std::sort(principals.begin(), principals.end());
    principals.erase(std::unique(principals.begin(), principals.end()), principals.end());
    std::map<Congruence, std::size_t> depth{{Congruence::identity(ab.size()), 0}};
    std::vector<Congruence>           frontier{Congruence::identity(ab.size())};
    for (std::size_t level = 1; !frontier.empty(); ++level) {
      std::vector<Congruence> next;
      for (auto const& c : frontier) {
        for (auto const& g : principals) {
          Congruence j = join(c, g);
          if (depth.emplace(j, level).second) {
            next.push_back(std::move(j));
          }
        }
      }
      frontier = std::move(next);
    }

    auto key = [&](Skew const& s) {
      return std::make_tuple(depth.at(s.gamma), s.gamma.nontrivial_pairs(), !s.first, s.gamma);
    };
    std::sort(skew.begin(), skew.end(), [&](Skew const& l, Skew const& r) { return key(l) < key(r); });
    std::size_t const least = depth.at(skew.front().gamma);
    for (auto const& s : skew) {
      if (depth.at(s.gamma) != least) {
        break;
      }
      report.minimal_witnesses.push_back(
          SkewWitness{s.gamma, minimum_generators(ab, s.gamma), s.first, s.second});
    }
    report.witness = report.minimal_witnesses.front();
    return report;
  }

}  // namespace centrax
