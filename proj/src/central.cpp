#include "centrax/central.hpp"

#include <algorithm>
#include <map>

#include "centrax/congruence.hpp"
#include "centrax/error.hpp"
#include "centrax/kernels.hpp"

namespace centrax {

  namespace {
    std::string show(Tuple const& t) {
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? "," : "") + std::to_string(t[i]);
      }
      return s + ")";
    }

    std::string show(FiniteAlgebra const& a, Tuple const& t) {
      if (t.size() == 1) {
        return a.display(t[0]);
      }
      std::string s = "(";
      for (std::size_t i = 0; i < t.size(); ++i) {
        s += (i ? "," : "") + a.display(t[i]);
      }
      return s + ")";
    }

    // Coordinatewise least solutions of [z_i, x_i] in theta, [z_i, y_i] in delta.
    std::optional<Tuple> solve_coordinates(Congruence const& theta,
                                           Tuple const&      x,
                                           Congruence const& delta,
                                           Tuple const&      y) {
      Tuple z;
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto zi = solve_system(CongruenceSystem{{{theta, x[i]}, {delta, y[i]}}});
        if (!zi) {
          return std::nullopt;
        }
        z.push_back(*zi);
      }
      return z;
    }

    Tuple require(std::optional<Tuple> z, char const* what) {
      if (!z) {
        throw PreconditionError(std::string(what) + ": system has no solution");
      }
      return *z;
    }

    bool all_related(Congruence const& theta, Tuple const& a, Tuple const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!theta.related(a[i], b[i])) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // CentralAlgebra
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> CentralAlgebra::find(Tuple const& e) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), e,
                               [](CentralElement const& c, Tuple const& t) { return c.e < t; });
    if (it == _elements.end() || it->e != e) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  std::size_t CentralAlgebra::index_of(Tuple const& e) const {
    auto i = find(e);
    if (!i) {
      throw PreconditionError(show(e) + " is not a central element");
    }
    return *i;
  }

  bool CentralAlgebra::leq(std::size_t i, std::size_t j) const {
    return _elements[i].theta0.contained_in(_elements[j].theta0);
  }

  Tuple CentralAlgebra::complement(Tuple const& e) const {
    return _elements[complement(index_of(e))].e;
  }

  Tuple CentralAlgebra::meet(Tuple const& e, Tuple const& f) const {
    return _elements[meet(index_of(e), index_of(f))].e;
  }

  Tuple CentralAlgebra::join(Tuple const& e, Tuple const& f) const {
    return _elements[join(index_of(e), index_of(f))].e;
  }

  bool CentralAlgebra::complementary(Tuple const& e, Tuple const& f) const {
    auto i = find(e);
    auto j = find(f);
    return i && j && complement(*i) == *j;
  }

  std::optional<Tuple> central_of(FiniteAlgebra const& algebra, FactorPair const& pair) {
    return solve_coordinates(pair.theta, algebra.zero(), pair.delta, algebra.one());
  }

  CentralAlgebra central_elements(AlgebraPtr algebra, Caps const& caps) {
    if (!check_zero_one(*algebra)) {
      throw PreconditionError("collapsing zero and one does not collapse '" + algebra->name()
                              + "'");
    }
    CentralAlgebra z;
    z._algebra = algebra;
    for (auto& pair : factor_pairs(*algebra, caps)) {
      auto e = central_of(*algebra, pair);
      if (!e) {
        throw PreconditionError("factor pair without a central element");
      }
      z._elements.push_back(CentralElement{std::move(*e), std::move(pair.theta), std::move(pair.delta)});
    }
    std::sort(z._elements.begin(), z._elements.end(),
              [](CentralElement const& l, CentralElement const& r) { return l.e < r.e; });
    for (std::size_t i = 1; i < z._elements.size(); ++i) {
      if (z._elements[i].e == z._elements[i - 1].e) {
        throw PreconditionError("two factor pairs share the central element "
                                + show(z._elements[i].e));
      }
    }

    std::size_t const n = z._elements.size();
    z._bottom           = z.index_of(algebra->zero());
    z._top              = z.index_of(algebra->one());
    z._complement.resize(n);
    z._meet.resize(n * n);
    z._join.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      z._complement[i] = z.index_of(complement_by_system(*algebra, z._elements[i]));
      for (std::size_t j = 0; j < n; ++j) {
        z._meet[i * n + j] = z.index_of(meet_by_system(*algebra, z._elements[i], z._elements[j]));
        z._join[i * n + j] = z.index_of(join_by_system(*algebra, z._elements[i], z._elements[j]));
      }
    }
    return z;
  }

  Tuple complement_by_system(FiniteAlgebra const& algebra, CentralElement const& e) {
    return require(solve_coordinates(e.theta0, algebra.one(), e.theta1, algebra.zero()),
                   "complement");
  }

  Tuple meet_by_system(FiniteAlgebra const& algebra, CentralElement const& e, CentralElement const& f) {
    return require(solve_coordinates(centrax::meet(e.theta0, f.theta0), algebra.zero(),
                                     centrax::join(e.theta1, f.theta1), algebra.one()),
                   "meet");
  }

  Tuple join_by_system(FiniteAlgebra const& algebra, CentralElement const& e, CentralElement const& f) {
    return require(solve_coordinates(centrax::join(e.theta0, f.theta0), algebra.zero(),
                                     centrax::meet(e.theta1, f.theta1), algebra.one()),
                   "join");
  }

  bool is_meet_by_membership(FiniteAlgebra const& algebra,
                             CentralElement const& e,
                             Tuple const&          f,
                             Tuple const&          a) {
    return all_related(e.theta0, algebra.zero(), a) && all_related(e.theta1, a, f);
  }

  bool is_join_by_membership(FiniteAlgebra const& algebra,
                             CentralElement const& e,
                             Tuple const&          f,
                             Tuple const&          a) {
    return all_related(e.theta1, algebra.one(), a) && all_related(e.theta0, a, f);
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  DpReport check_dp(FiniteAlgebra const& algebra, Caps const& caps) {
    auto const pairs = factor_pairs(algebra, caps);
    std::vector<std::pair<Tuple, Tuple>> k;
    for (auto const& p : pairs) {
      auto e = central_of(algebra, p);
      auto f = central_of(algebra, FactorPair{p.delta, p.theta});
      if (e && f) {
        k.emplace_back(std::move(*e), std::move(*f));
      }
    }
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());

    auto const& zero = algebra.zero();
    auto const& one  = algebra.one();
    DpReport    report;
    report.pair_count = k.size();
    for (auto const& [e, f] : k) {
      std::size_t matches = 0;
      for (auto const& p : pairs) {
        if (all_related(p.theta, e, zero) && all_related(p.theta, f, one)
            && all_related(p.delta, e, one) && all_related(p.delta, f, zero)) {
          ++matches;
        }
      }
      if (matches != 1) {
        report.holds           = false;
        report.witness         = std::make_pair(e, f);
        report.witness_matches = matches;
        break;
      }
    }
    return report;
  }

  namespace {
    DefinabilityReport check_definability(CentralAlgebra const& z, bool right) {
      auto const&        a = *z.algebra();
      DefinabilityReport report;
      for (auto const& c : z.elements()) {
        ++report.checked;
        Congruence const generated = cg_tuples(a, right ? a.one() : a.zero(), c.e);
        if (generated != (right ? c.theta1 : c.theta0)) {
          report.holds   = false;
          report.witness = c.e;
          break;
        }
      }
      return report;
    }
  }  // namespace

  DefinabilityReport check_rexdfc(CentralAlgebra const& centrals) {
    return check_definability(centrals, true);
  }

  DefinabilityReport check_lexdfc(CentralAlgebra const& centrals) {
    return check_definability(centrals, false);
  }

  PreservationReport analyze_homomorphism(Homomorphism const&   f,
                                          CentralAlgebra const& dom,
                                          CentralAlgebra const& cod) {
    PreservationReport r;
    r.hom                = f;
    r.preserves_centrals = true;
    for (auto const& c : dom.elements()) {
      if (!cod.contains(f(c.e))) {
        r.preserves_centrals = false;
        r.non_central        = c.e;
        break;
      }
    }
    r.preserves_complementary = true;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      Tuple const& e = dom[i].e;
      Tuple const& g = dom[dom.complement(i)].e;
      if (!cod.complementary(f(e), f(g))) {
        r.preserves_complementary = false;
        r.broken_pair             = std::make_pair(e, g);
        break;
      }
    }

    r.boolean_hom = r.preserves_centrals;
    if (!r.preserves_centrals) {
      r.boolean_failure = "image of " + show(*f.dom, *r.non_central) + " is not central";
      return r;
    }
    auto image = [&](std::size_t i) { return *cod.find(f(dom[i].e)); };
    if (image(dom.bottom()) != cod.bottom() || image(dom.top()) != cod.top()) {
      r.boolean_hom     = false;
      r.boolean_failure = "bounds are not preserved";
      return r;
    }
    for (std::size_t i = 0; i < dom.size() && r.boolean_hom; ++i) {
      if (image(dom.complement(i)) != cod.complement(image(i))) {
        r.boolean_hom     = false;
        r.boolean_failure = "complement of " + show(*f.dom, dom[i].e) + " is not preserved";
        break;
      }
      for (std::size_t j = 0; j < dom.size(); ++j) {
        if (image(dom.meet(i, j)) != cod.meet(image(i), image(j))) {
          r.boolean_hom     = false;
          r.boolean_failure = "meet of " + show(*f.dom, dom[i].e) + " and " + show(*f.dom, dom[j].e)
                              + " is not preserved";
          break;
        }
        if (image(dom.join(i, j)) != cod.join(image(i), image(j))) {
          r.boolean_hom     = false;
          r.boolean_failure = "join of " + show(*f.dom, dom[i].e) + " and " + show(*f.dom, dom[j].e)
                              + " is not preserved";
          break;
        }
      }
    }
    return r;
  }

  PreservationReport analyze_homomorphism(Homomorphism const& f, Caps const& caps) {
    return analyze_homomorphism(f, central_elements(f.dom, caps), central_elements(f.cod, caps));
  }

  namespace {
    FormulaCheck check_coordinate(Formula const& phi, AlgebraPtr a, AlgebraPtr b, Caps const& caps, bool right) {
      check_formula(phi, a->signature());
      if (phi.slots != a->width()) {
        throw ValidationError("formula has " + std::to_string(phi.slots)
                              + " central slots, algebras have width "
                              + std::to_string(a->width()));
      }
      ProductAlgebra const p  = product({a, b}, caps);
      std::size_t const    na = a->size();
      std::size_t const    nb = b->size();
      Tuple                z;
      for (std::size_t i = 0; i < a->width(); ++i) {
        Element const coords[2] = {a->zero()[i], b->one()[i]};
        z.push_back(p.encode(coords));
      }
      auto decode = [&](std::size_t idx) {
        std::array<Element, 4> v{};
        for (std::size_t i = 4; i-- > 0;) {
          std::size_t const base = i < 2 ? na : nb;
          v[i]                   = static_cast<Element>(idx % base);
          idx /= base;
        }
        return v;
      };
      auto holds = [&](std::size_t idx) {
        auto const [x1, y1, x2, y2] = decode(idx);
        Element const x             = static_cast<Element>(x1 * nb + x2);
        Element const y             = static_cast<Element>(y1 * nb + y2);
        bool const    target        = right ? x2 == y2 : x1 == y1;
        return eval_formula(phi, *p.algebra, x, y, z) == target;
      };
      std::size_t const count = na * na * nb * nb;
      FormulaCheck      check;
      if (auto bad = kernels::parallel::first_failure(count, holds)) {
        check.holds          = false;
        check.checked        = *bad + 1;
        check.counterexample = decode(*bad);
      } else {
        check.checked = count;
      }
      return check;
    }
  }  // namespace

  FormulaCheck check_formula_r(Formula const& phi, AlgebraPtr a, AlgebraPtr b, Caps const& caps) {
    return check_coordinate(phi, std::move(a), std::move(b), caps, true);
  }

  FormulaCheck check_formula_l(Formula const& phi, AlgebraPtr a, AlgebraPtr b, Caps const& caps) {
    return check_coordinate(phi, std::move(a), std::move(b), caps, false);
  }

}  // namespace centrax
