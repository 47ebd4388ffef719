#include "centrax/transfer.hpp"

#include "centrax/congruence.hpp"
#include "centrax/error.hpp"
#include "centrax/kernels.hpp"

namespace centrax {

  bool PushoutSquare::commutes() const {
    for (Element a = 0; a < f.dom->size(); ++a) {
      if (bottom.canonical(f(a)) != right(top.canonical(a))) {
        return false;
      }
    }
    return true;
  }

  PushoutSquare pushout_quotient(Homomorphism const& f, std::span<Pair const> collapse) {
    std::vector<Pair> image;
    for (auto [x, y] : collapse) {
      if (x >= f.dom->size() || y >= f.dom->size()) {
        throw ValidationError("collapse pair outside the domain");
      }
      image.emplace_back(f(x), f(y));
    }
    PushoutSquare sq{f,
                     {collapse.begin(), collapse.end()},
                     quotient(f.dom, cg(*f.dom, collapse)),
                     quotient(f.cod, cg(*f.cod, image)),
                     {}};
    Tuple map(sq.top.blocks.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      map[i] = sq.bottom.canonical(f(sq.top.blocks[i].front()));
    }
    sq.right = validate_homomorphism(sq.top.algebra, sq.bottom.algebra, std::move(map));
    if (!sq.commutes()) {
      throw Error("pushout square does not commute");
    }
    return sq;
  }

  Homomorphism factor_through_quotient(QuotientAlgebra const& q,
                                       std::span<Pair const>  collapse,
                                       Homomorphism const&    g) {
    if (!same_structure(*g.dom, *q.base)) {
      throw ValidationError("cocone does not start at the quotiented algebra");
    }
    for (auto [x, y] : collapse) {
      if (g(x) != g(y)) {
        throw PreconditionError("cocone does not identify (" + std::to_string(x) + ","
                                + std::to_string(y) + ")");
      }
    }
    Tuple map(q.blocks.size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      map[i] = g(q.blocks[i].front());
    }
    for (Element x = 0; x < q.base->size(); ++x) {
      if (map[q.canonical(x)] != g(x)) {
        throw PreconditionError("cocone is not constant on the blocks of theta(S)");
      }
    }
    return validate_homomorphism(q.algebra, g.cod, std::move(map));
  }

  std::size_t verify_pushout_cocones(PushoutSquare const& square, Caps const& caps) {
    auto const& b      = square.f.cod;
    auto const& bottom = square.bottom;
    std::size_t count  = 0;
    for (auto const& gamma : all_congruences(*b, caps)) {
      if (!bottom.theta.contained_in(gamma)) {
        continue;
      }
      QuotientAlgebra const target = quotient(b, gamma);
      // The cocone legs: nu_gamma on B, and A/theta(S) -> B/gamma.
      Tuple leg(square.top.blocks.size());
      for (std::size_t i = 0; i < leg.size(); ++i) {
        leg[i] = target.canonical(square.f(square.top.blocks[i].front()));
      }
      // bottom is onto, so the mediating map is forced blockwise.
      Tuple u(bottom.blocks.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = target.canonical(bottom.blocks[i].front());
      }
      for (Element x = 0; x < b->size(); ++x) {
        if (u[bottom.canonical(x)] != target.canonical(x)) {
          throw Error("cocone does not factor through the bottom quotient");
        }
      }
      for (std::size_t i = 0; i < leg.size(); ++i) {
        if (u[square.right(static_cast<Element>(i))] != leg[i]) {
          throw Error("mediating map does not commute with the right leg");
        }
      }
      validate_homomorphism(bottom.algebra, target.algebra, std::move(u));
      ++count;
    }
    return count;
  }

  StabilityReport stability_pushout_check(Homomorphism const&   f,
                                          CentralAlgebra const& dom,
                                          CentralAlgebra const& cod) {
    for (auto const* z : {&dom, &cod}) {
      if (!check_rexdfc(*z).holds) {
        throw PreconditionError("theta_{1,e} != theta(1,e) on '" + z->algebra()->name() + "'");
      }
    }
    auto const& a = *f.dom;
    auto collapse = [&](Tuple const& e) {
      std::vector<Pair> s;
      for (std::size_t i = 0; i < a.width(); ++i) {
        s.emplace_back(a.one()[i], e[i]);
      }
      return s;
    };

    StabilityReport report;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      StabilityCase c;
      c.e  = dom[i].e;
      c.g  = dom[dom.complement(i)].e;
      c.fe = f(c.e);
      c.fg = f(c.g);
      // A -> A/theta(1,g) and A -> A/theta(1,e), pushed along f.
      auto const left  = pushout_quotient(f, collapse(c.g));
      auto const right = pushout_quotient(f, collapse(c.e));
      report.squares += 2;
      c.left_size  = left.bottom.blocks.size();
      c.right_size = right.bottom.blocks.size();
      c.bijective  = kernels::complementary(left.bottom.theta, right.bottom.theta);
      if (!c.bijective && !report.first_failure) {
        report.stable        = false;
        report.first_failure = report.cases.size();
      }
      report.cases.push_back(std::move(c));
    }
    return report;
  }

  StabilityReport stability_pushout_check(Homomorphism const& f, Caps const& caps) {
    return stability_pushout_check(f, central_elements(f.dom, caps), central_elements(f.cod, caps));
  }

  CodisjointnessReport codisjointness_check(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    CodisjointnessReport r;
    r.left_size  = cg_tuples(a, a.zero(), a.one()).block_count();
    r.right_size = cg_tuples(b, b.zero(), b.one()).block_count();
    r.trivial    = r.left_size == 1 && r.right_size == 1;
    return r;
  }

}  // namespace centrax
