#include "centrax/free_algebra.hpp"

#include <cmath>
#include <map>

#include "centrax/central.hpp"
#include "centrax/error.hpp"

namespace centrax {

  namespace {
    std::string variable_name(std::size_t rank, std::size_t v) {
      if (rank == 1) {
        return "y";
      }
      if (rank == 2) {
        return v == 0 ? "x" : "y";
      }
      return "x" + std::to_string(v);
    }

    // |G|^(|G|^k) compared against a limit without overflow.
    bool power_exceeds(std::size_t g, std::size_t length, std::size_t limit) {
      if (g <= 1) {
        return false;
      }
      return static_cast<double>(length) * std::log2(static_cast<double>(g))
             > std::log2(static_cast<double>(limit));
    }
  }  // namespace

  FreeAlgebra free_algebra(FiniteAlgebra const& gen, std::size_t rank, Caps const& caps) {
    std::size_t const g = gen.size();
    // Vectors are indexed by assignments of the k variables, row-major.
    std::size_t length = 1;
    for (std::size_t i = 0; i < rank; ++i) {
      if (length > caps.power / g) {
        throw CapExceeded("free algebra on " + std::to_string(rank) + " generators: "
                          + std::to_string(g) + "^" + std::to_string(rank)
                          + " assignments is past the power cap");
      }
      length *= g;
    }
    bool const bounded = power_exceeds(g, length, caps.power);

    std::vector<Tuple>      vectors;
    std::vector<Term>       terms;
    std::vector<std::size_t> depth;
    std::map<Tuple, Element> index;
    auto add = [&](Tuple v, Term t, std::size_t d) -> Element {
      auto [it, inserted] = index.emplace(std::move(v), static_cast<Element>(vectors.size()));
      if (inserted) {
        vectors.push_back(it->first);
        terms.push_back(std::move(t));
        depth.push_back(d);
        if (bounded && vectors.size() > caps.power) {
          throw CapExceeded("free algebra on " + std::to_string(rank)
                            + " generators outgrew the power cap");
        }
      }
      return it->second;
    };

    FreeAlgebra free;
    free.rank = rank;
    for (std::size_t v = 0; v < rank; ++v) {
      Tuple vec(length);
      for (std::size_t a = 0; a < length; ++a) {
        std::size_t rest = a;
        for (std::size_t i = rank; i-- > v + 1;) {
          rest /= g;
        }
        vec[a] = static_cast<Element>(rest % g);
      }
      free.generators.push_back(add(std::move(vec), Term::variable(v), 0));
    }

    auto const& sig           = gen.signature();
    bool        has_constants = false;
    for (auto const& s : sig.symbols()) {
      has_constants = has_constants || s.arity == 0;
    }
    // Designated constants are closed terms when nullary symbols exist;
    // otherwise they enter as leaves.
    if (!has_constants) {
      for (std::size_t i = 0; i < gen.width(); ++i) {
        add(Tuple(length, gen.zero()[i]), Term::zero(i), 0);
      }
      for (std::size_t i = 0; i < gen.width(); ++i) {
        add(Tuple(length, gen.one()[i]), Term::one(i), 0);
      }
    }

    // Depth d: every symbol applied to argument tuples that use at least
    // one element of depth d-1, arguments drawn from elements found before
    // this level in discovery order.
    for (std::size_t d = 1;; ++d) {
      std::size_t const known  = vectors.size();
      std::size_t const before = vectors.size();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        std::size_t const r = sig[op].arity;
        if (r == 0) {
          if (d == 1) {
            Tuple vec(length, gen.table(op)[0]);
            add(std::move(vec), Term::operation(op, {}), d);
          }
          continue;
        }
        if (known == 0) {
          continue;
        }
        Tuple args(r, 0), vals(r), vec(length);
        while (true) {
          bool fresh = false;
          for (Element a : args) {
            fresh = fresh || depth[a] + 1 == d;
          }
          if (fresh) {
            for (std::size_t pos = 0; pos < length; ++pos) {
              for (std::size_t i = 0; i < r; ++i) {
                vals[i] = vectors[args[i]][pos];
              }
              vec[pos] = gen.apply(op, vals);
            }
            if (!index.contains(vec)) {
              std::vector<Term> sub;
              for (Element a : args) {
                sub.push_back(terms[a]);
              }
              add(vec, Term::operation(op, std::move(sub)), d);
            }
          }
          std::size_t i = r;
          while (i > 0 && ++args[i - 1] == known) {
            args[--i] = 0;
          }
          if (i == 0) {
            break;
          }
        }
      }
      if (vectors.size() == before && d > 1) {
        break;
      }
      if (vectors.size() == before && d == 1 && known == 0) {
        break;
      }
    }

    // Operation tables on the discovered elements.
    std::size_t const  size = vectors.size();
    std::vector<Tuple> tables;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t const r = sig[op].arity;
      Tuple             table;
      table.reserve(table_length(size, r));
      Tuple args(r, 0), vals(r), vec(length);
      while (true) {
        for (std::size_t pos = 0; pos < length; ++pos) {
          for (std::size_t i = 0; i < r; ++i) {
            vals[i] = vectors[args[i]][pos];
          }
          vec[pos] = gen.apply(op, vals);
        }
        auto it = index.find(vec);
        if (it == index.end()) {
          throw Error("free algebra generation missed an element");
        }
        table.push_back(it->second);
        std::size_t i = r;
        while (i > 0 && ++args[i - 1] == size) {
          args[--i] = 0;
        }
        if (i == 0) {
          break;
        }
      }
      tables.push_back(std::move(table));
    }
    Tuple zero, one;
    for (std::size_t i = 0; i < gen.width(); ++i) {
      zero.push_back(index.at(Tuple(length, gen.zero()[i])));
      one.push_back(index.at(Tuple(length, gen.one()[i])));
    }
    VariableNamer const      name = [rank](std::size_t v) { return variable_name(rank, v); };
    std::vector<std::string> display;
    for (auto const& t : terms) {
      display.push_back(t.kind() == Term::Kind::operation && t.args().empty()
                            ? sig[t.index()].name
                            : to_sexpr(t, sig, name));
    }
    std::string label = "F(";
    for (std::size_t v = 0; v < rank; ++v) {
      label += (v ? "," : "") + variable_name(rank, v);
    }
    free.algebra    = share(FiniteAlgebra(label + ")",
                                       size,
                                       sig,
                                       std::move(tables),
                                       std::move(zero),
                                       std::move(one),
                                       std::move(display)));
    free.term_table = std::move(terms);
    free.vectors    = std::move(vectors);
    return free;
  }

  Homomorphism induced_homomorphism(FreeAlgebra const& free, AlgebraPtr target, std::span<Element const> images) {
    if (images.size() != free.rank) {
      throw ValidationError("expected " + std::to_string(free.rank) + " generator images");
    }
    if (!(free.algebra->signature() == target->signature())
        || free.algebra->width() != target->width()) {
      throw ValidationError("target has a different signature");
    }
    for (Element y : images) {
      if (y >= target->size()) {
        throw ValidationError("generator image outside the target");
      }
    }
    Tuple map;
    for (auto const& t : free.term_table) {
      map.push_back(eval_term(*target, t, images));
    }
    return validate_homomorphism(free.algebra, std::move(target), std::move(map));
  }

  RightFormulaSynthesis synthesize_right_formula(AlgebraPtr gen, Caps const& caps) {
    auto const square = product({gen, gen}, caps).algebra;
    for (auto const& a : {gen, square}) {
      auto const report = check_rexdfc(central_elements(a, caps));
      if (!report.holds) {
        throw PreconditionError("theta_{1,e} != theta(1,e) on '" + a->name()
                                + "': the construction's premise fails");
      }
    }

    RightFormulaSynthesis s;
    s.two  = free_algebra(*gen, 2, caps);
    s.one  = free_algebra(*gen, 1, caps);
    auto p = product({s.two.algebra, s.one.algebra}, caps);
    s.pair = p.algebra;

    std::size_t const m = gen->width();
    Tuple             c = s.pair->one(), d;
    for (std::size_t i = 0; i < m; ++i) {
      Element const coords[2] = {s.two.algebra->zero()[i], s.one.algebra->one()[i]};
      d.push_back(p.encode(coords));
    }
    Element const xy[2] = {s.two.generators[0], s.one.generators[0]};
    Element const yy[2] = {s.two.generators[1], s.one.generators[0]};
    s.chain             = maltsev_witness(*s.pair, p.encode(xy), p.encode(yy), c, d, caps);
    s.formula = PCFormula{m, s.chain.parameters.size(), s.chain.terms};

    auto const check = check_formula_r(s.formula.to_formula(), gen, gen, caps);
    if (!check.holds) {
      throw Error("synthesized formula fails the (R) check on " + gen->name() + " squared");
    }
    return s;
  }

}  // namespace centrax
