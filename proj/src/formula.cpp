#include "centrax/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "centrax/error.hpp"

namespace centrax {

  void check_formula(Formula const& phi, Signature const& sig) {
    for (auto const& eq : phi.equations) {
      for (Term const* t : {&eq.lhs, &eq.rhs}) {
        check_term(sig, *t);
        if (t->variable_bound() > phi.variable_count()) {
          throw ValidationError("formula term uses a variable outside x, y, z0..z"
                                + std::to_string(phi.slots) + ", w0..w"
                                + std::to_string(phi.witnesses));
        }
      }
    }
  }

  bool eval_formula(Formula const&           phi,
                    FiniteAlgebra const&     algebra,
                    Element                  x,
                    Element                  y,
                    std::span<Element const> z) {
    if (z.size() != phi.slots) {
      throw ValidationError("formula expects " + std::to_string(phi.slots)
                            + " central slots, got " + std::to_string(z.size()));
    }
    std::size_t const free = 2 + phi.slots;
    Tuple             assignment(phi.variable_count(), 0);
    assignment[0] = x;
    assignment[1] = y;
    std::copy(z.begin(), z.end(), assignment.begin() + 2);

    // Equations grouped by how many witnesses must be bound to check them.
    std::vector<std::vector<Equation const*>> ready(phi.witnesses + 1);
    for (auto const& eq : phi.equations) {
      std::size_t const bound = std::max(eq.lhs.variable_bound(), eq.rhs.variable_bound());
      ready[bound > free ? bound - free : 0].push_back(&eq);
    }
    auto satisfied = [&](std::size_t level) {
      for (Equation const* eq : ready[level]) {
        if (eval_term(algebra, eq->lhs, assignment) != eval_term(algebra, eq->rhs, assignment)) {
          return false;
        }
      }
      return true;
    };
    auto search = [&](auto&& self, std::size_t level) -> bool {
      if (!satisfied(level)) {
        return false;
      }
      if (level == phi.witnesses) {
        return true;
      }
      for (Element w = 0; w < algebra.size(); ++w) {
        assignment[free + level] = w;
        if (self(self, level + 1)) {
          return true;
        }
      }
      return false;
    };
    return search(search, 0);
  }

  namespace {
    VariableNamer formula_namer(std::size_t slots) {
      return [slots](std::size_t v) -> std::string {
        if (v == 0) {
          return "x";
        }
        if (v == 1) {
          return "y";
        }
        if (v < 2 + slots) {
          return "z" + std::to_string(v - 2);
        }
        return "w" + std::to_string(v - 2 - slots);
      };
    }

    // S-expression reader: atoms and nested lists.
    struct Sexpr {
      std::string        atom;
      std::vector<Sexpr> list;
      bool               is_list = false;
    };

    class Reader {
     public:
      explicit Reader(std::string_view text) : _text(text) {}

      Sexpr read_all() {
        Sexpr s = read();
        skip_space();
        if (_pos != _text.size()) {
          fail("trailing input");
        }
        return s;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ValidationError("s-expression: " + msg + " at offset " + std::to_string(_pos));
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      Sexpr read() {
        skip_space();
        if (_pos == _text.size()) {
          fail("unexpected end of input");
        }
        Sexpr s;
        if (_text[_pos] == '(') {
          ++_pos;
          s.is_list = true;
          while (true) {
            skip_space();
            if (_pos == _text.size()) {
              fail("missing ')'");
            }
            if (_text[_pos] == ')') {
              ++_pos;
              return s;
            }
            s.list.push_back(read());
          }
        }
        if (_text[_pos] == ')') {
          fail("unexpected ')'");
        }
        std::size_t const start = _pos;
        while (_pos < _text.size() && _text[_pos] != '(' && _text[_pos] != ')'
               && !std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        s.atom = std::string(_text.substr(start, _pos - start));
        return s;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    std::optional<std::size_t> indexed(std::string const& atom, char prefix) {
      if (atom.size() < 2 || atom[0] != prefix) {
        return std::nullopt;
      }
      std::size_t value = 0;
      auto [end, ec]    = std::from_chars(atom.data() + 1, atom.data() + atom.size(), value);
      if (ec != std::errc() || end != atom.data() + atom.size()) {
        return std::nullopt;
      }
      return value;
    }

    class TermBuilder {
     public:
      TermBuilder(Signature const& sig, std::size_t slots, std::size_t witnesses)
          : _sig(sig), _slots(slots), _witnesses(witnesses) {}

      Term build(Sexpr const& s) const {
        if (!s.is_list) {
          if (s.atom == "x") {
            return Term::variable(0);
          }
          if (s.atom == "y") {
            return Term::variable(1);
          }
          if (auto i = indexed(s.atom, 'z'); i && *i < _slots) {
            return Term::variable(2 + *i);
          }
          if (auto i = indexed(s.atom, 'w'); i && *i < _witnesses) {
            return Term::variable(2 + _slots + *i);
          }
          if (auto op = _sig.find(s.atom); op && _sig[*op].arity == 0) {
            return Term::operation(*op, {});
          }
          throw ValidationError("unknown variable or constant '" + s.atom + "'");
        }
        if (s.list.empty() || s.list[0].is_list) {
          throw ValidationError("term list must start with a symbol");
        }
        std::string const& head = s.list[0].atom;
        if ((head == "zero" || head == "one") && s.list.size() == 2 && !s.list[1].is_list
            && !_sig.find(head)) {
          std::size_t i  = 0;
          auto const& a  = s.list[1].atom;
          auto [end, ec] = std::from_chars(a.data(), a.data() + a.size(), i);
          if (ec != std::errc() || end != a.data() + a.size()) {
            throw ValidationError("bad constant component '" + a + "'");
          }
          return head == "zero" ? Term::zero(i) : Term::one(i);
        }
        auto op = _sig.find(head);
        if (!op) {
          throw ValidationError("unknown symbol '" + head + "'");
        }
        if (s.list.size() - 1 != _sig[*op].arity) {
          throw ValidationError("symbol '" + head + "' expects "
                                + std::to_string(_sig[*op].arity) + " arguments");
        }
        std::vector<Term> args;
        for (std::size_t i = 1; i < s.list.size(); ++i) {
          args.push_back(build(s.list[i]));
        }
        return Term::operation(*op, std::move(args));
      }

     private:
      Signature const& _sig;
      std::size_t      _slots;
      std::size_t      _witnesses;
    };

    bool is_head(Sexpr const& s, char const* head) {
      return s.is_list && !s.list.empty() && !s.list[0].is_list && s.list[0].atom == head;
    }
  }  // namespace

  std::string to_sexpr(Formula const& phi, Signature const& sig) {
    auto const  name = formula_namer(phi.slots);
    std::string body = "(and";
    for (auto const& eq : phi.equations) {
      body += " (= " + to_sexpr(eq.lhs, sig, name) + " " + to_sexpr(eq.rhs, sig, name) + ")";
    }
    body += ")";
    std::string ws;
    for (std::size_t j = 0; j < phi.witnesses; ++j) {
      ws += (j ? " w" : "w") + std::to_string(j);
    }
    return "(exists (" + ws + ") " + body + ")";
  }

  Formula parse_formula(std::string_view text, Signature const& sig, std::size_t slots) {
    Sexpr   s = Reader(text).read_all();
    Formula phi;
    phi.slots = slots;
    if (is_head(s, "exists")) {
      if (s.list.size() != 3 || !s.list[1].is_list) {
        throw ValidationError("exists expects a witness list and a body");
      }
      for (std::size_t j = 0; j < s.list[1].list.size(); ++j) {
        auto const& w = s.list[1].list[j];
        if (w.is_list || indexed(w.atom, 'w') != j) {
          throw ValidationError("witnesses must be named w0, w1, ... in order");
        }
      }
      phi.witnesses = s.list[1].list.size();
      Sexpr body    = s.list[2];
      s             = std::move(body);
    }
    std::vector<Sexpr> eqs;
    if (is_head(s, "and")) {
      eqs.assign(s.list.begin() + 1, s.list.end());
    } else {
      eqs.push_back(s);
    }
    TermBuilder const build(sig, slots, phi.witnesses);
    for (auto const& e : eqs) {
      if (!is_head(e, "=") || e.list.size() != 3) {
        throw ValidationError("expected an equation (= lhs rhs)");
      }
      phi.equations.push_back(Equation{build.build(e.list[1]), build.build(e.list[2])});
    }
    return phi;
  }

  Term parse_term(std::string_view text, Signature const& sig, std::size_t slots, std::size_t witnesses) {
    return TermBuilder(sig, slots, witnesses).build(Reader(text).read_all());
  }

  ////////////////////////////////////////////////////////////////////////
  // Principal congruence formulas
  ////////////////////////////////////////////////////////////////////////

  Formula PCFormula::to_formula() const {
    std::size_t const m = slots;
    // Chain variable v: v < m is a generator slot, otherwise a witness.
    auto at_one = [&](Term const& t) {
      return t.substitute([&](std::size_t v) {
        return v < m ? Term::one(v) : Term::variable(2 + v);
      });
    };
    auto at_z = [&](Term const& t) {
      return t.substitute([&](std::size_t v) { return Term::variable(2 + v); });
    };
    Formula phi;
    phi.slots     = m;
    phi.witnesses = witnesses;
    if (chain.empty()) {
      return phi;
    }
    std::size_t const k = chain.size();
    phi.equations.push_back(Equation{Term::variable(0), at_one(chain[0])});
    for (std::size_t i = 1; i < k; ++i) {
      // 1-based i: even at 1, odd at z.
      if (i % 2 == 0) {
        phi.equations.push_back(Equation{at_one(chain[i - 1]), at_one(chain[i])});
      } else {
        phi.equations.push_back(Equation{at_z(chain[i - 1]), at_z(chain[i])});
      }
    }
    phi.equations.push_back(Equation{at_z(chain[k - 1]), Term::variable(1)});
    return phi;
  }

  bool eval_pcformula(PCFormula const&         phi,
                      FiniteAlgebra const&     algebra,
                      Element                  x,
                      Element                  y,
                      std::span<Element const> z) {
    return eval_formula(phi.to_formula(), algebra, x, y, z);
  }

  std::string to_sexpr(PCFormula const& phi, Signature const& sig) {
    std::size_t const m    = phi.slots;
    VariableNamer     name = [m](std::size_t v) {
      return v < m ? "u" + std::to_string(v) : "w" + std::to_string(v - m);
    };
    std::string s = "(pcformula (slots " + std::to_string(m) + ") (witnesses "
                    + std::to_string(phi.witnesses) + ") (chain";
    for (auto const& t : phi.chain) {
      s += " " + to_sexpr(t, sig, name);
    }
    return s + "))";
  }

}  // namespace centrax
