#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centrax/algebra.hpp"

namespace centrax {

  struct Equation {
    Term lhs;
    Term rhs;

    friend bool operator==(Equation const&, Equation const&) = default;
  };

  // An existential conjunction of equations, exists w. /\ (s = t), with
  // free variables x, y and z_0..z_{m-1}. Variable numbering inside the
  // terms: 0 = x, 1 = y, 2..2+m-1 = z, then the witnesses w_0..w_{p-1}.
  // Terms may also use the designated constants of the algebra.
  struct Formula {
    std::size_t           slots     = 0;  // m
    std::size_t           witnesses = 0;  // p
    std::vector<Equation> equations;

    std::size_t variable_count() const noexcept {
      return 2 + slots + witnesses;
    }
    std::size_t witness_variable(std::size_t j) const noexcept {
      return 2 + slots + j;
    }
  };

  // Throws ValidationError if a term uses a variable outside the layout or
  // does not fit the signature.
  void check_formula(Formula const& phi, Signature const& sig);

  // A |= phi(x, y, z). Witnesses are searched by backtracking, checking each
  // equation as soon as all of its variables are bound. Throws
  // ValidationError when z has the wrong length.
  bool eval_formula(Formula const&           phi,
                    FiniteAlgebra const&     algebra,
                    Element                  x,
                    Element                  y,
                    std::span<Element const> z);

  // S-expression form:
  //   (exists (w0 w1) (and (= lhs rhs) ...))
  // Variables print as x, y, z0.., w0..; designated constants as (one i) and
  // (zero i); operations as (symbol args...).
  std::string to_sexpr(Formula const& phi, Signature const& sig);

  // Inverse of to_sexpr. Also accepts a bare (and ...) or (= ...) without
  // the exists wrapper. Throws ValidationError on malformed input.
  Formula parse_formula(std::string_view text, Signature const& sig, std::size_t slots);

  // Parses a single term under the Formula variable layout.
  Term parse_term(std::string_view text, Signature const& sig, std::size_t slots, std::size_t witnesses);

  // A principal congruence formula with u := one:
  //   phi(x, y, z) = exists w. x = t_1(1, w) /\ t_i(1, w) = t_{i+1}(1, w) (i even)
  //                  /\ t_i(z, w) = t_{i+1}(z, w) (i odd) /\ t_k(z, w) = y
  // Chain terms use variables 0..m-1 for the generator slot and m..m+p-1 for
  // the witnesses.
  struct PCFormula {
    std::size_t       slots     = 0;
    std::size_t       witnesses = 0;
    std::vector<Term> chain;

    Formula to_formula() const;
  };

  bool eval_pcformula(PCFormula const&         phi,
                      FiniteAlgebra const&     algebra,
                      Element                  x,
                      Element                  y,
                      std::span<Element const> z);

  // (pcformula (slots m) (witnesses p) (chain t1 ... tk)) with u0.. and w0..
  // naming the chain variables.
  std::string to_sexpr(PCFormula const& phi, Signature const& sig);

}  // namespace centrax
