#include "centrax/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "centrax/error.hpp"
#include "centrax/kernels.hpp"

namespace centrax {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), Element{0});
      }

      Element find(Element x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // Keeps the smaller root so that roots stay block minima.
      bool unite(Element a, Element b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        return true;
      }

      Congruence to_congruence() {
        Tuple rep(_parent.size());
        for (Element x = 0; x < rep.size(); ++x) {
          rep[x] = find(x);
        }
        return Congruence::from_rep(std::move(rep));
      }

     private:
      Tuple _parent;
    };

    // Why two elements were merged: a generator pair, or a basic translation
    // (one operation, all arguments fixed but position `position`) applied
    // to the endpoints of an earlier edge.
    struct Edge {
      Element     from;
      Element     to;
      std::size_t generator = 0;  // valid when source == none
      std::size_t source    = none;
      std::size_t op        = 0;
      std::size_t position  = 0;
      Tuple       fixed;  // the other arguments, in order

      static constexpr std::size_t none = static_cast<std::size_t>(-1);
    };

    void check_pairs(FiniteAlgebra const& a, std::span<Pair const> pairs) {
      for (auto [x, y] : pairs) {
        if (x >= a.size() || y >= a.size()) {
          throw ValidationError("pair (" + std::to_string(x) + "," + std::to_string(y)
                                + ") outside the carrier");
        }
      }
    }

    // The closure. Every edge that joins two classes is queued and pushed
    // through every basic translation; the equivalence closure of the
    // edges is then closed under translations, hence a congruence. When
    // edges is non-null each merge is recorded with its reason.
    Congruence closure(FiniteAlgebra const&  algebra,
                       UnionFind&            uf,
                       std::span<Pair const> pairs,
                       std::vector<Edge>*    edges) {
      std::deque<Pair> queue;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        auto [c, d] = pairs[j];
        if (uf.unite(c, d)) {
          queue.emplace_back(c, d);
          if (edges) {
            edges->push_back(Edge{c, d, j, Edge::none, 0, 0, {}});
          }
        }
      }
      auto const&       sig = algebra.signature();
      std::size_t const n   = algebra.size();
      std::size_t       processed = 0;
      Tuple             args;
      while (!queue.empty()) {
        auto const [u, v] = queue.front();
        queue.pop_front();
        std::size_t const source = processed++;
        for (std::size_t op = 0; op < sig.size(); ++op) {
          std::size_t const r = sig[op].arity;
          if (r == 0) {
            continue;
          }
          args.assign(r, 0);
          for (std::size_t p = 0; p < r; ++p) {
            // Enumerate the r-1 fixed arguments, last position fastest.
            Tuple fixed(r - 1, 0);
            while (true) {
              for (std::size_t i = 0, k = 0; i < r; ++i) {
                if (i != p) {
                  args[i] = fixed[k++];
                }
              }
              args[p]          = u;
              Element const fu = algebra.apply(op, args);
              args[p]          = v;
              Element const fv = algebra.apply(op, args);
              if (uf.unite(fu, fv)) {
                queue.emplace_back(fu, fv);
                if (edges) {
                  edges->push_back(Edge{fu, fv, 0, source, op, p, fixed});
                }
              }
              std::size_t i = fixed.size();
              while (i > 0 && ++fixed[i - 1] == n) {
                fixed[--i] = 0;
              }
              if (i == 0) {
                break;
              }
            }
          }
        }
      }
      return uf.to_congruence();
    }

    // One step of a chain: term t moves from t(c) to t(d) when forward,
    // from t(d) to t(c) otherwise.
    struct Step {
      Term term;
      bool forward;
    };

    class ChainBuilder {
     public:
      ChainBuilder(FiniteAlgebra const& algebra, std::vector<Edge> const& edges,
                   std::size_t generators, Caps const& caps)
          : _algebra(algebra), _edges(edges), _m(generators), _caps(caps),
            _adjacent(algebra.size()) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
          _adjacent[edges[e].from].push_back(e);
          _adjacent[edges[e].to].push_back(e);
        }
      }

      // Parameter variable for the element x.
      Term parameter(Element x) {
        auto it = std::find(_parameters.begin(), _parameters.end(), x);
        std::size_t idx = static_cast<std::size_t>(it - _parameters.begin());
        if (it == _parameters.end()) {
          _parameters.push_back(x);
        }
        return Term::variable(_m + idx);
      }

      Tuple const& parameters() const {
        return _parameters;
      }

      // Steps leading from a to b along the merge forest.
      std::vector<Step> explain(Element a, Element b) {
        std::vector<Step> steps;
        for (auto [e, forward] : path(a, b)) {
          auto part = explain_edge(e);
          if (!forward) {
            std::reverse(part.begin(), part.end());
            for (auto& s : part) {
              s.forward = !s.forward;
            }
          }
          for (auto& s : part) {
            steps.push_back(std::move(s));
          }
          if (steps.size() > 2 * _caps.chain_length) {
            throw CapExceeded("Maltsev chain longer than " + std::to_string(_caps.chain_length));
          }
        }
        return steps;
      }

     private:
      // Edges of the forest path from a to b, each with its direction.
      std::vector<std::pair<std::size_t, bool>> path(Element a, Element b) {
        std::vector<std::optional<std::size_t>> via(_algebra.size());
        std::vector<bool>                       seen(_algebra.size(), false);
        std::deque<Element>                     queue{a};
        seen[a] = true;
        while (!queue.empty()) {
          Element x = queue.front();
          queue.pop_front();
          if (x == b) {
            break;
          }
          for (std::size_t e : _adjacent[x]) {
            Element y = _edges[e].from == x ? _edges[e].to : _edges[e].from;
            if (!seen[y]) {
              seen[y] = true;
              via[y]  = e;
              queue.push_back(y);
            }
          }
        }
        std::vector<std::pair<std::size_t, bool>> result;
        for (Element x = b; x != a;) {
          std::size_t e = *via[x];
          bool forward  = _edges[e].to == x;
          result.emplace_back(e, forward);
          x = forward ? _edges[e].from : _edges[e].to;
        }
        std::reverse(result.begin(), result.end());
        return result;
      }

      // Steps from edges[e].from to edges[e].to.
      std::vector<Step> explain_edge(std::size_t e) {
        Edge const& edge = _edges[e];
        if (edge.source == Edge::none) {
          return {Step{Term::variable(edge.generator), true}};
        }
        Edge const& src   = _edges[edge.source];
        auto        inner = explain(src.from, src.to);
        std::size_t const r = _algebra.signature()[edge.op].arity;
        for (auto& s : inner) {
          std::vector<Term> args;
          for (std::size_t i = 0, k = 0; i < r; ++i) {
            args.push_back(i == edge.position ? s.term : parameter(edge.fixed[k++]));
          }
          s.term = Term::operation(edge.op, std::move(args));
          if (s.term.depth() > _caps.term_depth) {
            throw CapExceeded("Maltsev chain term deeper than "
                              + std::to_string(_caps.term_depth));
          }
        }
        return inner;
      }

      FiniteAlgebra const&            _algebra;
      std::vector<Edge> const&        _edges;
      std::size_t                     _m;
      Caps const&                     _caps;
      std::vector<std::vector<std::size_t>> _adjacent;
      Tuple                           _parameters;
    };

    Tuple chain_assignment(MaltsevChain const& chain, bool use_d) {
      Tuple assignment = use_d ? chain.d : chain.c;
      assignment.insert(assignment.end(), chain.parameters.begin(), chain.parameters.end());
      return assignment;
    }

  }  // namespace

  Congruence cg(FiniteAlgebra const& algebra, std::span<Pair const> pairs) {
    check_pairs(algebra, pairs);
    UnionFind uf(algebra.size());
    return closure(algebra, uf, pairs, nullptr);
  }

  Congruence cg(FiniteAlgebra const& algebra, Congruence const& base, std::span<Pair const> pairs) {
    if (base.base_size() != algebra.size()) {
      throw ValidationError("congruence base size does not match the algebra");
    }
    check_pairs(algebra, pairs);
    UnionFind uf(algebra.size());
    for (Element x = 0; x < algebra.size(); ++x) {
      uf.unite(base.rep(x), x);
    }
    return closure(algebra, uf, pairs, nullptr);
  }

  Congruence principal(FiniteAlgebra const& algebra, Element a, Element b) {
    Pair const p{a, b};
    return cg(algebra, std::span<Pair const>(&p, 1));
  }

  Congruence cg_tuples(FiniteAlgebra const&     algebra,
                       std::span<Element const> c,
                       std::span<Element const> d) {
    if (c.size() != d.size()) {
      throw ValidationError("generator tuples have different lengths");
    }
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < c.size(); ++i) {
      pairs.emplace_back(c[i], d[i]);
    }
    return cg(algebra, pairs);
  }

  bool is_compatible(FiniteAlgebra const& algebra, Congruence const& theta) {
    if (theta.base_size() != algebra.size()) {
      return false;
    }
    // Compatible iff every basic translation maps each element and its
    // block representative to related elements.
    auto const&       sig = algebra.signature();
    std::size_t const n   = algebra.size();
    Tuple             args;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t const r = sig[op].arity;
      if (r == 0) {
        continue;
      }
      std::size_t const entries = table_length(n, r);
      args.assign(r, 0);
      for (std::size_t idx = 0; idx < entries; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = r; i-- > 0;) {
          args[i] = static_cast<Element>(rest % n);
          rest /= n;
        }
        Element const value = algebra.apply(op, args);
        for (std::size_t p = 0; p < r; ++p) {
          Element const keep = args[p];
          args[p]            = theta.rep(keep);
          bool const ok      = theta.related(algebra.apply(op, args), value);
          args[p]            = keep;
          if (!ok) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    void same_base(Congruence const& theta, Congruence const& delta) {
      if (theta.base_size() != delta.base_size()) {
        throw ValidationError("congruences on different base sets");
      }
    }
  }  // namespace

  Congruence join(Congruence const& theta, Congruence const& delta) {
    same_base(theta, delta);
    UnionFind uf(theta.base_size());
    for (Element x = 0; x < theta.base_size(); ++x) {
      uf.unite(x, theta.rep(x));
      uf.unite(x, delta.rep(x));
    }
    return uf.to_congruence();
  }

  Congruence meet(Congruence const& theta, Congruence const& delta) {
    same_base(theta, delta);
    std::size_t const n = theta.base_size();
    Tuple             labels(n);
    for (Element x = 0; x < n; ++x) {
      labels[x] = static_cast<Element>(theta.rep(x) * n + delta.rep(x));
    }
    return Congruence::from_labels(labels);
  }

  Relation compose(Congruence const& theta, Congruence const& delta) {
    same_base(theta, delta);
    std::size_t const n = theta.base_size();
    Relation          r(n);
    auto const        delta_blocks = delta.blocks();
    auto const        delta_index  = delta.block_indices();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (theta.related(x, y)) {
          for (Element z : delta_blocks[delta_index[y]]) {
            r.insert(x, z);
          }
        }
      }
    }
    return r;
  }

  bool permutes(Congruence const& theta, Congruence const& delta) {
    return compose(theta, delta) == compose(delta, theta);
  }

  std::optional<Element> solve_system(CongruenceSystem const& system) {
    auto const& eqs = system.equations;
    if (eqs.empty()) {
      throw PreconditionError("empty congruence system");
    }
    std::size_t const n = eqs.front().first.base_size();
    for (auto const& [theta, x] : eqs) {
      if (theta.base_size() != n || x >= n) {
        throw PreconditionError("system mixes base sets or has an element out of range");
      }
    }
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      for (std::size_t j = i + 1; j < eqs.size(); ++j) {
        if (!join(eqs[i].first, eqs[j].first).related(eqs[i].second, eqs[j].second)) {
          throw PreconditionError("invalid system: equations " + std::to_string(i) + " and "
                                  + std::to_string(j) + " are incompatible");
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      bool ok = true;
      for (auto const& [theta, xi] : eqs) {
        if (!theta.related(x, xi)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        return x;
      }
    }
    return std::nullopt;
  }

  std::vector<Congruence> all_congruences(FiniteAlgebra const& algebra, Caps const& caps) {
    std::size_t const n = algebra.size();
    if (n > caps.congruence) {
      throw CapExceeded("Con(A) enumeration needs |A| <= " + std::to_string(caps.congruence)
                        + ", got " + std::to_string(n));
    }
    std::set<Congruence> principals;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        principals.insert(principal(algebra, a, b));
      }
    }
    std::vector<Congruence> gens(principals.begin(), principals.end());
    return kernels::parallel::join_closure(n, gens);
  }

  MaltsevChain maltsev_witness(FiniteAlgebra const&     algebra,
                               Element                  a,
                               Element                  b,
                               std::span<Element const> c,
                               std::span<Element const> d,
                               Caps const&              caps) {
    if (c.size() != d.size()) {
      throw ValidationError("generator tuples have different lengths");
    }
    if (a >= algebra.size() || b >= algebra.size()) {
      throw ValidationError("endpoint outside the carrier");
    }
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < c.size(); ++i) {
      pairs.emplace_back(c[i], d[i]);
    }
    check_pairs(algebra, pairs);

    MaltsevChain chain;
    chain.a = a;
    chain.b = b;
    chain.c.assign(c.begin(), c.end());
    chain.d.assign(d.begin(), d.end());
    std::size_t const m = c.size();

    for (std::size_t j = 0; j < m; ++j) {
      if (c[j] == a && d[j] == b) {
        chain.terms.push_back(Term::variable(j));
        return chain;
      }
    }

    std::vector<Edge> edges;
    UnionFind         uf(algebra.size());
    Congruence const  theta = closure(algebra, uf, pairs, &edges);
    if (!theta.related(a, b)) {
      throw PreconditionError("pair (" + std::to_string(a) + "," + std::to_string(b)
                              + ") is not in the generated congruence");
    }

    ChainBuilder builder(algebra, edges, m, caps);
    auto         steps = builder.explain(a, b);

    // Odd positions (1-based) must step forward, even ones backward; a
    // parameter term pinned at the current element fills any gap.
    Element cur = a;
    for (auto& s : steps) {
      bool const odd = chain.terms.size() % 2 == 0;
      if (odd != s.forward) {
        chain.terms.push_back(builder.parameter(cur));
      }
      Tuple assignment(s.forward ? chain.d.begin() : chain.c.begin(),
                       s.forward ? chain.d.end() : chain.c.end());
      chain.terms.push_back(std::move(s.term));
      // The parameter list may have grown; evaluate with the current one.
      assignment.insert(assignment.end(), builder.parameters().begin(), builder.parameters().end());
      cur = eval_term(algebra, chain.terms.back(), assignment);
    }
    if (chain.terms.size() % 2 == 0) {
      chain.terms.push_back(builder.parameter(cur));
    }
    chain.parameters = builder.parameters();
    if (chain.terms.size() > caps.chain_length) {
      throw CapExceeded("Maltsev chain longer than " + std::to_string(caps.chain_length));
    }
    return chain;
  }

  std::optional<std::string> chain_violation(FiniteAlgebra const& algebra,
                                             MaltsevChain const&  chain) {
    if (chain.terms.empty() || chain.terms.size() % 2 == 0) {
      return "chain length " + std::to_string(chain.terms.size()) + " is not odd";
    }
    Tuple const at_c = chain_assignment(chain, false);
    Tuple const at_d = chain_assignment(chain, true);
    auto        eval = [&](std::size_t i, Tuple const& at) {
      return eval_term(algebra, chain.terms[i], at);
    };
    std::size_t const k = chain.terms.size();
    if (eval(0, at_c) != chain.a) {
      return std::string("a != t1(c, lambda)");
    }
    if (eval(k - 1, at_d) != chain.b) {
      return "b != t" + std::to_string(k) + "(d, lambda)";
    }
    for (std::size_t i = 1; i < k; ++i) {
      // 1-based i: even compares at c, odd at d.
      Tuple const& at = i % 2 == 0 ? at_c : at_d;
      if (eval(i - 1, at) != eval(i, at)) {
        return "t" + std::to_string(i) + " and t" + std::to_string(i + 1) + " differ at "
               + (i % 2 == 0 ? "c" : "d");
      }
    }
    return std::nullopt;
  }

  std::string chain_variable_name(std::size_t generators, std::size_t index) {
    return index < generators ? "u" + std::to_string(index)
                              : "w" + std::to_string(index - generators);
  }

}  // namespace centrax
