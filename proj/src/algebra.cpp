#include "centrax/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "centrax/congruence.hpp"
#include "centrax/error.hpp"

namespace centrax {

  namespace {
    // Tables larger than this are rejected outright.
    constexpr std::size_t max_table_length = std::size_t{1} << 26;

    std::string join_tuple(std::span<Element const> t) {
      std::ostringstream out;
      out << '(';
      for (std::size_t i = 0; i < t.size(); ++i) {
        out << (i ? "," : "") << t[i];
      }
      out << ')';
      return out.str();
    }

    // Advances a mixed-radix counter (all digits < base), last digit fastest.
    bool next_tuple(Tuple& t, std::size_t base) {
      for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < base) {
          return true;
        }
        t[i] = 0;
      }
      return false;
    }

    // Least subset of {0..size-1} containing seeds and closed under ops.
    std::vector<bool> closure(FiniteAlgebra const& a, std::span<Element const> seeds) {
      std::vector<bool> in(a.size(), false);
      Tuple             members;
      auto              add = [&](Element x) {
        if (!in[x]) {
          in[x] = true;
          members.push_back(x);
        }
      };
      for (Element s : seeds) {
        add(s);
      }
      auto const& sig = a.signature();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        if (sig[op].arity == 0) {
          add(a.table(op)[0]);
        }
      }
      bool changed = true;
      while (changed) {
        changed                  = false;
        std::size_t const before = members.size();
        Tuple const       snapshot = members;
        for (std::size_t op = 0; op < sig.size(); ++op) {
          std::size_t const r = sig[op].arity;
          if (r == 0 || snapshot.empty()) {
            continue;
          }
          Tuple pos(r, 0), args(r);
          do {
            for (std::size_t i = 0; i < r; ++i) {
              args[i] = snapshot[pos[i]];
            }
            add(a.apply(op, args));
          } while (next_tuple(pos, snapshot.size()));
        }
        changed = members.size() != before;
      }
      return in;
    }
  }  // namespace

  std::size_t table_length(std::size_t size, std::size_t arity) {
    std::size_t len = 1;
    for (std::size_t i = 0; i < arity; ++i) {
      if (size != 0 && len > max_table_length / size) {
        throw CapExceeded("operation table of arity " + std::to_string(arity) + " on "
                          + std::to_string(size) + " elements is too large");
      }
      len *= size;
    }
    return len;
  }

  ////////////////////////////////////////////////////////////////////////
  // Signature
  ////////////////////////////////////////////////////////////////////////

  Signature::Signature(std::vector<Symbol> symbols) : _symbols(std::move(symbols)) {
    std::set<std::string> seen;
    for (auto const& s : _symbols) {
      if (s.name.empty()) {
        throw ValidationError("empty symbol name");
      }
      if (!seen.insert(s.name).second) {
        throw ValidationError("duplicate symbol '" + s.name + "'");
      }
    }
  }

  std::optional<std::size_t> Signature::find(std::string_view name) const {
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      if (_symbols[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteAlgebra
  ////////////////////////////////////////////////////////////////////////

  FiniteAlgebra::FiniteAlgebra(AlgebraDescription const& raw) {
    if (raw.size <= 0) {
      throw ValidationError("algebra '" + raw.name + "': size must be positive");
    }
    _name      = raw.name;
    _size      = static_cast<std::size_t>(raw.size);
    _signature = Signature(raw.signature);

    auto element = [&](long long v, std::string const& where) {
      if (v < 0 || static_cast<unsigned long long>(v) >= _size) {
        throw ValidationError("algebra '" + _name + "': " + where + " entry "
                              + std::to_string(v) + " out of range for size "
                              + std::to_string(_size));
      }
      return static_cast<Element>(v);
    };

    for (auto const& [symbol, _] : raw.tables) {
      if (!_signature.find(symbol)) {
        throw ValidationError("algebra '" + _name + "': table for unknown symbol '" + symbol
                              + "'");
      }
    }
    for (auto const& s : _signature.symbols()) {
      auto it = raw.tables.find(s.name);
      if (it == raw.tables.end()) {
        throw ValidationError("algebra '" + _name + "': missing table for '" + s.name + "'");
      }
      std::size_t const expected = table_length(_size, s.arity);
      if (it->second.size() != expected) {
        throw ValidationError("algebra '" + _name + "': table for '" + s.name + "' has "
                              + std::to_string(it->second.size()) + " entries, arity "
                              + std::to_string(s.arity) + " needs "
                              + std::to_string(expected));
      }
      Tuple table;
      table.reserve(expected);
      for (long long v : it->second) {
        table.push_back(element(v, "table '" + s.name + "'"));
      }
      _tables.push_back(std::move(table));
    }
    if (raw.zero.empty() || raw.one.empty()) {
      throw ValidationError("algebra '" + _name + "': missing zero or one");
    }
    if (raw.zero.size() != raw.one.size()) {
      throw ValidationError("algebra '" + _name + "': zero and one have different lengths");
    }
    for (long long v : raw.zero) {
      _zero.push_back(element(v, "zero"));
    }
    for (long long v : raw.one) {
      _one.push_back(element(v, "one"));
    }
    _display = raw.display;
    validate();
  }

  FiniteAlgebra::FiniteAlgebra(std::string              name,
                               std::size_t              size,
                               Signature                signature,
                               std::vector<Tuple>       tables,
                               Tuple                    zero,
                               Tuple                    one,
                               std::vector<std::string> display)
      : _name(std::move(name)),
        _size(size),
        _signature(std::move(signature)),
        _tables(std::move(tables)),
        _zero(std::move(zero)),
        _one(std::move(one)),
        _display(std::move(display)) {
    validate();
  }

  void FiniteAlgebra::validate() const {
    auto fail = [&](std::string const& msg) {
      throw ValidationError("algebra '" + _name + "': " + msg);
    };
    if (_size == 0) {
      fail("size must be positive");
    }
    if (_size > std::numeric_limits<Element>::max()) {
      fail("size too large");
    }
    if (_tables.size() != _signature.size()) {
      fail("one table per symbol required");
    }
    for (std::size_t op = 0; op < _tables.size(); ++op) {
      if (_tables[op].size() != table_length(_size, _signature[op].arity)) {
        fail("table for '" + _signature[op].name + "' has the wrong length");
      }
      for (Element v : _tables[op]) {
        if (v >= _size) {
          fail("table '" + _signature[op].name + "' entry " + std::to_string(v)
               + " out of range");
        }
      }
    }
    if (_zero.empty() || _one.empty()) {
      fail("missing zero or one");
    }
    if (_zero.size() != _one.size()) {
      fail("zero and one have different lengths");
    }
    for (Element v : _zero) {
      if (v >= _size) {
        fail("zero entry out of range");
      }
    }
    for (Element v : _one) {
      if (v >= _size) {
        fail("one entry out of range");
      }
    }
    if (!_display.empty() && _display.size() != _size) {
      fail("display table must name every element");
    }

    // With nullary symbols present, the designated constants must be values
    // of closed terms.
    bool has_constants = false;
    for (auto const& s : _signature.symbols()) {
      has_constants = has_constants || s.arity == 0;
    }
    if (has_constants) {
      auto const closed = closure(*this, {});
      for (std::size_t i = 0; i < _zero.size(); ++i) {
        if (!closed[_zero[i]] || !closed[_one[i]]) {
          fail("designated constant component " + std::to_string(i)
               + " is not the value of a closed term");
        }
      }
      // Symbols literally named 0 and 1 must agree with the designation.
      if (_zero.size() == 1) {
        for (auto const& [name, want] : {std::pair{"0", _zero[0]}, std::pair{"1", _one[0]}}) {
          auto const op = _signature.find(name);
          if (op && _signature.symbols()[*op].arity == 0 && _tables[*op][0] != want) {
            fail(std::string("nullary symbol ") + name + " disagrees with the designated constant");
          }
        }
      }
    }
  }

  Element FiniteAlgebra::apply(std::size_t op, std::span<Element const> args) const {
    std::size_t idx = 0;
    for (Element a : args) {
      idx = idx * _size + a;
    }
    return _tables[op][idx];
  }

  std::string FiniteAlgebra::display(Element x) const {
    return _display.empty() ? std::to_string(x) : _display[x];
  }

  std::optional<Element> FiniteAlgebra::element_named(std::string_view name) const {
    for (std::size_t i = 0; i < _display.size(); ++i) {
      if (_display[i] == name) {
        return static_cast<Element>(i);
      }
    }
    Element value = 0;
    auto [end, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
    if (ec == std::errc() && end == name.data() + name.size() && value < _size) {
      return value;
    }
    return std::nullopt;
  }

  AlgebraDescription FiniteAlgebra::describe() const {
    AlgebraDescription d;
    d.name      = _name;
    d.size      = static_cast<long long>(_size);
    d.signature = _signature.symbols();
    for (std::size_t op = 0; op < _tables.size(); ++op) {
      d.tables[_signature[op].name].assign(_tables[op].begin(), _tables[op].end());
    }
    d.zero.assign(_zero.begin(), _zero.end());
    d.one.assign(_one.begin(), _one.end());
    d.display = _display;
    return d;
  }

  FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
    FiniteAlgebra copy = *this;
    copy._name         = std::move(name);
    return copy;
  }

  FiniteAlgebra validate_algebra(AlgebraDescription const& raw) {
    return FiniteAlgebra(raw);
  }

  bool same_structure(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    if (a.size() != b.size() || !(a.signature() == b.signature()) || a.zero() != b.zero()
        || a.one() != b.one()) {
      return false;
    }
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      if (!std::ranges::equal(a.table(op), b.table(op))) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Terms
  ////////////////////////////////////////////////////////////////////////

  Term Term::variable(std::size_t index) {
    return Term(Kind::variable, index, {});
  }

  Term Term::operation(std::size_t symbol, std::vector<Term> args) {
    return Term(Kind::operation, symbol, std::move(args));
  }

  Term Term::zero(std::size_t component) {
    return Term(Kind::zero, component, {});
  }

  Term Term::one(std::size_t component) {
    return Term(Kind::one, component, {});
  }

  std::size_t Term::depth() const {
    std::size_t d = 0;
    for (auto const& a : _args) {
      d = std::max(d, a.depth());
    }
    return _kind == Kind::operation ? d + 1 : 0;
  }

  std::size_t Term::variable_bound() const {
    if (_kind == Kind::variable) {
      return _index + 1;
    }
    std::size_t b = 0;
    for (auto const& a : _args) {
      b = std::max(b, a.variable_bound());
    }
    return b;
  }

  Term Term::substitute(std::function<Term(std::size_t)> const& f) const {
    if (_kind == Kind::variable) {
      return f(_index);
    }
    if (_kind != Kind::operation) {
      return *this;
    }
    std::vector<Term> args;
    args.reserve(_args.size());
    for (auto const& a : _args) {
      args.push_back(a.substitute(f));
    }
    return operation(_index, std::move(args));
  }

  void check_term(Signature const& sig, Term const& t) {
    if (t.kind() != Term::Kind::operation) {
      return;
    }
    if (t.index() >= sig.size()) {
      throw ValidationError("term uses unknown symbol index " + std::to_string(t.index()));
    }
    if (t.args().size() != sig[t.index()].arity) {
      throw ValidationError("symbol '" + sig[t.index()].name + "' applied to "
                            + std::to_string(t.args().size()) + " arguments");
    }
    for (auto const& a : t.args()) {
      check_term(sig, a);
    }
  }

  Element eval_term(FiniteAlgebra const& algebra, Term const& t, std::span<Element const> assignment) {
    switch (t.kind()) {
      case Term::Kind::variable:
        if (t.index() >= assignment.size()) {
          throw PreconditionError("unbound variable " + std::to_string(t.index()));
        }
        return assignment[t.index()];
      case Term::Kind::zero:
      case Term::Kind::one: {
        auto const& constants = t.kind() == Term::Kind::zero ? algebra.zero() : algebra.one();
        if (t.index() >= constants.size()) {
          throw PreconditionError("designated constant component "
                                  + std::to_string(t.index()) + " out of range");
        }
        return constants[t.index()];
      }
      case Term::Kind::operation: {
        Element     small[4];
        std::size_t r = t.args().size();
        if (r <= 4) {
          for (std::size_t i = 0; i < r; ++i) {
            small[i] = eval_term(algebra, t.args()[i], assignment);
          }
          return algebra.apply(t.index(), std::span<Element const>(small, r));
        }
        Tuple args(r);
        for (std::size_t i = 0; i < r; ++i) {
          args[i] = eval_term(algebra, t.args()[i], assignment);
        }
        return algebra.apply(t.index(), args);
      }
    }
    return 0;  // unreachable
  }

  std::string to_sexpr(Term const& t, Signature const& sig, VariableNamer const& name) {
    switch (t.kind()) {
      case Term::Kind::variable:
        return name(t.index());
      case Term::Kind::zero:
        return "(zero " + std::to_string(t.index()) + ")";
      case Term::Kind::one:
        return "(one " + std::to_string(t.index()) + ")";
      case Term::Kind::operation: {
        std::string s = "(" + sig[t.index()].name;
        for (auto const& a : t.args()) {
          s += " " + to_sexpr(a, sig, name);
        }
        return s + ")";
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms
  ////////////////////////////////////////////////////////////////////////

  Tuple Homomorphism::operator()(std::span<Element const> xs) const {
    Tuple out;
    out.reserve(xs.size());
    for (Element x : xs) {
      out.push_back(map[x]);
    }
    return out;
  }

  bool Homomorphism::injective() const {
    std::vector<bool> hit(cod->size(), false);
    for (Element y : map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  bool Homomorphism::surjective() const {
    std::vector<bool> hit(cod->size(), false);
    for (Element y : map) {
      hit[y] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  Homomorphism validate_homomorphism(AlgebraPtr dom, AlgebraPtr cod, Tuple map) {
    if (!dom || !cod) {
      throw ValidationError("homomorphism needs a domain and a codomain");
    }
    if (!(dom->signature() == cod->signature())) {
      throw ValidationError("homomorphism between algebras of different signatures");
    }
    if (dom->width() != cod->width()) {
      throw ValidationError("homomorphism between algebras with different constant widths");
    }
    if (map.size() != dom->size()) {
      throw ValidationError("map has " + std::to_string(map.size()) + " entries, domain has "
                            + std::to_string(dom->size()) + " elements");
    }
    for (Element y : map) {
      if (y >= cod->size()) {
        throw ValidationError("map entry " + std::to_string(y) + " outside the codomain");
      }
    }
    for (std::size_t i = 0; i < dom->width(); ++i) {
      if (map[dom->zero()[i]] != cod->zero()[i]) {
        throw HomomorphismError("designated constant zero[" + std::to_string(i)
                                    + "] is not preserved",
                                "zero",
                                {static_cast<Element>(i)});
      }
      if (map[dom->one()[i]] != cod->one()[i]) {
        throw HomomorphismError("designated constant one[" + std::to_string(i)
                                    + "] is not preserved",
                                "one",
                                {static_cast<Element>(i)});
      }
    }
    auto const& sig = dom->signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t const r = sig[op].arity;
      Tuple             args(r, 0), images(r);
      do {
        for (std::size_t i = 0; i < r; ++i) {
          images[i] = map[args[i]];
        }
        if (map[dom->apply(op, args)] != cod->apply(op, images)) {
          throw HomomorphismError("operation '" + sig[op].name + "' is not preserved at "
                                      + join_tuple(args),
                                  sig[op].name,
                                  args);
        }
      } while (next_tuple(args, dom->size()));
    }
    return Homomorphism{std::move(dom), std::move(cod), std::move(map)};
  }

  Homomorphism identity_homomorphism(AlgebraPtr algebra) {
    Tuple map(algebra->size());
    std::iota(map.begin(), map.end(), Element{0});
    return Homomorphism{algebra, algebra, std::move(map)};
  }

  Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
    if (!same_structure(*f.cod, *g.dom)) {
      throw ValidationError("cannot compose: codomain and domain differ");
    }
    Tuple map(f.dom->size());
    for (Element x = 0; x < map.size(); ++x) {
      map[x] = g(f(x));
    }
    return validate_homomorphism(f.dom, g.cod, std::move(map));
  }

  std::vector<Tuple> all_homomorphisms(FiniteAlgebra const& dom, FiniteAlgebra const& cod) {
    if (!(dom.signature() == cod.signature()) || dom.width() != cod.width()) {
      return {};
    }
    std::size_t const n = dom.size();

    // Every table entry becomes a constraint, checked once the largest
    // element it mentions has been assigned.
    struct Constraint {
      std::size_t op;
      Tuple       args;
      Element     result;
    };
    std::vector<std::vector<Constraint>> bucket(n);
    auto const&                          sig = dom.signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      Tuple args(sig[op].arity, 0);
      do {
        Element const result = dom.apply(op, args);
        Element       top    = result;
        for (Element a : args) {
          top = std::max(top, a);
        }
        bucket[top].push_back({op, args, result});
      } while (next_tuple(args, n));
    }
    std::vector<std::optional<Element>> forced(n);
    for (std::size_t i = 0; i < dom.width(); ++i) {
      for (auto [x, y] : {std::pair{dom.zero()[i], cod.zero()[i]},
                          std::pair{dom.one()[i], cod.one()[i]}}) {
        if (forced[x] && *forced[x] != y) {
          return {};
        }
        forced[x] = y;
      }
    }

    std::vector<Tuple> result;
    Tuple              map(n, 0);
    Tuple              images;
    auto               consistent = [&](std::size_t x) {
      for (auto const& c : bucket[x]) {
        images.resize(c.args.size());
        for (std::size_t i = 0; i < c.args.size(); ++i) {
          images[i] = map[c.args[i]];
        }
        if (cod.apply(c.op, images) != map[c.result]) {
          return false;
        }
      }
      return true;
    };
    auto search = [&](auto&& self, std::size_t x) -> void {
      if (x == n) {
        result.push_back(map);
        return;
      }
      Element lo = 0, hi = static_cast<Element>(cod.size());
      if (forced[x]) {
        lo = *forced[x];
        hi = lo + 1;
      }
      for (Element y = lo; y < hi; ++y) {
        map[x] = y;
        if (consistent(x)) {
          self(self, x + 1);
        }
      }
    };
    search(search, 0);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Element ProductAlgebra::encode(std::span<Element const> coords) const {
    Element x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      x = x * static_cast<Element>(factors[i]->size()) + coords[i];
    }
    return x;
  }

  Tuple ProductAlgebra::decode(Element x) const {
    Tuple coords(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      coords[i] = x % factors[i]->size();
      x /= factors[i]->size();
    }
    return coords;
  }

  ProductAlgebra product(std::vector<AlgebraPtr> const& factors, Caps const& caps) {
    if (factors.empty()) {
      throw ValidationError("product of no factors");
    }
    auto const& first = *factors.front();
    std::size_t size  = 1;
    for (auto const& f : factors) {
      if (!(f->signature() == first.signature())) {
        throw ValidationError("product factors '" + first.name() + "' and '" + f->name()
                              + "' have different signatures");
      }
      if (f->width() != first.width()) {
        throw ValidationError("product factors have different constant widths");
      }
      size *= f->size();
      if (size > caps.product) {
        throw CapExceeded("product has more than " + std::to_string(caps.product)
                          + " elements");
      }
    }

    ProductAlgebra p;
    p.factors = factors;
    std::vector<Tuple> coords(size);
    for (Element x = 0; x < size; ++x) {
      coords[x] = p.decode(x);
    }

    auto const&        sig = first.signature();
    std::vector<Tuple> tables;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t const r = sig[op].arity;
      Tuple             table;
      table.reserve(table_length(size, r));
      Tuple args(r, 0), fargs(r), out(factors.size());
      do {
        for (std::size_t f = 0; f < factors.size(); ++f) {
          for (std::size_t i = 0; i < r; ++i) {
            fargs[i] = coords[args[i]][f];
          }
          out[f] = factors[f]->apply(op, fargs);
        }
        table.push_back(p.encode(out));
      } while (next_tuple(args, size));
      tables.push_back(std::move(table));
    }

    Tuple zero, one;
    Tuple zc(factors.size()), oc(factors.size());
    for (std::size_t i = 0; i < first.width(); ++i) {
      for (std::size_t f = 0; f < factors.size(); ++f) {
        zc[f] = factors[f]->zero()[i];
        oc[f] = factors[f]->one()[i];
      }
      zero.push_back(p.encode(zc));
      one.push_back(p.encode(oc));
    }

    std::vector<std::string> display;
    std::string              name;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      name += (f ? " x " : "") + factors[f]->name();
    }
    for (Element x = 0; x < size; ++x) {
      std::string d = "(";
      for (std::size_t f = 0; f < factors.size(); ++f) {
        d += (f ? "," : "") + factors[f]->display(coords[x][f]);
      }
      display.push_back(d + ")");
    }

    p.algebra = share(FiniteAlgebra(
        name, size, sig, std::move(tables), std::move(zero), std::move(one), std::move(display)));
    for (std::size_t f = 0; f < factors.size(); ++f) {
      Tuple map(size);
      for (Element x = 0; x < size; ++x) {
        map[x] = coords[x][f];
      }
      p.projections.push_back(validate_homomorphism(p.algebra, factors[f], std::move(map)));
    }
    return p;
  }

  QuotientAlgebra quotient(AlgebraPtr base, Congruence theta) {
    if (theta.base_size() != base->size()) {
      throw ValidationError("congruence base size does not match the algebra");
    }
    if (!is_compatible(*base, theta)) {
      throw ValidationError("partition is not a congruence of '" + base->name() + "'");
    }
    QuotientAlgebra q;
    q.blocks          = theta.blocks();
    Tuple const index = theta.block_indices();
    std::size_t const size = q.blocks.size();

    auto const&        sig = base->signature();
    std::vector<Tuple> tables;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t const r = sig[op].arity;
      Tuple             table;
      table.reserve(table_length(size, r));
      Tuple args(r, 0), reps(r);
      do {
        for (std::size_t i = 0; i < r; ++i) {
          reps[i] = q.blocks[args[i]].front();
        }
        table.push_back(index[base->apply(op, reps)]);
      } while (next_tuple(args, size));
      tables.push_back(std::move(table));
    }
    Tuple zero, one;
    for (std::size_t i = 0; i < base->width(); ++i) {
      zero.push_back(index[base->zero()[i]]);
      one.push_back(index[base->one()[i]]);
    }
    std::vector<std::string> display;
    for (auto const& block : q.blocks) {
      display.push_back("[" + base->display(block.front()) + "]");
    }
    q.algebra   = share(FiniteAlgebra(base->name() + "/theta",
                                    size,
                                    sig,
                                    std::move(tables),
                                    std::move(zero),
                                    std::move(one),
                                    std::move(display)));
    q.canonical = validate_homomorphism(base, q.algebra, index);
    q.base      = std::move(base);
    q.theta     = std::move(theta);
    return q;
  }

  Subalgebra subalgebra_generated(AlgebraPtr parent, std::span<Element const> gens) {
    for (Element g : gens) {
      if (g >= parent->size()) {
        throw ValidationError("generator " + std::to_string(g) + " outside the carrier");
      }
    }
    Tuple seeds(gens.begin(), gens.end());
    seeds.insert(seeds.end(), parent->zero().begin(), parent->zero().end());
    seeds.insert(seeds.end(), parent->one().begin(), parent->one().end());
    auto const in = closure(*parent, seeds);

    Tuple       members;
    std::vector<Element> index(parent->size(), 0);
    for (Element x = 0; x < parent->size(); ++x) {
      if (in[x]) {
        index[x] = static_cast<Element>(members.size());
        members.push_back(x);
      }
    }
    std::size_t const  size = members.size();
    auto const&        sig  = parent->signature();
    std::vector<Tuple> tables;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      std::size_t const r = sig[op].arity;
      Tuple             table;
      table.reserve(table_length(size, r));
      Tuple args(r, 0), values(r);
      do {
        for (std::size_t i = 0; i < r; ++i) {
          values[i] = members[args[i]];
        }
        table.push_back(index[parent->apply(op, values)]);
      } while (next_tuple(args, size));
      tables.push_back(std::move(table));
    }
    Tuple zero, one;
    for (std::size_t i = 0; i < parent->width(); ++i) {
      zero.push_back(index[parent->zero()[i]]);
      one.push_back(index[parent->one()[i]]);
    }
    std::vector<std::string> display;
    if (!parent->display_names().empty()) {
      for (Element x : members) {
        display.push_back(parent->display(x));
      }
    }
    auto sub = share(FiniteAlgebra(parent->name() + "/sub",
                                   size,
                                   sig,
                                   std::move(tables),
                                   std::move(zero),
                                   std::move(one),
                                   std::move(display)));
    Homomorphism embedding = validate_homomorphism(sub, parent, members);
    return Subalgebra{std::move(sub), std::move(embedding)};
  }

  bool check_zero_one(FiniteAlgebra const& algebra) {
    return cg_tuples(algebra, algebra.zero(), algebra.one()).is_universal();
  }

}  // namespace centrax
