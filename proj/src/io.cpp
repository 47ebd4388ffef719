#include "centrax/io.hpp"

#include <fstream>

#include "centrax/error.hpp"

namespace centrax::io {

  namespace {
    template <typename T>
    T field(json const& j, char const* key) {
      if (!j.contains(key)) {
        throw ValidationError(std::string("missing field '") + key + "'");
      }
      try {
        return j.at(key).get<T>();
      } catch (json::exception const& e) {
        throw ValidationError(std::string("field '") + key + "': " + e.what());
      }
    }

    json tuple_json(Tuple const& t) {
      return json(std::vector<Element>(t.begin(), t.end()));
    }

    json pairs_json(std::vector<Pair> const& pairs) {
      json out = json::array();
      for (auto [x, y] : pairs) {
        out.push_back({x, y});
      }
      return out;
    }

    json blocks_json(FiniteAlgebra const& algebra, Congruence const& theta) {
      json out = json::array();
      for (auto const& block : theta.blocks()) {
        json b = json::array();
        for (Element x : block) {
          b.push_back(algebra.display(x));
        }
        out.push_back(std::move(b));
      }
      return out;
    }

    void check_size(AlgebraDescription const& d, Caps const& caps) {
      if (d.size > 0 && static_cast<unsigned long long>(d.size) > caps.carrier) {
        throw CapExceeded("algebra '" + d.name + "' has " + std::to_string(d.size)
                          + " elements, carrier cap is " + std::to_string(caps.carrier));
      }
    }
  }  // namespace

  AlgebraDescription description_from_json(json const& j) {
    if (!j.is_object()) {
      throw ValidationError("algebra must be a JSON object");
    }
    AlgebraDescription d;
    d.name = j.contains("name") ? field<std::string>(j, "name") : std::string("unnamed");
    d.size = field<long long>(j, "size");
    for (auto const& s : field<json>(j, "signature")) {
      long long const arity = field<long long>(s, "arity");
      if (arity < 0) {
        throw ValidationError("negative arity for symbol '" + field<std::string>(s, "symbol")
                              + "'");
      }
      d.signature.push_back(Symbol{field<std::string>(s, "symbol"), static_cast<std::size_t>(arity)});
    }
    d.tables = field<std::map<std::string, std::vector<long long>>>(j, "tables");
    if (j.contains("zero")) {
      d.zero = field<std::vector<long long>>(j, "zero");
    }
    if (j.contains("one")) {
      d.one = field<std::vector<long long>>(j, "one");
    }
    if (j.contains("display")) {
      d.display = field<std::vector<std::string>>(j, "display");
    }
    return d;
  }

  FiniteAlgebra algebra_from_json(json const& j) {
    return FiniteAlgebra(description_from_json(j));
  }

  json to_json(FiniteAlgebra const& a) {
    json sig = json::array();
    for (auto const& s : a.signature().symbols()) {
      sig.push_back({{"symbol", s.name}, {"arity", s.arity}});
    }
    json tables = json::object();
    for (std::size_t op = 0; op < a.signature().size(); ++op) {
      auto t                           = a.table(op);
      tables[a.signature()[op].name] = std::vector<Element>(t.begin(), t.end());
    }
    json j = {{"name", a.name()},
              {"size", a.size()},
              {"signature", sig},
              {"tables", tables},
              {"zero", tuple_json(a.zero())},
              {"one", tuple_json(a.one())}};
    if (!a.display_names().empty()) {
      j["display"] = a.display_names();
    }
    return j;
  }

  json read_json(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open '" + path.string() + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
  }

  void write_json(std::filesystem::path const& path, json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw Error("cannot write '" + path.string() + "'");
    }
    out << j.dump(2) << '\n';
  }

  FiniteAlgebra load_algebra(std::filesystem::path const& path, Caps const& caps) {
    auto const d = description_from_json(read_json(path));
    check_size(d, caps);
    return FiniteAlgebra(d);
  }

  Homomorphism load_homomorphism(std::filesystem::path const& path, Caps const& caps) {
    json const j   = read_json(path);
    auto       end = [&](char const* key) -> AlgebraPtr {
      json const& v = field<json>(j, key);
      if (v.is_string()) {
        return share(load_algebra(path.parent_path() / (v.get<std::string>() + ".json"), caps));
      }
      auto const d = description_from_json(v);
      check_size(d, caps);
      return share(FiniteAlgebra(d));
    };
    AlgebraPtr dom = end("dom");
    AlgebraPtr cod = end("cod");
    Tuple      map;
    for (long long v : field<std::vector<long long>>(j, "map")) {
      if (v < 0 || static_cast<unsigned long long>(v) >= cod->size()) {
        throw ValidationError("map entry " + std::to_string(v) + " outside the codomain");
      }
      map.push_back(static_cast<Element>(v));
    }
    return validate_homomorphism(std::move(dom), std::move(cod), std::move(map));
  }

  json to_json(Homomorphism const& f) {
    return {{"dom", f.dom->name()}, {"cod", f.cod->name()}, {"map", tuple_json(f.map)}};
  }

  json to_json(Congruence const& theta, std::string const& base) {
    return {{"base", base}, {"rep", std::vector<Element>(theta.reps().begin(), theta.reps().end())}};
  }

  Congruence congruence_from_json(json const& j, FiniteAlgebra const& algebra) {
    auto       rep   = field<std::vector<long long>>(j, "rep");
    Tuple      t;
    for (long long v : rep) {
      if (v < 0) {
        throw ValidationError("negative representative");
      }
      t.push_back(static_cast<Element>(v));
    }
    if (t.size() != algebra.size()) {
      throw ValidationError("representative array does not match the algebra size");
    }
    for (Element r : t) {
      if (r >= t.size()) {
        throw ValidationError("representative out of range");
      }
    }
    Congruence theta = Congruence::from_rep(std::move(t));
    if (!is_compatible(algebra, theta)) {
      throw ValidationError("partition is not a congruence of '" + algebra.name() + "'");
    }
    return theta;
  }

  std::string format_tuple(FiniteAlgebra const& algebra, Tuple const& t) {
    if (t.size() == 1) {
      return algebra.display(t[0]);
    }
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      s += (i ? "," : "") + algebra.display(t[i]);
    }
    return s + ")";
  }

  json to_json(MaltsevChain const& chain, FiniteAlgebra const& algebra) {
    std::size_t const m    = chain.c.size();
    VariableNamer     name = [m](std::size_t v) { return chain_variable_name(m, v); };
    json              terms = json::array();
    for (auto const& t : chain.terms) {
      terms.push_back(to_sexpr(t, algebra.signature(), name));
    }
    return {{"a", chain.a},
            {"b", chain.b},
            {"c", tuple_json(chain.c)},
            {"d", tuple_json(chain.d)},
            {"length", chain.length()},
            {"terms", terms},
            {"parameters", tuple_json(chain.parameters)},
            {"parameters_display", format_tuple(algebra, chain.parameters)}};
  }

  json to_json(PCFormula const& phi, Signature const& sig) {
    VariableNamer name = [m = phi.slots](std::size_t v) { return chain_variable_name(m, v); };
    json          chain = json::array();
    for (auto const& t : phi.chain) {
      chain.push_back(to_sexpr(t, sig, name));
    }
    return {{"slots", phi.slots},
            {"witnesses", phi.witnesses},
            {"chain", chain},
            {"pcformula", to_sexpr(phi, sig)},
            {"formula", to_sexpr(phi.to_formula(), sig)}};
  }

  json to_json(FactorPair const& pair, std::string const& base) {
    return {{"theta", to_json(pair.theta, base)}, {"delta", to_json(pair.delta, base)}};
  }

  json to_json(CentralAlgebra const& z) {
    auto const& a        = *z.algebra();
    json        elements = json::array();
    for (std::size_t i = 0; i < z.size(); ++i) {
      elements.push_back({{"e", tuple_json(z[i].e)},
                          {"display", format_tuple(a, z[i].e)},
                          {"complement", tuple_json(z[z.complement(i)].e)},
                          {"theta0", to_json(z[i].theta0, a.name())},
                          {"theta1", to_json(z[i].theta1, a.name())}});
    }
    return {{"algebra", a.name()},
            {"count", z.size()},
            {"bottom", tuple_json(z[z.bottom()].e)},
            {"top", tuple_json(z[z.top()].e)},
            {"elements", elements}};
  }

  json to_json(DpReport const& r, FiniteAlgebra const& a) {
    json j = {{"holds", r.holds}, {"pair_count", r.pair_count}};
    if (r.witness) {
      j["witness"] = {{"e", tuple_json(r.witness->first)},
                      {"f", tuple_json(r.witness->second)},
                      {"display", "(" + format_tuple(a, r.witness->first) + ","
                                      + format_tuple(a, r.witness->second) + ")"},
                      {"matches", r.witness_matches}};
    }
    return j;
  }

  json to_json(DefinabilityReport const& r, FiniteAlgebra const& a) {
    json j = {{"holds", r.holds}, {"checked", r.checked}};
    if (r.witness) {
      j["witness"] = {{"e", tuple_json(*r.witness)}, {"display", format_tuple(a, *r.witness)}};
    }
    return j;
  }

  json to_json(FhpReport const& r, FiniteAlgebra const& p) {
    auto skew = [&](SkewWitness const& w) {
      return json{{"gamma", to_json(w.gamma, p.name())},
                  {"blocks", blocks_json(p, w.gamma)},
                  {"generators", pairs_json(w.generators)},
                  {"violates_first", w.violates_first},
                  {"violates_second", w.violates_second}};
    };
    json j = {{"holds", r.holds()},
              {"verdicts_agree", r.verdicts_agree()},
              {"congruence_count", r.congruence_count},
              {"all_factorize", r.all_factorize},
              {"projection_bounds", r.projection_bounds},
              {"principal_products", r.principal_products},
              {"skew_count", r.skew_count}};
    if (r.witness) {
      j["witness"] = skew(*r.witness);
    }
    json minimal = json::array();
    for (auto const& w : r.minimal_witnesses) {
      minimal.push_back(skew(w));
    }
    j["minimal_witnesses"] = minimal;
    if (r.principal_witness) {
      j["principal_witness"] = {{"pair", {r.principal_witness->pair.first, r.principal_witness->pair.second}},
                                {"generated", to_json(r.principal_witness->generated, p.name())},
                                {"expected", to_json(r.principal_witness->expected, p.name())}};
    }
    return j;
  }

  json to_json(PreservationReport const& r) {
    auto const& dom = *r.hom.dom;
    json        j   = {{"dom", dom.name()},
                       {"cod", r.hom.cod->name()},
                       {"preserves_centrals", r.preserves_centrals},
                       {"preserves_complementary", r.preserves_complementary},
                       {"boolean_hom", r.boolean_hom}};
    if (r.non_central) {
      j["non_central"] = {{"e", tuple_json(*r.non_central)},
                          {"display", format_tuple(dom, *r.non_central)}};
    }
    if (r.broken_pair) {
      j["broken_pair"] = {{"e", tuple_json(r.broken_pair->first)},
                          {"g", tuple_json(r.broken_pair->second)},
                          {"display", "(" + format_tuple(dom, r.broken_pair->first) + ","
                                          + format_tuple(dom, r.broken_pair->second) + ")"}};
    }
    if (r.boolean_failure) {
      j["boolean_failure"] = *r.boolean_failure;
    }
    return j;
  }

  json to_json(StabilityReport const& r, Homomorphism const& f) {
    json cases = json::array();
    for (auto const& c : r.cases) {
      cases.push_back({{"e", format_tuple(*f.dom, c.e)},
                       {"g", format_tuple(*f.dom, c.g)},
                       {"fe", format_tuple(*f.cod, c.fe)},
                       {"fg", format_tuple(*f.cod, c.fg)},
                       {"left_size", c.left_size},
                       {"right_size", c.right_size},
                       {"bijective", c.bijective}});
    }
    json j = {{"stable", r.stable},
              {"squares", r.squares},
              {"cases", cases},
              {"scope", "evidence for this homomorphism only"}};
    if (r.first_failure) {
      j["first_failure"] = *r.first_failure;
    }
    return j;
  }

  json to_json(PushoutSquare const& sq) {
    return {{"collapse", pairs_json(sq.collapse)},
            {"top", {{"theta", to_json(sq.top.theta, sq.f.dom->name())},
                     {"size", sq.top.blocks.size()}}},
            {"bottom", {{"theta", to_json(sq.bottom.theta, sq.f.cod->name())},
                        {"size", sq.bottom.blocks.size()}}},
            {"right", tuple_json(sq.right.map)},
            {"commutes", sq.commutes()}};
  }

  json to_json(CodisjointnessReport const& r) {
    return {{"trivial", r.trivial}, {"left_size", r.left_size}, {"right_size", r.right_size}};
  }

}  // namespace centrax::io
