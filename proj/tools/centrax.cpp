// centrax: command-line front end.
//
// Exit status: 0 success or true verdict, 1 false verdict, 2 usage,
// validation, cap or file errors.

#include <cmath>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "centrax/central.hpp"
#include "centrax/congruence.hpp"
#include "centrax/error.hpp"
#include "centrax/factor.hpp"
#include "centrax/fixtures.hpp"
#include "centrax/free_algebra.hpp"
#include "centrax/io.hpp"
#include "centrax/transfer.hpp"

using namespace centrax;
using io::json;

namespace {

  constexpr int exit_true  = 0;
  constexpr int exit_false = 1;
  constexpr int exit_error = 2;

  struct Context {
    Caps caps;
    bool json_output = false;

    int emit(json const& j, std::string const& text, bool verdict = true) const {
      if (json_output) {
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << text;
      }
      return verdict ? exit_true : exit_false;
    }
  };

  std::string yes_no(bool b) {
    return b ? "true" : "false";
  }

  std::string blocks_text(FiniteAlgebra const& a, Congruence const& theta) {
    std::string s;
    for (auto const& block : theta.blocks()) {
      s += "{";
      for (std::size_t i = 0; i < block.size(); ++i) {
        s += (i ? " " : "") + a.display(block[i]);
      }
      s += "}";
    }
    return s;
  }

  std::string pair_text(FiniteAlgebra const& a, Tuple const& e, Tuple const& f) {
    return "(" + io::format_tuple(a, e) + "," + io::format_tuple(a, f) + ")";
  }

  // Element tokens: "zero"/"one" (optionally "zero[i]"), a display name, or
  // a decimal index.
  Element parse_element(FiniteAlgebra const& a, std::string token) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    for (auto const* kw : {"zero", "one"}) {
      std::string const k = kw;
      if (token.rfind(k, 0) == 0) {
        std::size_t i = 0;
        if (token.size() > k.size()) {
          if (token[k.size()] != '[' || token.back() != ']') {
            break;
          }
          i = std::stoul(token.substr(k.size() + 1, token.size() - k.size() - 2));
        }
        auto const& t = k == "zero" ? a.zero() : a.one();
        if (i >= t.size()) {
          throw ValidationError("constant component " + std::to_string(i) + " out of range");
        }
        return t[i];
      }
    }
    if (auto e = a.element_named(token)) {
      return *e;
    }
    throw ValidationError("'" + token + "' is not an element of '" + a.name() + "'");
  }

  // Splits at separators that are not inside parentheses.
  std::vector<std::string> split_top(std::string const& s, char sep) {
    std::vector<std::string> parts;
    std::string              cur;
    int                      depth = 0;
    for (char ch : s) {
      depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
      if (ch == sep && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    return parts;
  }

  // "a,b;c,d" -> pairs.
  std::vector<Pair> parse_pairs(FiniteAlgebra const& a, std::string const& spec) {
    std::vector<Pair> pairs;
    if (spec.empty()) {
      return pairs;
    }
    for (auto const& item : split_top(spec, ';')) {
      auto const xy = split_top(item, ',');
      if (xy.size() != 2) {
        throw ValidationError("expected a pair 'x,y', got '" + item + "'");
      }
      pairs.emplace_back(parse_element(a, xy[0]), parse_element(a, xy[1]));
    }
    return pairs;
  }

  AlgebraPtr load(std::string const& path, Context const& ctx) {
    return share(io::load_algebra(path, ctx.caps));
  }

  ////////////////////////////////////////////////////////////////////////
  // Verbs
  ////////////////////////////////////////////////////////////////////////

  int run_congruences(Context const& ctx, std::string const& path) {
    auto const a   = load(path, ctx);
    auto const con = all_congruences(*a, ctx.caps);
    json       list = json::array();
    std::ostringstream out;
    out << a->name() << ": " << con.size() << " congruences\n";
    for (auto const& theta : con) {
      list.push_back(io::to_json(theta, a->name()));
      out << "  " << blocks_text(*a, theta) << '\n';
    }
    return ctx.emit({{"algebra", a->name()}, {"count", con.size()}, {"congruences", list}}, out.str());
  }

  int run_factors(Context const& ctx, std::string const& path) {
    auto const a     = load(path, ctx);
    auto const pairs = factor_pairs(*a, ctx.caps);
    json       list  = json::array();
    std::ostringstream out;
    out << a->name() << ": " << pairs.size() << " factor pairs\n";
    for (auto const& p : pairs) {
      list.push_back(io::to_json(p, a->name()));
      out << "  theta " << blocks_text(*a, p.theta) << "  delta " << blocks_text(*a, p.delta)
          << '\n';
    }
    return ctx.emit({{"algebra", a->name()}, {"count", pairs.size()}, {"factor_pairs", list}},
                    out.str());
  }

  int run_centrals(Context const& ctx, std::string const& path) {
    auto const a = load(path, ctx);
    auto const z = central_elements(a, ctx.caps);
    std::ostringstream out;
    auto const k = static_cast<std::size_t>(std::lround(std::log2(static_cast<double>(z.size()))));
    out << a->name() << ": " << z.size() << " central elements, Boolean algebra 2^" << k << '\n';
    for (std::size_t i = 0; i < z.size(); ++i) {
      out << "  " << io::format_tuple(*a, z[i].e) << "  complement "
          << io::format_tuple(*a, z[z.complement(i)].e) << '\n';
    }
    return ctx.emit(io::to_json(z), out.str());
  }

  int run_decompose(Context const& ctx, std::string const& path, std::optional<std::size_t> index) {
    auto const a     = load(path, ctx);
    auto const pairs = factor_pairs(*a, ctx.caps);
    std::vector<FactorPair> proper;
    for (auto const& p : pairs) {
      if (!p.theta.is_identity() && !p.delta.is_identity()) {
        proper.push_back(p);
      }
    }
    if (proper.empty()) {
      return ctx.emit({{"algebra", a->name()}, {"decomposable", false}},
                      a->name() + ": directly indecomposable\n", false);
    }
    std::size_t const i = index.value_or(0);
    if (i >= proper.size()) {
      throw ValidationError("pair index " + std::to_string(i) + " out of range (have "
                            + std::to_string(proper.size()) + ")");
    }
    auto const d = decompose(a, proper[i], ctx.caps);
    std::ostringstream out;
    out << a->name() << " = " << d.left.algebra->size() << " x " << d.right.algebra->size()
        << "  (pair " << i << " of " << proper.size() << ")\n";
    out << "  theta " << blocks_text(*a, proper[i].theta) << '\n';
    out << "  delta " << blocks_text(*a, proper[i].delta) << '\n';
    for (Element x = 0; x < a->size(); ++x) {
      out << "  " << a->display(x) << " -> " << d.product.algebra->display(d.iso(x)) << '\n';
    }
    json j = {{"algebra", a->name()},
              {"decomposable", true},
              {"pair", io::to_json(proper[i], a->name())},
              {"left", io::to_json(*d.left.algebra)},
              {"right", io::to_json(*d.right.algebra)},
              {"iso", json(d.iso.map)},
              {"inverse", json(d.inverse)}};
    return ctx.emit(j, out.str());
  }

  int run_check(Context const& ctx, std::string const& what, std::vector<std::string> const& files) {
    auto need = [&](std::size_t n) {
      if (files.size() != n) {
        throw ValidationError("check " + what + " expects " + std::to_string(n) + " file(s)");
      }
    };
    if (what == "zero-one") {
      need(1);
      auto const a  = load(files[0], ctx);
      bool const ok = check_zero_one(*a);
      return ctx.emit({{"algebra", a->name()}, {"holds", ok}},
                      a->name() + ": theta(0,1) " + (ok ? "is" : "is not") + " universal\n", ok);
    }
    if (what == "dp") {
      need(1);
      auto const a = load(files[0], ctx);
      auto const r = check_dp(*a, ctx.caps);
      std::string text = a->name() + ": dp " + yes_no(r.holds) + " over "
                         + std::to_string(r.pair_count) + " complementary pairs\n";
      if (r.witness) {
        text += "  witness " + pair_text(*a, r.witness->first, r.witness->second) + " matched by "
                + std::to_string(r.witness_matches) + " factor pairs\n";
      }
      return ctx.emit(io::to_json(r, *a), text, r.holds);
    }
    if (what == "rexdfc" || what == "lexdfc") {
      need(1);
      auto const a = load(files[0], ctx);
      auto const z = central_elements(a, ctx.caps);
      auto const r = what == "rexdfc" ? check_rexdfc(z) : check_lexdfc(z);
      std::string text = a->name() + ": " + what + " " + yes_no(r.holds) + " ("
                         + std::to_string(r.checked) + " central elements checked)\n";
      if (r.witness) {
        text += "  witness " + io::format_tuple(*a, *r.witness) + "\n";
      } else {
        text += "  no counterexample found in this algebra\n";
      }
      return ctx.emit(io::to_json(r, *a), text, r.holds);
    }
    if (what == "fhp") {
      need(2);
      auto const a = load(files[0], ctx);
      auto const b = load(files[1], ctx);
      auto const r = check_fhp(a, b, ctx.caps);
      auto const p = product({a, b}, ctx.caps).algebra;
      std::ostringstream out;
      out << a->name() << " x " << b->name() << ": fhp " << yes_no(r.holds()) << '\n'
          << "  (i) every congruence factorizes: " << yes_no(r.all_factorize) << '\n'
          << "  (ii) projection inequalities: " << yes_no(r.projection_bounds) << '\n'
          << "  (iii) principal congruences are products: " << yes_no(r.principal_products)
          << '\n'
          << "  congruences: " << r.congruence_count << ", skew: " << r.skew_count << '\n';
      if (r.witness) {
        out << "  witness " << blocks_text(*p, r.witness->gamma) << " generated by";
        for (auto [x, y] : r.witness->generators) {
          out << " (" << p->display(x) << "," << p->display(y) << ")";
        }
        out << '\n';
      }
      return ctx.emit(io::to_json(r, *p), out.str(), r.holds());
    }
    if (what == "stability") {
      need(1);
      auto const f = io::load_homomorphism(files[0], ctx.caps);
      auto const r = stability_pushout_check(f, ctx.caps);
      std::ostringstream out;
      out << f.dom->name() << " -> " << f.cod->name() << ": stable " << yes_no(r.stable) << " ("
          << r.squares << " pushout squares)\n";
      if (r.first_failure) {
        auto const& c = r.cases[*r.first_failure];
        out << "  witness " << pair_text(*f.dom, c.e, c.g) << ": " << f.cod->name() << " -> "
            << c.left_size << " x " << c.right_size << " is not bijective\n";
      }
      return ctx.emit(io::to_json(r, f), out.str(), r.stable);
    }
    throw ValidationError("unknown check '" + what + "'");
  }

  int run_analyze(Context const& ctx, std::string const& path) {
    auto const f = io::load_homomorphism(path, ctx.caps);
    auto const r = analyze_homomorphism(f, ctx.caps);
    std::ostringstream out;
    out << f.dom->name() << " -> " << f.cod->name() << '\n'
        << "preserves_centrals: " << yes_no(r.preserves_centrals);
    if (r.non_central) {
      out << ", witness: " << io::format_tuple(*f.dom, *r.non_central);
    }
    out << "\npreserves_complementary: " << yes_no(r.preserves_complementary);
    if (r.broken_pair) {
      out << ", witness: " << pair_text(*f.dom, r.broken_pair->first, r.broken_pair->second);
    }
    out << "\nboolean_hom: " << yes_no(r.boolean_hom);
    if (r.boolean_failure) {
      out << " (" << *r.boolean_failure << ")";
    }
    out << '\n';
    return ctx.emit(io::to_json(r), out.str(), r.preserves_complementary);
  }

  int run_synthesize(Context const& ctx, std::string const& path) {
    auto const g = load(path, ctx);
    auto const s = synthesize_right_formula(g, ctx.caps);
    auto const& sig = g->signature();
    std::ostringstream out;
    out << "F(x,y): " << s.two.algebra->size() << " elements, F(y): " << s.one.algebra->size()
        << " elements\n"
        << "chain length " << s.chain.length() << ", " << s.formula.witnesses << " witnesses\n"
        << to_sexpr(s.formula, sig) << '\n'
        << to_sexpr(s.formula.to_formula(), sig) << '\n';
    json j = io::to_json(s.formula, sig);
    j["free_sizes"] = {s.two.algebra->size(), s.one.algebra->size()};
    j["maltsev_chain"] = io::to_json(s.chain, *s.pair);
    return ctx.emit(j, out.str());
  }

  int run_pushout(Context const& ctx, std::string const& path, std::string const& collapse) {
    auto const f     = io::load_homomorphism(path, ctx.caps);
    auto const pairs = parse_pairs(*f.dom, collapse);
    auto const sq    = pushout_quotient(f, pairs);
    std::optional<std::size_t> cocones;
    if (f.cod->size() <= ctx.caps.congruence) {
      cocones = verify_pushout_cocones(sq, ctx.caps);
    }
    std::ostringstream out;
    out << f.dom->name() << " / theta(S): " << sq.top.blocks.size() << " blocks "
        << blocks_text(*f.dom, sq.top.theta) << '\n'
        << f.cod->name() << " / theta(f(S)): " << sq.bottom.blocks.size() << " blocks "
        << blocks_text(*f.cod, sq.bottom.theta) << '\n'
        << "square commutes: " << yes_no(sq.commutes()) << '\n';
    if (cocones) {
      out << "verified against " << *cocones << " cocones\n";
    }
    json j = io::to_json(sq);
    if (cocones) {
      j["cocones_verified"] = *cocones;
    }
    return ctx.emit(j, out.str(), sq.commutes());
  }

  int run_witness(Context const& ctx, std::string const& path, std::string const& pair, std::string const& gens) {
    auto const a  = load(path, ctx);
    auto const ab = parse_pairs(*a, pair);
    if (ab.size() != 1) {
      throw ValidationError("--pair expects exactly one pair");
    }
    auto const generators = parse_pairs(*a, gens);
    Tuple      c, d;
    for (auto [x, y] : generators) {
      c.push_back(x);
      d.push_back(y);
    }
    if (!cg(*a, generators).related(ab[0].first, ab[0].second)) {
      return ctx.emit({{"member", false}},
                      "(" + a->display(ab[0].first) + "," + a->display(ab[0].second)
                          + ") is not in the generated congruence\n",
                      false);
    }
    auto const chain = maltsev_witness(*a, ab[0].first, ab[0].second, c, d, ctx.caps);
    auto const j     = io::to_json(chain, *a);
    std::ostringstream out;
    out << "chain of length " << chain.length() << ", parameters "
        << (chain.parameters.empty() ? std::string("()") : io::format_tuple(*a, chain.parameters))
        << '\n';
    for (std::size_t i = 0; i < chain.length(); ++i) {
      out << "  t" << i + 1 << " = " << j["terms"][i].get<std::string>() << '\n';
    }
    json out_json = j;
    out_json["member"] = true;
    return ctx.emit(out_json, out.str());
  }

  int run_fixture(Context const&               ctx,
                  std::optional<std::string>   name,
                  fixtures::Params const&      params,
                  std::string const&           output,
                  bool                         list) {
    if (list || !name) {
      std::ostringstream out;
      json               j = json::array();
      for (auto const& [n, doc] : fixtures::catalog()) {
        out << "  " << n << "  " << doc << '\n';
        j.push_back({{"name", n}, {"description", doc}});
      }
      return ctx.emit(j, out.str());
    }
    auto const fixture = fixtures::build(*name, params);
    if (auto const* a = std::get_if<FiniteAlgebra>(&fixture)) {
      if (output.empty()) {
        std::cout << io::to_json(*a).dump(2) << '\n';
      } else {
        io::write_json(output, io::to_json(*a));
        std::cerr << "wrote " << output << '\n';
      }
      return exit_true;
    }
    auto const& f = std::get<Homomorphism>(fixture);
    if (output.empty()) {
      json j        = io::to_json(f);
      j["dom"]      = io::to_json(*f.dom);
      j["cod"]      = io::to_json(*f.cod);
      std::cout << j.dump(2) << '\n';
      return exit_true;
    }
    std::filesystem::path const out = output;
    io::write_json(out, io::to_json(f));
    io::write_json(out.parent_path() / (f.dom->name() + ".json"), io::to_json(*f.dom));
    io::write_json(out.parent_path() / (f.cod->name() + ".json"), io::to_json(*f.cod));
    std::cerr << "wrote " << out.string() << " with " << f.dom->name() << ".json and "
              << f.cod->name() << ".json\n";
    return exit_true;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"centrax: central elements, factor congruences and definability checks for finite algebras"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string cap;
  std::optional<std::uint64_t> seed;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--cap", cap,
                 "Con(A) size cap N, or a list such as carrier=20,congruence=14,power=4096");
  app.add_option("--seed", seed, "Seed for randomized fixtures");

  std::string file, file2, collapse, pair, gens, output, fixture_name, check_what;
  std::vector<std::string> check_files;
  std::optional<std::size_t> pair_index;
  fixtures::Params params;
  bool list = false;

  auto* congruences = app.add_subcommand("congruences", "List Con(A)");
  congruences->add_option("algebra", file)->required();
  auto* factors = app.add_subcommand("factors", "List the factor pairs of A");
  factors->add_option("algebra", file)->required();
  auto* centrals = app.add_subcommand("centrals", "Central elements Z(A) and their complements");
  centrals->add_option("algebra", file)->required();
  auto* decomp = app.add_subcommand("decompose", "Direct decomposition along a factor pair");
  decomp->add_option("algebra", file)->required();
  decomp->add_option("--pair", pair_index, "Index among the proper factor pairs");
  auto* check = app.add_subcommand("check", "dp | rexdfc | lexdfc | fhp | stability | zero-one");
  check->add_option("property", check_what)
      ->required()
      ->check(CLI::IsMember({"dp", "rexdfc", "lexdfc", "fhp", "stability", "zero-one"}));
  check->add_option("files", check_files)->required();
  auto* analyze = app.add_subcommand("analyze-hom", "Preservation of central elements by f");
  analyze->add_option("hom", file)->required();
  auto* synth = app.add_subcommand("synthesize-r", "Synthesize the existential (R) formula");
  synth->add_option("generator", file)->required();
  auto* pushout = app.add_subcommand("pushout", "Pushout of a quotient along f");
  pushout->add_option("hom", file)->required();
  pushout->add_option("--collapse", collapse, "Pairs to identify, e.g. \"one,(0,1)\" or \"0,1;2,3\"");
  auto* fixture = app.add_subcommand("fixture", "Write a built-in algebra or homomorphism");
  fixture->add_option("name", fixture_name);
  fixture->add_option("--n", params.n, "Size parameter");
  fixture->add_option("--k", params.k, "Power parameter");
  fixture->add_option("-o,--output", output, "Output file (stdout if omitted)");
  fixture->add_flag("--list", list, "List the catalog");
  auto* witness = app.add_subcommand("witness", "Maltsev chain for a pair in a generated congruence");
  witness->add_option("algebra", file)->required();
  witness->add_option("--pair", pair, "The pair a,b")->required();
  witness->add_option("--generators", gens, "Generating pairs c1,d1;c2,d2")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_true : exit_error;
  }

  try {
    Context ctx;
    ctx.caps = Caps::from_environment();
    if (!cap.empty()) {
      auto parsed = Caps::parse(cap, ctx.caps);
      if (!parsed) {
        std::cerr << "error: malformed --cap '" << cap << "'\n";
        return exit_error;
      }
      ctx.caps = *parsed;
    }
    ctx.json_output = format == "json";
    params.seed     = seed;

    if (*congruences) return run_congruences(ctx, file);
    if (*factors) return run_factors(ctx, file);
    if (*centrals) return run_centrals(ctx, file);
    if (*decomp) return run_decompose(ctx, file, pair_index);
    if (*check) return run_check(ctx, check_what, check_files);
    if (*analyze) return run_analyze(ctx, file);
    if (*synth) return run_synthesize(ctx, file);
    if (*pushout) return run_pushout(ctx, file, collapse);
    if (*fixture) {
      return run_fixture(ctx,
                         fixture_name.empty() ? std::nullopt : std::optional(fixture_name),
                         params, output, list);
    }
    if (*witness) return run_witness(ctx, file, pair, gens);
  } catch (CapExceeded const& e) {
    std::cerr << "error: size cap exceeded: " << e.what() << '\n';
    return exit_error;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
