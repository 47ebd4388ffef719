#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "centrax/algebra.hpp"
#include "centrax/caps.hpp"
#include "centrax/central.hpp"
#include "centrax/congruence.hpp"
#include "centrax/factor.hpp"
#include "centrax/formula.hpp"
#include "centrax/transfer.hpp"

// File formats and machine-readable reports.
namespace centrax::io {

  using json = nlohmann::json;

  // { "name", "size", "signature": [{"symbol", "arity"}], "tables": {symbol:
  // [...]}, "zero": [...], "one": [...], "display"?: [...] }
  AlgebraDescription description_from_json(json const& j);
  FiniteAlgebra      algebra_from_json(json const& j);
  json               to_json(FiniteAlgebra const& algebra);

  // Also enforces caps.carrier.
  FiniteAlgebra load_algebra(std::filesystem::path const& path, Caps const& caps = {});

  // { "dom": name, "cod": name, "map": [...] }. Names resolve to
  // <dir>/<name>.json next to the homomorphism file; "dom" and "cod" may
  // also hold inline algebra objects.
  Homomorphism load_homomorphism(std::filesystem::path const& path, Caps const& caps = {});
  json         to_json(Homomorphism const& f);

  json read_json(std::filesystem::path const& path);
  void write_json(std::filesystem::path const& path, json const& j);

  // { "base": name, "rep": [...] }
  json       to_json(Congruence const& theta, std::string const& base);
  // Checks canonical form and compatibility with the algebra.
  Congruence congruence_from_json(json const& j, FiniteAlgebra const& algebra);

  json to_json(MaltsevChain const& chain, FiniteAlgebra const& algebra);
  json to_json(PCFormula const& phi, Signature const& sig);

  json to_json(FactorPair const& pair, std::string const& base);
  json to_json(CentralAlgebra const& centrals);
  json to_json(DpReport const& report, FiniteAlgebra const& algebra);
  json to_json(DefinabilityReport const& report, FiniteAlgebra const& algebra);
  json to_json(FhpReport const& report, FiniteAlgebra const& product);
  json to_json(PreservationReport const& report);
  json to_json(StabilityReport const& report, Homomorphism const& f);
  json to_json(PushoutSquare const& square);
  json to_json(CodisjointnessReport const& report);

  // "(d_1,..,d_m)" using display names.
  std::string format_tuple(FiniteAlgebra const& algebra, Tuple const& t);

}  // namespace centrax::io
