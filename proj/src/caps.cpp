#include "centrax/caps.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace centrax {

  namespace {
    std::optional<std::size_t> parse_size(std::string_view s) {
      std::size_t value = 0;
      auto [end, ec]    = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
        return std::nullopt;
      }
      return value;
    }
  }  // namespace

  std::optional<Caps> Caps::parse(std::string_view spec) {
    return parse(spec, Caps{});
  }

  std::optional<Caps> Caps::parse(std::string_view spec, Caps base) {
    if (auto n = parse_size(spec)) {
      base.congruence = *n;
      return base;
    }
    while (!spec.empty()) {
      auto const       comma = spec.find(',');
      std::string_view item  = spec.substr(0, comma);
      spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);

      auto const eq = item.find('=');
      if (eq == std::string_view::npos) {
        return std::nullopt;
      }
      auto const key   = item.substr(0, eq);
      auto const value = parse_size(item.substr(eq + 1));
      if (!value) {
        return std::nullopt;
      }
      if (key == "carrier") {
        base.carrier = *value;
      } else if (key == "product") {
        base.product = *value;
      } else if (key == "congruence" || key == "con") {
        base.congruence = *value;
      } else if (key == "power") {
        base.power = *value;
      } else if (key == "chain") {
        base.chain_length = *value;
      } else if (key == "depth") {
        base.term_depth = *value;
      } else {
        return std::nullopt;
      }
    }
    return base;
  }

  Caps Caps::from_environment() {
    char const* env = std::getenv("CENTRAX_CAP");
    if (env == nullptr) {
      return Caps{};
    }
    return parse(env).value_or(Caps{});
  }

}  // namespace centrax
