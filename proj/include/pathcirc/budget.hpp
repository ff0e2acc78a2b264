#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <string_view>

#include "pathcirc/errors.hpp"

namespace pathcirc {

// Size limits for the exponential parts of the library. Every construction
// that can blow up takes one of these and throws BudgetError past it.
struct Budget {
  std::size_t max_equiv_width = 20;       // ext_equal input width
  std::size_t max_synth_width = 16;       // truth-table synthesis input width
  std::size_t max_universal_graphs = std::size_t{1} << 16;
  std::size_t max_enumerated_graphs = std::size_t{1} << 20;  // all_graphs result size
  std::size_t max_gates = std::size_t{1} << 22;               // compiled verifier size

  // Parses PATHCIRC_BUDGET-style overrides. Accepted forms:
  //   "5000"                              max_gates only
  //   "gates=5000,width=12,synth=10,graphs=100,enum=1000"
  static Budget parse(std::string_view text);
  static Budget parse(std::string_view text, Budget base);
  static Budget from_env();
};

inline Budget Budget::parse(std::string_view text) { return parse(text, Budget{}); }

inline Budget Budget::parse(std::string_view text, Budget base) {
  auto to_size = [&](std::string_view v) -> std::size_t {
    if (v.empty()) throw ParseError("empty budget value", "PATHCIRC_BUDGET");
    std::size_t out = 0;
    for (char c : v) {
      if (c < '0' || c > '9') {
        throw ParseError("budget value '" + std::string(v) + "' is not a number",
                         "PATHCIRC_BUDGET");
      }
      out = out * 10 + static_cast<std::size_t>(c - '0');
    }
    return out;
  };
  if (text.empty()) return base;
  if (text.find('=') == std::string_view::npos) {
    base.max_gates = to_size(text);
    return base;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value, got '" + std::string(item) + "'",
                       "PATHCIRC_BUDGET");
    }
    auto key = item.substr(0, eq);
    auto value = to_size(item.substr(eq + 1));
    if (key == "gates") {
      base.max_gates = value;
    } else if (key == "width") {
      base.max_equiv_width = value;
    } else if (key == "synth") {
      base.max_synth_width = value;
    } else if (key == "graphs") {
      base.max_universal_graphs = value;
    } else if (key == "enum") {
      base.max_enumerated_graphs = value;
    } else {
      throw ParseError("unknown budget key '" + std::string(key) + "'", "PATHCIRC_BUDGET");
    }
  }
  return base;
}

inline Budget Budget::from_env() {
  const char* raw = std::getenv("PATHCIRC_BUDGET");
  return raw == nullptr ? Budget{} : parse(raw);
}

}  // namespace pathcirc
