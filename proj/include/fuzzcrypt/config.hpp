#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fuzzcrypt/cipher.hpp"
#include "fuzzcrypt/detail/utf8.hpp"
#include "fuzzcrypt/error.hpp"
#include "fuzzcrypt/fuzzy.hpp"
#include "fuzzcrypt/ingest.hpp"

namespace fuzzcrypt {

/// Which characters an encryption run substitutes: every alphabet character,
/// the k most relevant ones, or those scoring at least tau.
struct SelectionSpec {
  enum class Mode { all, top_k, threshold };

  Mode mode = Mode::all;
  std::size_t k = 0;
  double tau = 0.0;
};

/// Validated pipeline settings: the category set, crisp encoding, cipher
/// alphabet, key and selection strategy.
struct PipelineConfig {
  CategorySet categories;
  CrispEncoding encoding = CrispEncoding::code_point;
  Alphabet alphabet;
  std::string key;  // may be empty; required once a table is generated
  SelectionSpec selection;
};

namespace detail {

[[noreturn]] inline void config_fail(const std::string& field,
                                     const std::string& why) {
  raise(ErrorCode::validation, "config: " + field + ": " + why);
}

inline double config_number(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number()) config_fail(field, "must be a number");
  return j.get<double>();
}

inline std::string config_string(const nlohmann::json& j,
                                 const std::string& field) {
  if (!j.is_string()) config_fail(field, "must be a string");
  return j.get<std::string>();
}

}  // namespace detail

/// Parse a config from JSON text.  Every invariant is checked here with a
/// field-precise message; a PipelineConfig that exists is valid.
inline PipelineConfig parse_config_text(std::string_view text) {
  using detail::config_fail;
  const nlohmann::json j =
      nlohmann::json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) raise(ErrorCode::validation, "config: not valid JSON");
  if (!j.is_object()) config_fail("$", "must be a JSON object");
  for (const auto& item : j.items())
    if (item.key() != "categories" && item.key() != "kind" &&
        item.key() != "p" && item.key() != "encoding" &&
        item.key() != "alphabet" && item.key() != "key" &&
        item.key() != "selection")
      config_fail(item.key(), "unknown field");

  // kind + p
  std::string kind_name = "rational";
  if (j.contains("kind")) {
    kind_name = detail::config_string(j["kind"], "kind");
    if (kind_name != "gaussian" && kind_name != "rational")
      config_fail("kind", "must be \"gaussian\" or \"rational\"");
  }
  double p = 2.0;
  if (j.contains("p")) {
    if (kind_name != "rational")
      config_fail("p", "only applies when kind is \"rational\"");
    p = detail::config_number(j["p"], "p");
    if (!std::isfinite(p) || p <= 0.0)
      config_fail("p", "must be finite and > 0");
  }
  const MembershipKind kind = kind_name == "gaussian"
                                  ? MembershipKind::gaussian()
                                  : MembershipKind::rational(p);

  // categories
  if (!j.contains("categories")) config_fail("categories", "required");
  const auto& jc = j["categories"];
  if (!jc.is_array() || jc.empty())
    config_fail("categories", "must be a non-empty array");
  const double default_weight = 1.0 / static_cast<double>(jc.size());
  std::vector<FuzzyCategory> categories;
  categories.reserve(jc.size());
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const std::string prefix = "categories[" + std::to_string(i) + "]";
    const auto& item = jc[i];
    if (!item.is_object()) config_fail(prefix, "must be an object");
    for (const auto& kv : item.items())
      if (kv.key() != "name" && kv.key() != "mu" && kv.key() != "sigma" &&
          kv.key() != "weight")
        config_fail(prefix + "." + kv.key(), "unknown field");
    if (!item.contains("name")) config_fail(prefix + ".name", "required");
    FuzzyCategory cat;
    cat.name = detail::config_string(item["name"], prefix + ".name");
    if (cat.name.empty()) config_fail(prefix + ".name", "must be non-empty");
    for (const auto& other : categories)
      if (other.name == cat.name)
        config_fail(prefix + ".name", "duplicate name '" + cat.name + "'");
    if (!item.contains("mu")) config_fail(prefix + ".mu", "required");
    cat.mu = detail::config_number(item["mu"], prefix + ".mu");
    if (!std::isfinite(cat.mu)) config_fail(prefix + ".mu", "must be finite");
    if (!item.contains("sigma")) config_fail(prefix + ".sigma", "required");
    cat.sigma = detail::config_number(item["sigma"], prefix + ".sigma");
    if (!std::isfinite(cat.sigma) || cat.sigma <= 0.0)
      config_fail(prefix + ".sigma", "must be finite and > 0");
    cat.weight = default_weight;
    if (item.contains("weight")) {
      cat.weight = detail::config_number(item["weight"], prefix + ".weight");
      if (!std::isfinite(cat.weight) || cat.weight < 0.0)
        config_fail(prefix + ".weight", "must be finite and >= 0");
    }
    categories.push_back(std::move(cat));
  }

  // encoding
  CrispEncoding encoding = CrispEncoding::code_point;
  if (j.contains("encoding")) {
    const std::string name = detail::config_string(j["encoding"], "encoding");
    if (name == "code_point")
      encoding = CrispEncoding::code_point;
    else if (name == "normalized_code_point")
      encoding = CrispEncoding::normalized_code_point;
    else
      config_fail("encoding",
                  "must be \"code_point\" or \"normalized_code_point\"");
  }

  // alphabet
  std::u32string alphabet_symbols;
  if (j.contains("alphabet")) {
    const std::string utf8 = detail::config_string(j["alphabet"], "alphabet");
    if (utf8.empty()) config_fail("alphabet", "must be non-empty");
    alphabet_symbols = detail::utf8_decode(utf8);
    for (std::size_t a = 0; a < alphabet_symbols.size(); ++a)
      for (std::size_t b = a + 1; b < alphabet_symbols.size(); ++b)
        if (alphabet_symbols[a] == alphabet_symbols[b])
          config_fail("alphabet", "duplicate symbol at position " +
                                      std::to_string(b));
  } else {
    alphabet_symbols = Alphabet::ascii_letters().symbols();
  }

  // key
  std::string key;
  if (j.contains("key")) key = detail::config_string(j["key"], "key");

  // selection
  SelectionSpec selection;
  if (j.contains("selection")) {
    const auto& js = j["selection"];
    if (js.is_string()) {
      if (js.get<std::string>() != "all")
        config_fail("selection", "string form must be \"all\"");
    } else if (js.is_object()) {
      for (const auto& kv : js.items())
        if (kv.key() != "mode" && kv.key() != "k" && kv.key() != "tau")
          config_fail("selection." + kv.key(), "unknown field");
      if (!js.contains("mode")) config_fail("selection.mode", "required");
      const std::string mode = detail::config_string(js["mode"], "selection.mode");
      if (mode == "all") {
        if (js.contains("k") || js.contains("tau"))
          config_fail("selection", "mode \"all\" takes no k or tau");
      } else if (mode == "top_k") {
        selection.mode = SelectionSpec::Mode::top_k;
        if (js.contains("tau"))
          config_fail("selection.tau", "only applies to threshold mode");
        if (!js.contains("k")) config_fail("selection.k", "required");
        if (!js["k"].is_number_unsigned() || js["k"].get<std::uint64_t>() == 0)
          config_fail("selection.k", "must be a positive integer");
        selection.k = js["k"].get<std::size_t>();
      } else if (mode == "threshold") {
        selection.mode = SelectionSpec::Mode::threshold;
        if (js.contains("k"))
          config_fail("selection.k", "only applies to top_k mode");
        if (!js.contains("tau")) config_fail("selection.tau", "required");
        selection.tau = detail::config_number(js["tau"], "selection.tau");
        if (!std::isfinite(selection.tau))
          config_fail("selection.tau", "must be finite");
      } else {
        config_fail("selection.mode",
                    "must be \"all\", \"top_k\" or \"threshold\"");
      }
    } else {
      config_fail("selection", "must be \"all\" or an object");
    }
  }

  return {CategorySet(std::move(categories), kind), encoding,
          Alphabet(std::move(alphabet_symbols)), std::move(key), selection};
}

inline PipelineConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    raise(ErrorCode::io, "cannot open config '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad())
    raise(ErrorCode::io, "failed reading config '" + path.string() + "'");
  return parse_config_text(buffer.str());
}

}  // namespace fuzzcrypt
