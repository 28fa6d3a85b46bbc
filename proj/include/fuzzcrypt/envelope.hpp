#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "fuzzcrypt/cipher.hpp"
#include "fuzzcrypt/detail/utf8.hpp"
#include "fuzzcrypt/error.hpp"

namespace fuzzcrypt {

/// Serialize a document to its JSON envelope.  Field order is fixed
/// (version, mode, table_fingerprint, manifest, ciphertext) and output is
/// compact, so identical documents serialize to identical bytes.
inline std::string write_envelope(const EncryptedDocument& doc) {
  nlohmann::ordered_json j;
  j["version"] = doc.version;
  j["mode"] = doc.mode == EncryptionMode::full ? "full" : "selective";
  j["table_fingerprint"] = doc.table_fingerprint;
  j["manifest"] = doc.manifest;
  j["ciphertext"] = detail::utf8_encode(doc.ciphertext);
  return j.dump();
}

/// Parse and validate a JSON envelope; any structural violation raises
/// corrupt_document.
inline EncryptedDocument read_envelope(std::string_view text) {
  const auto fail = [](const std::string& why) -> void {
    raise(ErrorCode::corrupt_document, "envelope: " + why);
  };
  const nlohmann::json j =
      nlohmann::json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("not valid JSON");
  if (!j.is_object()) fail("top level must be an object");
  for (const auto& item : j.items())
    if (item.key() != "version" && item.key() != "mode" &&
        item.key() != "table_fingerprint" && item.key() != "manifest" &&
        item.key() != "ciphertext")
      fail("unexpected field '" + item.key() + "'");
  for (const char* field :
       {"version", "mode", "table_fingerprint", "manifest", "ciphertext"})
    if (!j.contains(field)) fail(std::string("missing field '") + field + "'");

  if (!j["version"].is_number_integer()) fail("version must be an integer");
  const auto version = j["version"].get<std::int64_t>();
  if (version != 1) fail("unsupported version " + std::to_string(version));

  if (!j["mode"].is_string()) fail("mode must be a string");
  const auto mode_name = j["mode"].get<std::string>();
  if (mode_name != "full" && mode_name != "selective")
    fail("mode must be \"full\" or \"selective\"");
  const EncryptionMode mode =
      mode_name == "full" ? EncryptionMode::full : EncryptionMode::selective;

  if (!j["table_fingerprint"].is_string())
    fail("table_fingerprint must be a string");
  const auto fingerprint = j["table_fingerprint"].get<std::string>();
  if (fingerprint.size() != 64 ||
      fingerprint.find_first_not_of("0123456789abcdef") != std::string::npos)
    fail("table_fingerprint must be 64 lowercase hex digits");

  if (!j["ciphertext"].is_string()) fail("ciphertext must be a string");
  std::u32string ciphertext =
      detail::utf8_decode(j["ciphertext"].get<std::string>());

  if (!j["manifest"].is_array()) fail("manifest must be an array");
  std::vector<std::size_t> manifest;
  manifest.reserve(j["manifest"].size());
  for (const auto& entry : j["manifest"]) {
    if (!entry.is_number_unsigned())
      fail("manifest entries must be non-negative integers");
    const auto idx = entry.get<std::uint64_t>();
    if (idx >= ciphertext.size())
      fail("manifest index " + std::to_string(idx) +
           " is past the end of the ciphertext");
    if (!manifest.empty() && idx <= manifest.back())
      fail("manifest must be strictly ascending");
    manifest.push_back(static_cast<std::size_t>(idx));
  }
  if (mode == EncryptionMode::full && !manifest.empty())
    fail("full mode must carry an empty manifest");

  return {static_cast<int>(version), mode, fingerprint, std::move(manifest),
          std::move(ciphertext)};
}

}  // namespace fuzzcrypt
