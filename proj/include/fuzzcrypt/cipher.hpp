#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fuzzcrypt/detail/sha256.hpp"
#include "fuzzcrypt/error.hpp"
#include "fuzzcrypt/feature_select.hpp"

namespace fuzzcrypt {

/// The ordered set of characters the cipher substitutes; anything outside it
/// passes through encryption unchanged.
class Alphabet {
 public:
  explicit Alphabet(std::u32string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty())
      raise(ErrorCode::invalid_parameter, "Alphabet: must not be empty");
    index_.reserve(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (!index_.emplace(symbols_[i], i).second)
        raise(ErrorCode::invalid_parameter,
              "Alphabet: duplicate symbol at position " + std::to_string(i));
  }

  /// a-z then A-Z; the two cases are distinct symbols.
  static Alphabet ascii_letters() {
    std::u32string s;
    s.reserve(52);
    for (char32_t c = U'a'; c <= U'z'; ++c) s.push_back(c);
    for (char32_t c = U'A'; c <= U'Z'; ++c) s.push_back(c);
    return Alphabet(std::move(s));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::u32string& symbols() const noexcept { return symbols_; }

  std::optional<std::size_t> find(char32_t c) const {
    const auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(char32_t c) const { return index_.count(c) != 0; }

  std::size_t index_of(char32_t c) const {
    const auto pos = find(c);
    if (!pos)
      raise(ErrorCode::not_a_letter, "character is not in the alphabet");
    return *pos;
  }

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }

 private:
  std::u32string symbols_;
  std::unordered_map<char32_t, std::size_t> index_;
};

/// Bijective symbol mapping over an alphabet, fingerprinted so a decryption
/// attempt with the wrong table is detected instead of producing garbage.
class SubstitutionTable {
 public:
  SubstitutionTable(Alphabet alphabet, std::u32string images)
      : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (images_.size() != alphabet_.size())
      raise(ErrorCode::invalid_parameter,
            "SubstitutionTable: mapping size does not match alphabet");
    std::u32string a = alphabet_.symbols();
    std::u32string b = images_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      raise(ErrorCode::invalid_parameter,
            "SubstitutionTable: mapping is not a permutation of the alphabet");
    fingerprint_ = compute_fingerprint(alphabet_.symbols(), images_);
  }

  static SubstitutionTable identity(Alphabet alphabet) {
    std::u32string images = alphabet.symbols();
    return {std::move(alphabet), std::move(images)};
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// images()[i] is where alphabet().symbols()[i] maps to.
  const std::u32string& images() const noexcept { return images_; }

  /// Lowercase hex digest of (alphabet, mapping); equal tables share it.
  const std::string& fingerprint() const noexcept { return fingerprint_; }

  /// Image of an alphabet symbol; not_a_letter for anything else.
  char32_t map(char32_t c) const { return images_[alphabet_.index_of(c)]; }

 private:
  static void append_u32(std::string& out, std::uint32_t v) {
    for (int b = 0; b < 4; ++b)
      out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  }

  // Length-prefixed code points, so the serialization is injective over
  // (alphabet, mapping) pairs.
  static std::string compute_fingerprint(const std::u32string& symbols,
                                         const std::u32string& images) {
    std::string bytes;
    bytes.reserve((symbols.size() * 2 + 1) * 4);
    append_u32(bytes, static_cast<std::uint32_t>(symbols.size()));
    for (char32_t c : symbols) append_u32(bytes, c);
    for (char32_t c : images) append_u32(bytes, c);
    return detail::sha256_hex(bytes);
  }

  Alphabet alphabet_;
  std::u32string images_;
  std::string fingerprint_;
};

enum class EncryptionMode { full, selective };

/// Ciphertext plus the bookkeeping needed to reverse it exactly: which
/// positions were substituted and a fingerprint of the table that did it.
struct EncryptedDocument {
  int version = 1;
  EncryptionMode mode = EncryptionMode::full;
  std::string table_fingerprint;
  std::vector<std::size_t> manifest;  // ascending; empty in full mode
  std::u32string ciphertext;
};

/// Substitute a single alphabet character.  Callers must guard non-letters;
/// they raise not_a_letter.
inline char32_t encrypt_letter(char32_t x, const SubstitutionTable& table) {
  return table.map(x);
}

/// Substitute every alphabet character in the content; all other characters
/// are appended unchanged.  Output length always equals input length.
inline std::u32string encrypt_content(std::u32string_view content,
                                      const SubstitutionTable& table) {
  std::u32string out(content);
  for (char32_t& c : out)
    if (const auto pos = table.alphabet().find(c)) c = table.images()[*pos];
  return out;
}

/// Inverse permutation of a table; invert_table(invert_table(t)) equals t.
inline SubstitutionTable invert_table(const SubstitutionTable& table) {
  const std::u32string& symbols = table.alphabet().symbols();
  std::u32string inverse(symbols.size(), U'\0');
  for (std::size_t i = 0; i < symbols.size(); ++i)
    inverse[table.alphabet().index_of(table.images()[i])] = symbols[i];
  return {table.alphabet(), std::move(inverse)};
}

/// Reverse a full encryption byte-for-byte.
inline std::u32string decrypt_content(std::u32string_view ciphertext,
                                      const SubstitutionTable& table) {
  return encrypt_content(ciphertext, invert_table(table));
}

/// Deterministic key-derived table: the key's digest seeds a Fisher-Yates
/// shuffle of the alphabet.  The same key and alphabet always produce the
/// same table.  This is a classical symmetric substitution scheme, not a
/// replacement for modern encryption.
inline SubstitutionTable generate_table(std::string_view key,
                                        const Alphabet& alphabet) {
  if (key.empty())
    raise(ErrorCode::invalid_parameter, "generate_table: key must be non-empty");
  const auto digest = detail::sha256(key);
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i)
    seed = (seed << 8) | digest[static_cast<std::size_t>(i)];
  std::mt19937_64 rng(seed);
  // uniform_int_distribution is not pinned down by the standard; draw by
  // rejection so identical keys give identical tables on every platform.
  const auto draw = [&rng](std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t v;
    do {
      v = rng();
    } while (v >= limit);
    return v % bound;
  };
  std::u32string images{alphabet.symbols()};
  for (std::size_t i = images.size() - 1; i > 0; --i)
    std::swap(images[i], images[static_cast<std::size_t>(draw(i + 1))]);
  return {alphabet, std::move(images)};
}

/// Full-mode document: every alphabet character substituted, empty manifest.
inline EncryptedDocument encrypt_document(std::u32string_view content,
                                          const SubstitutionTable& table) {
  return {1, EncryptionMode::full, table.fingerprint(), {},
          encrypt_content(content, table)};
}

/// Substitute only the selected positions.  Selected non-letters stay
/// untouched and are dropped from the manifest, so the manifest records
/// exactly the positions that were substituted.
inline EncryptedDocument selective_encrypt(std::u32string_view content,
                                           const SubstitutionTable& table,
                                           const Selection& selection) {
  for (std::size_t idx : selection.indices)
    if (idx >= content.size())
      raise(ErrorCode::invalid_selection,
            "selective_encrypt: selection index " + std::to_string(idx) +
                " is out of range for content of length " +
                std::to_string(content.size()));
  std::vector<std::size_t> chosen{selection.indices};
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  EncryptedDocument doc{1, EncryptionMode::selective, table.fingerprint(), {},
                        std::u32string(content)};
  doc.manifest.reserve(chosen.size());
  for (std::size_t idx : chosen) {
    if (const auto pos = table.alphabet().find(doc.ciphertext[idx])) {
      doc.ciphertext[idx] = table.images()[*pos];
      doc.manifest.push_back(idx);
    }
  }
  return doc;
}

/// Reverse a document produced by selective_encrypt or encrypt_document.
/// The table fingerprint must match; manifest entries must point at alphabet
/// characters inside the ciphertext.
inline std::u32string selective_decrypt(const EncryptedDocument& doc,
                                        const SubstitutionTable& table) {
  if (doc.table_fingerprint != table.fingerprint())
    raise(ErrorCode::wrong_key,
          "table fingerprint does not match the document");
  if (doc.mode == EncryptionMode::full)
    return decrypt_content(doc.ciphertext, table);
  const SubstitutionTable inverse = invert_table(table);
  std::u32string text{doc.ciphertext};
  for (std::size_t idx : doc.manifest) {
    if (idx >= text.size())
      raise(ErrorCode::corrupt_document,
            "manifest index " + std::to_string(idx) +
                " is past the end of the ciphertext");
    const auto pos = inverse.alphabet().find(text[idx]);
    if (!pos)
      raise(ErrorCode::corrupt_document,
            "manifest index " + std::to_string(idx) +
                " does not hold an alphabet character");
    text[idx] = inverse.images()[*pos];
  }
  return text;
}

}  // namespace fuzzcrypt
