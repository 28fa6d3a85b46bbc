#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzcrypt/detail/utf8.hpp"
#include "fuzzcrypt/error.hpp"

namespace fuzzcrypt {

/// How a character becomes a crisp number: its Unicode scalar value, or that
/// value divided by the largest scalar so it lands in [0, 1].
enum class CrispEncoding { code_point, normalized_code_point };

/// Largest Unicode scalar value (U+10FFFF); divisor for the normalized
/// encoding.
inline constexpr double max_scalar_value = 1114111.0;

struct Document {
  std::string source;
  std::string raw;      // original bytes
  std::u32string text;  // decoded scalar values
};

struct FeatureEntry {
  std::size_t index;
  char32_t character;
  double crisp;
};

/// The characters of a text as an ordered crisp-value stream; entry i always
/// describes text position i.
struct FeatureStream {
  std::vector<FeatureEntry> entries;
  CrispEncoding encoding = CrispEncoding::code_point;

  std::vector<double> values() const {
    std::vector<double> out;
    out.reserve(entries.size());
    for (const FeatureEntry& e : entries) out.push_back(e.crisp);
    return out;
  }
};

/// Read a file as UTF-8 text.  Unreadable paths raise io; invalid UTF-8
/// raises encoding (never lossy replacement).
inline Document load_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    raise(ErrorCode::io, "cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) raise(ErrorCode::io, "failed reading '" + path.string() + "'");
  Document doc{path.string(), buffer.str(), {}};
  doc.text = detail::utf8_decode(doc.raw);
  return doc;
}

namespace detail {

inline bool ascii_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v';
}

inline bool ascii_alpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

inline char32_t ascii_lower(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + 32 : c;
}

// Case-insensitive match of an ASCII needle at position i.
inline bool matches_ci(std::u32string_view raw, std::size_t i,
                       std::u32string_view needle) {
  if (i + needle.size() > raw.size()) return false;
  for (std::size_t k = 0; k < needle.size(); ++k)
    if (ascii_lower(raw[i + k]) != needle[k]) return false;
  return true;
}

// amp/lt/gt/quot/apos plus numeric forms; anything else stays literal.
inline std::optional<char32_t> decode_entity(std::u32string_view body) {
  if (body == U"amp") return U'&';
  if (body == U"lt") return U'<';
  if (body == U"gt") return U'>';
  if (body == U"quot") return U'"';
  if (body == U"apos") return U'\'';
  if (body.size() >= 2 && body[0] == U'#') {
    std::uint32_t value = 0;
    bool any_digit = false;
    std::size_t k = 1;
    std::uint32_t base = 10;
    if (body[1] == U'x' || body[1] == U'X') {
      base = 16;
      k = 2;
    }
    for (; k < body.size(); ++k) {
      const char32_t c = ascii_lower(body[k]);
      std::uint32_t digit;
      if (c >= U'0' && c <= U'9')
        digit = c - U'0';
      else if (base == 16 && c >= U'a' && c <= U'f')
        digit = 10 + (c - U'a');
      else
        return std::nullopt;
      value = value * base + digit;
      if (value > 0x10ffff) return std::nullopt;
      any_digit = true;
    }
    if (!any_digit) return std::nullopt;
    if (value >= 0xd800 && value <= 0xdfff) return std::nullopt;
    return static_cast<char32_t>(value);
  }
  return std::nullopt;
}

}  // namespace detail

/// Best-effort visible-text extraction from HTML markup: tags and comments
/// are removed, script and style elements are dropped with their contents,
/// the five basic named entities and numeric entities are decoded, and
/// whitespace runs collapse to single spaces with the ends trimmed.
/// Malformed markup never raises; unrecognized constructs pass through as
/// literal text.
inline std::u32string extract_text_from_html(std::u32string_view raw) {
  constexpr auto npos = std::u32string_view::npos;
  const std::size_t n = raw.size();
  std::u32string text;
  text.reserve(n);
  std::size_t i = 0;
  while (i < n) {
    const char32_t c = raw[i];
    if (c == U'<') {
      if (detail::matches_ci(raw, i, U"<!--")) {
        const std::size_t end = raw.find(U"-->", i + 4);
        i = end == npos ? n : end + 3;
        continue;
      }
      // A '<' not followed by a name, '/', '!' or '?' is literal text.
      if (i + 1 >= n ||
          !(detail::ascii_alpha(raw[i + 1]) || raw[i + 1] == U'/' ||
            raw[i + 1] == U'!' || raw[i + 1] == U'?')) {
        text.push_back(c);
        ++i;
        continue;
      }
      std::size_t j = i + 1;
      const bool closing = raw[j] == U'/';
      if (closing) ++j;
      std::u32string name;
      while (j < n && detail::ascii_alpha(raw[j])) {
        name.push_back(detail::ascii_lower(raw[j]));
        ++j;
      }
      while (j < n && raw[j] != U'>') ++j;
      std::size_t after = j < n ? j + 1 : n;
      if (!closing && (name == U"script" || name == U"style")) {
        const std::u32string close = U"</" + name;
        std::size_t k = after;
        while (k < n && !detail::matches_ci(raw, k, close)) ++k;
        if (k >= n) {
          after = n;  // unclosed element: drop the rest
        } else {
          k += close.size();
          while (k < n && raw[k] != U'>') ++k;
          after = k < n ? k + 1 : n;
        }
      }
      i = after;
      continue;
    }
    if (c == U'&') {
      // Entities are short; scan a bounded window for the terminator.
      std::size_t semi = npos;
      for (std::size_t k = i + 1; k < n && k <= i + 32; ++k)
        if (raw[k] == U';') {
          semi = k;
          break;
        }
      if (semi != npos) {
        if (const auto decoded =
                detail::decode_entity(raw.substr(i + 1, semi - i - 1))) {
          text.push_back(*decoded);
          i = semi + 1;
          continue;
        }
      }
      text.push_back(U'&');
      ++i;
      continue;
    }
    text.push_back(c);
    ++i;
  }
  // Collapse whitespace runs and trim both ends in one pass.
  std::u32string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char32_t ch : text) {
    if (detail::ascii_space(ch)) {
      if (!out.empty()) pending_space = true;
    } else {
      if (pending_space) out.push_back(U' ');
      pending_space = false;
      out.push_back(ch);
    }
  }
  return out;
}

/// One feature per character, aligned with text positions.
inline FeatureStream featurize(std::u32string_view text,
                               CrispEncoding encoding) {
  FeatureStream stream;
  stream.encoding = encoding;
  stream.entries.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const double cp = static_cast<double>(text[i]);
    stream.entries.push_back(
        {i, text[i],
         encoding == CrispEncoding::code_point ? cp : cp / max_scalar_value});
  }
  return stream;
}

}  // namespace fuzzcrypt
