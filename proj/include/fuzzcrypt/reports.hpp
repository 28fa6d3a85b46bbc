#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "json.hpp"

#include "fuzzcrypt/detail/utf8.hpp"
#include "fuzzcrypt/error.hpp"
#include "fuzzcrypt/feature_select.hpp"
#include "fuzzcrypt/fuzzy.hpp"
#include "fuzzcrypt/ingest.hpp"
#include "fuzzcrypt/pipeline.hpp"

namespace fuzzcrypt {

/// Shortest decimal form that parses back to the identical double.
inline std::string format_double(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, result.ptr};
}

namespace detail {

// RFC 4180 quoting: fields containing a comma, quote or line break are
// wrapped, with embedded quotes doubled.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(s);
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline std::string utf8_char(char32_t c) {
  std::string s;
  utf8_append(s, c);
  return s;
}

}  // namespace detail

inline std::string membership_report_csv(const FeatureStream& stream,
                                         const MembershipMatrix& matrix,
                                         const CategorySet& cats) {
  if (matrix.rows() != stream.entries.size() || matrix.cols() != cats.size())
    raise(ErrorCode::dimension_mismatch,
          "membership report: matrix does not match stream and categories");
  std::string out = "index,character";
  for (const FuzzyCategory& cat : cats.categories())
    out += "," + detail::csv_field(cat.name);
  out += '\n';
  for (std::size_t i = 0; i < stream.entries.size(); ++i) {
    const FeatureEntry& e = stream.entries[i];
    out += std::to_string(e.index);
    out += ',';
    out += detail::csv_field(detail::utf8_char(e.character));
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      out += ',';
      out += format_double(matrix(i, j));
    }
    out += '\n';
  }
  return out;
}

inline std::string membership_report_json(const FeatureStream& stream,
                                          const MembershipMatrix& matrix,
                                          const CategorySet& cats) {
  if (matrix.rows() != stream.entries.size() || matrix.cols() != cats.size())
    raise(ErrorCode::dimension_mismatch,
          "membership report: matrix does not match stream and categories");
  nlohmann::ordered_json j;
  j["categories"] = nlohmann::ordered_json::array();
  for (const FuzzyCategory& cat : cats.categories())
    j["categories"].push_back(cat.name);
  j["rows"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < stream.entries.size(); ++i) {
    const FeatureEntry& e = stream.entries[i];
    nlohmann::ordered_json row;
    row["index"] = e.index;
    row["character"] = detail::utf8_char(e.character);
    row["memberships"] = nlohmann::ordered_json::array();
    for (std::size_t col = 0; col < matrix.cols(); ++col)
      row["memberships"].push_back(matrix(i, col));
    j["rows"].push_back(std::move(row));
  }
  return j.dump() + "\n";
}

/// One row per feature in rank order: original index, character, score and
/// 1-based rank.
inline std::string ranking_report_csv(const FeatureStream& stream,
                                      const RelevanceScores& scores) {
  if (scores.scores.size() != stream.entries.size())
    raise(ErrorCode::dimension_mismatch,
          "ranking report: scores do not match the stream");
  std::string out = "index,character,score,rank\n";
  for (std::size_t r = 0; r < scores.ranking.size(); ++r) {
    const std::size_t i = scores.ranking[r];
    const FeatureEntry& e = stream.entries[i];
    out += std::to_string(e.index);
    out += ',';
    out += detail::csv_field(detail::utf8_char(e.character));
    out += ',';
    out += format_double(scores.scores[i]);
    out += ',';
    out += std::to_string(r + 1);
    out += '\n';
  }
  return out;
}

inline std::string ranking_report_json(const FeatureStream& stream,
                                       const RelevanceScores& scores) {
  if (scores.scores.size() != stream.entries.size())
    raise(ErrorCode::dimension_mismatch,
          "ranking report: scores do not match the stream");
  nlohmann::ordered_json j;
  j["ranking"] = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < scores.ranking.size(); ++r) {
    const std::size_t i = scores.ranking[r];
    nlohmann::ordered_json row;
    row["rank"] = r + 1;
    row["index"] = stream.entries[i].index;
    row["character"] = detail::utf8_char(stream.entries[i].character);
    row["score"] = scores.scores[i];
    j["ranking"].push_back(std::move(row));
  }
  return j.dump() + "\n";
}

inline std::string roundtrip_report_csv(const RoundtripReport& report) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string("n/a");
  };
  std::string out = "key,value\n";
  out += std::string("status,") + (report.ok ? "PASS" : "FAIL") + "\n";
  out += std::string("bytes_equal,") + (report.ok ? "true" : "false") + "\n";
  out += "encrypted_positions," + std::to_string(report.encrypted_positions) +
         "\n";
  out += "score_min," + opt(report.score_min) + "\n";
  out += "score_max," + opt(report.score_max) + "\n";
  out += "score_mean," + opt(report.score_mean) + "\n";
  return out;
}

inline std::string roundtrip_report_json(const RoundtripReport& report) {
  const auto opt = [](const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  nlohmann::ordered_json j;
  j["status"] = report.ok ? "PASS" : "FAIL";
  j["bytes_equal"] = report.ok;
  j["encrypted_positions"] = report.encrypted_positions;
  j["score_min"] = opt(report.score_min);
  j["score_max"] = opt(report.score_max);
  j["score_mean"] = opt(report.score_mean);
  return j.dump() + "\n";
}

}  // namespace fuzzcrypt
