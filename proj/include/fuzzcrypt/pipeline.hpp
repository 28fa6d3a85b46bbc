#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "fuzzcrypt/cipher.hpp"
#include "fuzzcrypt/config.hpp"
#include "fuzzcrypt/feature_select.hpp"
#include "fuzzcrypt/fuzzy.hpp"
#include "fuzzcrypt/ingest.hpp"

namespace fuzzcrypt {

/// What the encrypt path produces besides the document: the relevance scores
/// feed the rank and roundtrip reports.
struct PipelineResult {
  EncryptedDocument document;
  RelevanceScores scores;  // empty for empty input
};

/// Fuzzify and score a feature stream; empty streams yield empty scores.
inline RelevanceScores score_stream(const FeatureStream& stream,
                                    const CategorySet& cats) {
  if (stream.entries.empty()) return {};
  const MembershipMatrix matrix = fuzzify(stream.values(), cats);
  return relevance_scores(matrix, cats);
}

/// Full pipeline: featurize, fuzzify, score, select per the config, then
/// encrypt fully or selectively.
inline PipelineResult run_encrypt(std::u32string_view text,
                                  const PipelineConfig& cfg) {
  const SubstitutionTable table = generate_table(cfg.key, cfg.alphabet);
  const FeatureStream stream = featurize(text, cfg.encoding);
  RelevanceScores scores = score_stream(stream, cfg.categories);
  EncryptedDocument doc = [&]() -> EncryptedDocument {
    switch (cfg.selection.mode) {
      case SelectionSpec::Mode::all:
        return encrypt_document(text, table);
      case SelectionSpec::Mode::top_k:
        return selective_encrypt(text, table,
                                 select_top_k(scores, cfg.selection.k));
      case SelectionSpec::Mode::threshold:
        return selective_encrypt(text, table,
                                 select_by_threshold(scores, cfg.selection.tau));
    }
    raise(ErrorCode::invalid_parameter, "unknown selection mode");
  }();
  return {std::move(doc), std::move(scores)};
}

/// Regenerate the table from the config key and reverse the document; wrong
/// keys are rejected via the fingerprint.
inline std::u32string run_decrypt(const EncryptedDocument& doc,
                                  const PipelineConfig& cfg) {
  return selective_decrypt(doc, generate_table(cfg.key, cfg.alphabet));
}

/// In-memory encrypt + decrypt self-check with summary statistics.
struct RoundtripReport {
  bool ok = false;  // decrypted text equals the input exactly
  std::size_t encrypted_positions = 0;
  std::optional<double> score_min;
  std::optional<double> score_max;
  std::optional<double> score_mean;
};

inline RoundtripReport make_roundtrip_report(std::u32string_view text,
                                             const PipelineConfig& cfg) {
  const PipelineResult result = run_encrypt(text, cfg);
  const std::u32string restored = run_decrypt(result.document, cfg);
  RoundtripReport report;
  report.ok = restored == text;
  if (result.document.mode == EncryptionMode::selective) {
    report.encrypted_positions = result.document.manifest.size();
  } else {
    for (char32_t c : text)
      if (cfg.alphabet.contains(c)) ++report.encrypted_positions;
  }
  if (!result.scores.scores.empty()) {
    double lo = result.scores.scores.front();
    double hi = lo;
    double sum = 0.0;
    for (double s : result.scores.scores) {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
      sum += s;
    }
    report.score_min = lo;
    report.score_max = hi;
    report.score_mean = sum / static_cast<double>(result.scores.scores.size());
  }
  return report;
}

}  // namespace fuzzcrypt
