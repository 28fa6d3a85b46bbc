// Walkthrough of the library surface: fuzzify a short text, rank its
// characters, then encrypt only the most relevant ones and undo it.

#include <iostream>

#include "fuzzcrypt/fuzzcrypt.hpp"

int main() {
  using namespace fuzzcrypt;

  const CategorySet cats(
      {
          {"lowercase", 109.5, 7.5, 1.0},
          {"uppercase", 77.5, 7.5, 1.0},
          {"digits", 52.5, 2.6, 1.0},
      },
      MembershipKind::rational(2.0));

  const std::u32string text = U"Pay agent 007 in Gold.";
  const FeatureStream stream = featurize(text, CrispEncoding::code_point);
  const MembershipMatrix matrix = fuzzify(stream.values(), cats);
  const RelevanceScores scores = relevance_scores(matrix, cats);

  std::cout << "most relevant characters first:\n";
  for (std::size_t r = 0; r < 5; ++r) {
    const std::size_t i = scores.ranking[r];
    std::cout << "  #" << r + 1 << "  index " << i << "  score "
              << format_double(scores.scores[i]) << "\n";
  }

  const SubstitutionTable table =
      generate_table("a shared secret", Alphabet::ascii_letters());
  const Selection pick = select_top_k(scores, 8);
  const EncryptedDocument doc = selective_encrypt(text, table, pick);

  std::cout << "ciphertext: " << detail::utf8_encode(doc.ciphertext) << "\n";
  std::cout << "substituted positions: " << doc.manifest.size() << "\n";
  std::cout << "envelope: " << write_envelope(doc) << "\n";

  const std::u32string restored = selective_decrypt(doc, table);
  std::cout << "restored matches input: "
            << (restored == text ? "yes" : "no") << "\n";
  return 0;
}
