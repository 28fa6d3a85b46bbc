// Command-line front end: fuzzify, rank, encrypt, decrypt and roundtrip
// subcommands over the library pipeline.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "fuzzcrypt/fuzzcrypt.hpp"

namespace {

using namespace fuzzcrypt;

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    raise(ErrorCode::io, "cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) raise(ErrorCode::io, "failed writing '" + path.string() + "'");
}

void emit(const std::string& output_path, std::string_view content) {
  if (output_path.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    write_file(output_path, content);
  }
}

struct ReportArgs {
  std::string config_path;
  std::string input_path;
  std::string output_path;  // empty: stdout
  std::string format = "csv";
  bool html = false;
};

std::u32string load_input_text(const ReportArgs& args) {
  const Document doc = load_text(args.input_path);
  return args.html ? extract_text_from_html(doc.text) : doc.text;
}

void add_common(CLI::App* cmd, ReportArgs& args, bool with_format,
                bool with_html) {
  cmd->add_option("--config", args.config_path, "Pipeline config (JSON)")
      ->required();
  cmd->add_option("--input", args.input_path, "Input file")->required();
  if (with_format)
    cmd->add_option("--format", args.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
  if (with_html)
    cmd->add_flag("--html", args.html,
                  "Extract visible text from HTML before processing");
}

void cmd_fuzzify(const ReportArgs& args) {
  const PipelineConfig cfg = parse_config(args.config_path);
  const std::u32string text = load_input_text(args);
  const FeatureStream stream = featurize(text, cfg.encoding);
  const MembershipMatrix matrix =
      stream.entries.empty()
          ? MembershipMatrix(0, cfg.categories.size(), {})
          : fuzzify(stream.values(), cfg.categories);
  emit(args.output_path,
       args.format == "csv"
           ? membership_report_csv(stream, matrix, cfg.categories)
           : membership_report_json(stream, matrix, cfg.categories));
}

void cmd_rank(const ReportArgs& args) {
  const PipelineConfig cfg = parse_config(args.config_path);
  const std::u32string text = load_input_text(args);
  const FeatureStream stream = featurize(text, cfg.encoding);
  const RelevanceScores scores = score_stream(stream, cfg.categories);
  emit(args.output_path, args.format == "csv"
                             ? ranking_report_csv(stream, scores)
                             : ranking_report_json(stream, scores));
}

void cmd_encrypt(const ReportArgs& args) {
  const PipelineConfig cfg = parse_config(args.config_path);
  const std::u32string text = load_input_text(args);
  const PipelineResult result = run_encrypt(text, cfg);
  write_file(args.output_path, write_envelope(result.document));
}

void cmd_decrypt(const ReportArgs& args) {
  const PipelineConfig cfg = parse_config(args.config_path);
  const Document envelope_file = load_text(args.input_path);
  const EncryptedDocument doc = read_envelope(envelope_file.raw);
  const std::u32string text = run_decrypt(doc, cfg);
  // Only reached after the fingerprint check: a wrong key writes nothing.
  write_file(args.output_path, detail::utf8_encode(text));
}

void cmd_roundtrip(const ReportArgs& args) {
  const PipelineConfig cfg = parse_config(args.config_path);
  const std::u32string text = load_input_text(args);
  const RoundtripReport report = make_roundtrip_report(text, cfg);
  emit(args.output_path, args.format == "csv" ? roundtrip_report_csv(report)
                                              : roundtrip_report_json(report));
}

int run(int argc, char** argv) {
  CLI::App app{
      "Fuzzy relevance scoring and reversible substitution encryption for "
      "text and HTML content"};
  app.require_subcommand(1);

  ReportArgs fuzzify_args;
  auto* fuzzify_cmd = app.add_subcommand(
      "fuzzify", "Emit the membership matrix for every character");
  add_common(fuzzify_cmd, fuzzify_args, true, true);
  fuzzify_cmd->add_option("--output", fuzzify_args.output_path,
                          "Report file (default: stdout)");
  fuzzify_cmd->callback([&] { cmd_fuzzify(fuzzify_args); });

  ReportArgs rank_args;
  auto* rank_cmd = app.add_subcommand(
      "rank", "Rank characters by relevance score, highest first");
  add_common(rank_cmd, rank_args, true, true);
  rank_cmd->add_option("--output", rank_args.output_path,
                       "Report file (default: stdout)");
  rank_cmd->callback([&] { cmd_rank(rank_args); });

  ReportArgs encrypt_args;
  auto* encrypt_cmd = app.add_subcommand(
      "encrypt", "Encrypt per the config selection and write an envelope");
  add_common(encrypt_cmd, encrypt_args, false, true);
  encrypt_cmd
      ->add_option("--output", encrypt_args.output_path, "Envelope file")
      ->required();
  encrypt_cmd->callback([&] { cmd_encrypt(encrypt_args); });

  ReportArgs decrypt_args;
  auto* decrypt_cmd = app.add_subcommand(
      "decrypt", "Recover plaintext from an envelope with the config key");
  add_common(decrypt_cmd, decrypt_args, false, false);
  decrypt_cmd
      ->add_option("--output", decrypt_args.output_path, "Plaintext file")
      ->required();
  decrypt_cmd->callback([&] { cmd_decrypt(decrypt_args); });

  ReportArgs roundtrip_args;
  auto* roundtrip_cmd = app.add_subcommand(
      "roundtrip", "Encrypt and decrypt in memory, then report the outcome");
  add_common(roundtrip_cmd, roundtrip_args, true, true);
  roundtrip_cmd->add_option("--output", roundtrip_args.output_path,
                            "Report file (default: stdout)");
  roundtrip_cmd->callback([&] { cmd_roundtrip(roundtrip_args); });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fuzzcrypt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fuzzcrypt::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
