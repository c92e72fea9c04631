// resovar: resonance varieties, isotropy invariants, and Kahler-group
// obstruction screens from cup-product structure constants.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "resovar/io.hpp"
#include "resovar/prng.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

enum class Format { Text, Json };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "resovar: first resonance varieties, cup-product isotropy invariants, and\n"
      "Kahler / 3-manifold obstruction screens over exact rational arithmetic"};
  app.require_subcommand(1);

  Format format = Format::Text;
  const std::map<std::string, Format> format_map{{"text", Format::Text}, {"json", Format::Json}};

  std::string input_path;
  long depth = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", input_path, "input file ('-' for stdin)")->required();
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
  };

  CLI::App* resonance_cmd =
      app.add_subcommand("resonance", "Delta matrix, determinantal generators, fullness");
  add_common(resonance_cmd);
  resonance_cmd->add_option("--d", depth, "resonance depth (1 <= d <= n-1)")->default_val(1);

  CLI::App* isotropy_cmd =
      app.add_subcommand("isotropy", "cup image dimension and greedy isotropic subspace");
  add_common(isotropy_cmd);

  CLI::App* screen_cmd =
      app.add_subcommand("screen", "Kahler / 3-manifold obstruction verdict");
  add_common(screen_cmd);

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "list or export built-in examples");
  std::string export_name;
  corpus_cmd->add_option("--export", export_name, "print the named entry in input format");

  CLI::App* random_cmd =
      app.add_subcommand("random-3form", "emit a seeded random alternating 3-form file");
  long random_n = 0;
  std::uint64_t seed = 0;
  long max_abs = 5;
  random_cmd->add_option("--n", random_n, "dimension of H^1")->required();
  random_cmd->add_option("--seed", seed, "PRNG seed (required for reproducibility)")->required();
  random_cmd->add_option("--max-abs", max_abs, "entries drawn from [-max-abs, max-abs]")
      ->default_val(5);

  CLI11_PARSE(app, argc, argv);

  try {
    if (resonance_cmd->parsed() || isotropy_cmd->parsed() || screen_cmd->parsed()) {
      const resovar::Payload payload = resovar::parse_input(read_input(input_path));
      if (format == Format::Json) {
        std::cout << resovar::json_report(payload);
      } else if (resonance_cmd->parsed()) {
        std::cout << resovar::text_report_resonance(payload, depth);
      } else if (isotropy_cmd->parsed()) {
        std::cout << resovar::text_report_isotropy(payload);
      } else {
        std::cout << resovar::text_report_screen(payload);
      }
      return 0;
    }

    if (corpus_cmd->parsed()) {
      if (!export_name.empty()) {
        std::cout << resovar::serialize(resovar::corpus_get(export_name).payload);
      } else {
        for (const auto& entry : resovar::corpus_entries()) {
          std::cout << entry.name << "  ("
                    << (std::holds_alternative<resovar::CupData>(entry.payload) ? "ring"
                                                                                : "threeform")
                    << ", expected " << entry.expected.verdict << ")\n";
        }
      }
      return 0;
    }

    if (random_cmd->parsed()) {
      if (random_n < 1) throw std::runtime_error("random-3form: --n must be >= 1");
      if (max_abs < 1) throw std::runtime_error("random-3form: --max-abs must be >= 1");
      resovar::ThreeForm t(random_n);
      resovar::SplitMix64 rng(seed);
      for (int i = 1; i <= random_n; ++i)
        for (int j = i + 1; j <= random_n; ++j)
          for (int k = j + 1; k <= random_n; ++k)
            t.set(i, j, k, resovar::Rational(rng.uniform_int(-max_abs, max_abs)));
      std::cout << resovar::serialize(t);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
