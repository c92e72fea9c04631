#include "resovar/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace resovar {

namespace {

struct Line {
  std::vector<std::string> tokens;
  int number;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{{}, number};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

class Diagnostics {
 public:
  void error(int line, const std::string& message) { messages_.emplace_back(line, message); }
  bool empty() const { return messages_.empty(); }
  [[noreturn]] void raise() {
    std::stable_sort(messages_.begin(), messages_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::ostringstream os;
    for (std::size_t i = 0; i < messages_.size(); ++i) {
      if (i) os << "\n";
      os << "line " << messages_[i].first << ": " << messages_[i].second;
    }
    throw ParseError(os.str());
  }

 private:
  std::vector<std::pair<int, std::string>> messages_;
};

std::optional<long> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Reads a "n <value>"-style header line; returns the value or records an error.
std::optional<long> header_value(const Line& line, const std::string& key, Diagnostics& diag) {
  if (line.tokens.size() != 2) {
    diag.error(line.number, "expected '" + key + " <integer>'");
    return std::nullopt;
  }
  auto value = parse_int(line.tokens[1]);
  if (!value || *value < 0) {
    diag.error(line.number, "'" + key + "' needs a non-negative integer, got '" +
                                line.tokens[1] + "'");
    return std::nullopt;
  }
  return value;
}

}  // namespace

Payload parse_input(const std::string& text) {
  Diagnostics diag;
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("line 1: empty input; expected 'ring' or 'threeform'");

  std::size_t pos = 0;
  const Line& kind_line = lines[pos];
  const std::string kind = kind_line.tokens[0];
  if (kind != "ring" && kind != "threeform") {
    diag.error(kind_line.number, "unknown kind '" + kind + "'; expected 'ring' or 'threeform'");
    diag.raise();
  }
  if (kind_line.tokens.size() != 1)
    diag.error(kind_line.number, "unexpected tokens after '" + kind + "'");
  ++pos;

  long n = -1, m = -1;
  if (pos < lines.size() && !lines[pos].tokens.empty() && lines[pos].tokens[0] == "n") {
    if (auto v = header_value(lines[pos], "n", diag)) n = *v;
    ++pos;
  } else {
    diag.error(pos < lines.size() ? lines[pos].number : kind_line.number,
               "expected 'n <integer>' after the kind line");
  }
  if (kind == "ring") {
    if (pos < lines.size() && !lines[pos].tokens.empty() && lines[pos].tokens[0] == "m") {
      if (auto v = header_value(lines[pos], "m", diag)) m = *v;
      ++pos;
    } else {
      diag.error(pos < lines.size() ? lines[pos].number : kind_line.number,
                 "ring input requires 'm <integer>' after 'n'");
    }
  }
  if (!diag.empty()) diag.raise();

  struct MuLine {
    long i, j, k;
    Rational value;
    int line;
  };
  std::vector<MuLine> mu_lines;
  for (; pos < lines.size(); ++pos) {
    const Line& line = lines[pos];
    if (line.tokens[0] != "mu") {
      diag.error(line.number, "unknown directive '" + line.tokens[0] + "'; expected 'mu'");
      continue;
    }
    if (line.tokens.size() != 5) {
      diag.error(line.number, "expected 'mu <i> <j> <k> <p>[/<q>]'");
      continue;
    }
    auto i = parse_int(line.tokens[1]);
    auto j = parse_int(line.tokens[2]);
    auto k = parse_int(line.tokens[3]);
    auto value = parse_rational(line.tokens[4]);
    if (!i || !j || !k) {
      diag.error(line.number, "indices must be integers");
      continue;
    }
    if (!value) {
      diag.error(line.number, "malformed rational '" + line.tokens[4] + "'");
      continue;
    }
    mu_lines.push_back({*i, *j, *k, *value, line.number});
  }

  std::set<std::tuple<long, long, long>> seen;
  auto check_dup = [&](const MuLine& mu) {
    if (!seen.insert({mu.i, mu.j, mu.k}).second) {
      diag.error(mu.line, "duplicate key mu " + std::to_string(mu.i) + " " +
                              std::to_string(mu.j) + " " + std::to_string(mu.k));
      return false;
    }
    return true;
  };

  if (kind == "ring") {
    CupData c(n, m);
    for (const auto& mu : mu_lines) {
      if (!(1 <= mu.i && mu.i < mu.j && mu.j <= n)) {
        diag.error(mu.line, "ring keys require 1 <= i < j <= n = " + std::to_string(n));
        continue;
      }
      if (!(1 <= mu.k && mu.k <= m)) {
        diag.error(mu.line, "ring keys require 1 <= k <= m = " + std::to_string(m));
        continue;
      }
      if (!check_dup(mu)) continue;
      c.set(static_cast<int>(mu.i), static_cast<int>(mu.j), static_cast<int>(mu.k), mu.value);
    }
    if (!diag.empty()) diag.raise();
    return Payload(c);
  }

  ThreeForm t(n);
  for (const auto& mu : mu_lines) {
    if (!(1 <= mu.i && mu.i < mu.j && mu.j < mu.k && mu.k <= n)) {
      diag.error(mu.line, "threeform keys require 1 <= i < j < k <= n = " + std::to_string(n));
      continue;
    }
    if (!check_dup(mu)) continue;
    t.set(static_cast<int>(mu.i), static_cast<int>(mu.j), static_cast<int>(mu.k), mu.value);
  }
  if (!diag.empty()) diag.raise();
  return Payload(t);
}

std::string serialize(const CupData& c) {
  std::ostringstream os;
  os << "ring\n";
  os << "n " << c.n() << "\n";
  os << "m " << c.m() << "\n";
  for (const auto& [key, value] : c.constants()) {
    const auto [i, j, k] = key;
    os << "mu " << i << " " << j << " " << k << " " << format_rational(value) << "\n";
  }
  return os.str();
}

std::string serialize(const ThreeForm& t) {
  std::ostringstream os;
  os << "threeform\n";
  os << "n " << t.n() << "\n";
  for (const auto& [key, value] : t.values()) {
    const auto [i, j, k] = key;
    os << "mu " << i << " " << j << " " << k << " " << format_rational(value) << "\n";
  }
  return os.str();
}

std::string serialize(const Payload& p) {
  return std::visit([](const auto& x) { return serialize(x); }, p);
}

namespace {

const CupData& cup_of(const Payload& p, std::optional<CupData>& storage) {
  if (const auto* c = std::get_if<CupData>(&p)) return *c;
  storage = cup_from_threeform(std::get<ThreeForm>(p));
  return *storage;
}

Verdict verdict_of(const Payload& p) {
  if (const auto* c = std::get_if<CupData>(&p)) return kahler_screen(*c);
  return threemanifold_kahler_screen(std::get<ThreeForm>(p));
}

std::string kind_of(const Payload& p) {
  return std::holds_alternative<CupData>(p) ? "ring" : "threeform";
}

}  // namespace

std::string json_report(const Payload& p) {
  std::optional<CupData> storage;
  const CupData& c = cup_of(p, storage);
  const Verdict verdict = verdict_of(p);

  nlohmann::ordered_json report;
  report["b1"] = static_cast<long>(c.n());
  report["b2"] = static_cast<long>(c.m());
  report["parity"] = c.n() % 2 == 0 ? "even" : "odd";
  // Depth-1 resonance; for n = 1 the witness is the empty minor 1.
  if (c.n() >= 2) {
    ResonanceReport r1 = resonance_ideal(c, 1);
    report["r1_full"] = r1.full_space;
    if (r1.witness)
      report["witness"] = r1.witness->to_string();
    else
      report["witness"] = nullptr;
  } else {
    R1Properness r1 = r1_properness(c);
    report["r1_full"] = !r1.proper;
    if (r1.witness)
      report["witness"] = r1.witness->to_string();
    else
      report["witness"] = nullptr;
  }
  report["cup_image_dim"] = static_cast<long>(cup_image_dim(c, Subspace::whole(c.n())));
  report["verdict"] = verdict.excluded() ? "excluded" : "not-excluded";
  auto reasons = nlohmann::ordered_json::array();
  for (const auto& finding : verdict.reasons) reasons.push_back(reason_tag(finding.reason));
  report["reasons"] = reasons;
  return report.dump() + "\n";
}

std::string format_matrix(const LinFormMatrix& M) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j) os << ", ";
      os << M(i, j).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

std::string format_matrix(const QMatrix& M) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (j) os << ", ";
      os << format_rational(M(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

std::string text_report_resonance(const Payload& p, Eigen::Index d) {
  std::optional<CupData> storage;
  const CupData& c = cup_of(p, storage);
  const LinFormMatrix delta = build_delta(c);
  std::ostringstream os;
  os << "input: " << kind_of(p) << ", b1 = " << c.n() << ", b2 = " << c.m() << "\n";
  os << "Delta (" << delta.rows() << " x " << delta.cols() << "):\n" << format_matrix(delta);
  ResonanceReport report = resonance_ideal(c, d);
  os << "E_" << d << " generators (" << report.ideal.generators.size() << " minors of size "
     << (c.n() - d) << "):\n";
  if (report.ideal.generators.empty()) os << "  none (zero ideal)\n";
  for (const auto& g : report.ideal.generators) os << "  " << g.to_string() << "\n";
  if (report.full_space) {
    os << "R" << d << " = H1 (full)\n";
  } else {
    os << "R" << d << " is a proper subvariety of H1\n";
    if (report.witness) os << "witness: " << report.witness->to_string() << "\n";
  }
  return os.str();
}

std::string text_report_isotropy(const Payload& p) {
  std::optional<CupData> storage;
  const CupData& c = cup_of(p, storage);
  std::ostringstream os;
  os << "input: " << kind_of(p) << ", b1 = " << c.n() << ", b2 = " << c.m() << "\n";
  const Subspace whole = Subspace::whole(c.n());
  const Eigen::Index image = cup_image_dim(c, whole);
  os << "cup image dimension (whole space): " << image << "\n";
  os << "1-isotropic (whole space): " << (image == 1 ? "yes" : "no") << "\n";
  const Subspace greedy = extend_isotropic(c, Subspace(c.n()));
  os << "greedy isotropic subspace (maximal among rational subspaces):\n";
  os << "  dim " << greedy.dim() << "\n";
  if (greedy.dim() > 0) os << format_matrix(greedy.basis());
  return os.str();
}

std::string text_report_screen(const Payload& p) {
  const Verdict verdict = verdict_of(p);
  std::optional<CupData> storage;
  const CupData& c = cup_of(p, storage);
  std::ostringstream os;
  os << "subject: "
     << (verdict.subject == SubjectKind::ThreeFormSubject ? "three-form" : "cup-data") << "\n";
  os << "b1 = " << c.n() << " (" << (c.n() % 2 == 0 ? "even" : "odd") << "), b2 = " << c.m()
     << "\n";
  os << "verdict: " << (verdict.excluded() ? "excluded" : "not-excluded") << "\n";
  if (!verdict.reasons.empty()) {
    os << "reasons:\n";
    for (const auto& finding : verdict.reasons)
      os << "  - " << reason_tag(finding.reason) << ": " << finding.detail << "\n";
  }
  if (!verdict.excluded())
    os << "note: the screen checks necessary conditions only; not-excluded is "
          "not a Kahlerness certificate\n";
  os << "three-manifold consistent: " << (verdict.threemanifold_consistent ? "yes" : "no")
     << "\n";
  return os.str();
}

}  // namespace resovar
