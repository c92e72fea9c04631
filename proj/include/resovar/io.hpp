#pragma once

#include <string>

#include "resovar/corpus.hpp"

namespace resovar {

// Parse failure with one line-numbered diagnostic per violation.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/*
 * Line-oriented input format ('#' starts a comment, blank lines ignored):
 *
 *   ring | threeform           first non-comment token selects the kind
 *   n <non-negative integer>
 *   m <non-negative integer>   ring only
 *   mu <i> <j> <k> <p>[/<q>]   1-based; ring: i < j <= n, k <= m;
 *                              threeform: i < j < k <= n
 *
 * Duplicate keys and out-of-range indices are rejected. n = 0 parses (the
 * screen rejects it with a scope message) but no constants can follow.
 */
Payload parse_input(const std::string& text);

// Canonical text form; parse(serialize(x)) == x, byte-for-byte stable.
std::string serialize(const CupData& c);
std::string serialize(const ThreeForm& t);
std::string serialize(const Payload& p);

// Fixed-layout machine-readable report with keys, in order:
// b1, b2, parity, r1_full, witness, cup_image_dim, verdict, reasons.
// The resonance fields always describe depth d = 1.
std::string json_report(const Payload& p);

// Human-readable reports for the CLI subcommands.
std::string text_report_resonance(const Payload& p, Eigen::Index d);
std::string text_report_isotropy(const Payload& p);
std::string text_report_screen(const Payload& p);

std::string format_matrix(const LinFormMatrix& M);
std::string format_matrix(const QMatrix& M);

}  // namespace resovar
