#include "resovar/rational.hpp"

#include <cctype>

namespace resovar {

std::optional<Rational> parse_rational(std::string_view text) {
  // -?digits or -?digits/-?digits with a nonzero denominator.
  auto digits_span = [](std::string_view s) -> std::size_t {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i == start ? std::string_view::npos : i;
  };
  const std::size_t num_end = digits_span(text);
  if (num_end == std::string_view::npos) return std::nullopt;
  if (num_end < text.size()) {
    if (text[num_end] != '/') return std::nullopt;
    const std::string_view den = text.substr(num_end + 1);
    if (digits_span(den) != den.size()) return std::nullopt;
  }
  Rational value;
  if (mpq_set_str(value.get_mpq_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
  if (sgn(value.get_den()) == 0) return std::nullopt;  // p/0
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& a) { return a.get_str(); }

}  // namespace resovar
