#include "spread/format.hpp"

#include <cctype>

namespace spread {

std::optional<Coeff> parse_coeff(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  const auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t end_num = digits(i);
  if (end_num == i) return std::nullopt;
  std::size_t end = end_num;
  if (end < text.size() && text[end] == '/') {
    const std::size_t end_den = digits(end + 1);
    if (end_den == end + 1) return std::nullopt;
    end = end_den;
  }
  if (end != text.size()) return std::nullopt;

  std::string s(text[0] == '+' ? text.substr(1) : text);
  Coeff c;
  if (c.set_str(s, 10) != 0) return std::nullopt;
  if (sgn(c.get_den()) == 0) return std::nullopt;
  c.canonicalize();
  return c;
}

std::string to_string(const Coeff& c) { return c.get_str(10); }

std::string to_text(const Poly& p, std::string_view var) {
  const auto c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const bool negative = sgn(c[i]) < 0;
    const Coeff mag = abs(c[i]);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    if (i == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += to_string(mag);
      out += '*';
    }
    out += var;
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

std::vector<std::string> to_decimal_strings(const Poly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

std::optional<Poly> from_decimal_strings(const std::vector<std::string>& coeffs) {
  std::vector<Coeff> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) {
    auto c = parse_coeff(s);
    if (!c) return std::nullopt;
    v.push_back(std::move(*c));
  }
  return Poly(std::move(v));
}

}  // namespace spread
