#include "sliceq/quaternion.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace sliceq {

Quaternion inverse(const Quaternion& q) {
  const double n2 = normsq(q);
  if (n2 == 0.0) throw DivisionByZero("inverse of the zero quaternion");
  return conj(q) * (1.0 / n2);
}

UnitImaginary UnitImaginary::make(const Quaternion& q, double tolerance) {
  if (!is_finite(q)) throw NonFinite("unit imaginary with non-finite component");
  if (std::abs(q.x0) > tolerance || std::abs(norm(q) - 1.0) > tolerance) {
    throw NotUnitImaginary("not a unit imaginary: " + to_string(q));
  }
  return UnitImaginary(q.imag());
}

UnitImaginary UnitImaginary::from_direction(const Quaternion& direction) {
  const double r = imag_norm(direction);
  if (!(r > 0.0) || !std::isfinite(r)) throw RealPointAmbiguous("direction has no imaginary part");
  return UnitImaginary(direction.imag() * (1.0 / r));
}

UnitImaginary slice_unit(const Quaternion& q) {
  if (is_real(q, tol::kUnit)) {
    throw RealPointAmbiguous("real point " + to_string(q) + " lies on every slice");
  }
  return UnitImaginary::from_direction(q);
}

UnitImaginary slice_unit_or(const Quaternion& q, const UnitImaginary& fallback) {
  return is_real(q, tol::kUnit) ? fallback : UnitImaginary::from_direction(q);
}

bool on_sphere(const Quaternion& q, const Sphere& s, double tolerance) noexcept {
  const double scale = 1.0 + std::abs(s.x) + s.y;
  return std::abs(q.x0 - s.x) <= tolerance * scale && std::abs(imag_norm(q) - s.y) <= tolerance * scale;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
  Quaternion out;
  std::size_t pos = 0;
  const auto skip = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  bool first = true;
  skip();
  if (pos == text.size()) throw SyntaxError(pos, "empty quaternion literal");
  while (true) {
    skip();
    if (pos == text.size()) break;
    double sign = 1.0;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip();
    } else if (!first) {
      throw SyntaxError(pos, "expected '+' or '-'");
    }
    if (pos == text.size()) throw SyntaxError(pos, "dangling sign");
    double value = 1.0;
    bool has_number = false;
    const char c = text[pos];
    if ((c >= '0' && c <= '9') || c == '.') {
      const auto* begin = text.data() + pos;
      const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
      if (ec != std::errc()) throw SyntaxError(pos, "malformed number");
      if (!std::isfinite(value)) throw SyntaxError(pos, "non-finite component");
      pos += static_cast<std::size_t>(ptr - begin);
      has_number = true;
      skip();
    }
    int unit = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      unit = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (!has_number) {
      throw SyntaxError(pos, "expected number or unit");
    }
    const double term = sign * value;
    switch (unit) {
      case 0: out.x0 += term; break;
      case 1: out.x1 += term; break;
      case 2: out.x2 += term; break;
      default: out.x3 += term; break;
    }
    first = false;
  }
  return out;
}

namespace {

std::string format_number(double v, int digits) {
  std::array<char, 64> buf{};
  const auto res = digits > 0
                       ? std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, digits)
                       : std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return {buf.data(), res.ptr};
}

}  // namespace

std::string to_string(const Quaternion& q, int significant_digits, double drop_below) {
  const std::array<double, 4> c{q.x0, q.x1, q.x2, q.x3};
  const std::array<const char*, 4> unit{"", "i", "j", "k"};
  const double cutoff = drop_below * norm(q);
  std::string out;
  for (std::size_t n = 0; n < 4; ++n) {
    double v = c[n];
    if (v == 0.0 || std::abs(v) <= cutoff) continue;
    if (significant_digits > 0) v = std::stod(format_number(v, significant_digits));
    if (v == 0.0) continue;
    const bool negative = v < 0.0;
    if (negative) out += '-';
    else if (!out.empty()) out += '+';
    const double mag = std::abs(v);
    if (!(n > 0 && mag == 1.0)) out += format_number(mag, significant_digits);
    out += unit[n];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << to_string(q); }

}  // namespace sliceq
