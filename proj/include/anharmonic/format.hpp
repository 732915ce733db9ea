#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace anharmonic {

/// Shortest round-trip decimal form; locale independent, at most 17
/// significant digits, identical bytes for identical doubles.
inline std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

/// a, a+bi or a-bi with no whitespace.
inline std::string format_complex(std::complex<double> z) {
  std::string out = format_real(z.real());
  if (z.imag() != 0.0) {
    if (!std::signbit(z.imag())) out += '+';
    out += format_real(z.imag()) + 'i';
  }
  return out;
}

/// Whole-string decimal parse; empty on any leftover characters.
inline std::optional<double> parse_real(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) return std::nullopt;
  return v;
}

/// Accepts a, bi, a+bi, a-bi (also with j) and no whitespace.
inline std::optional<std::complex<double>> parse_complex(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const char last = text.back();
  if (last != 'i' && last != 'j') {
    const auto re = parse_real(text);
    if (!re) return std::nullopt;
    return std::complex<double>(*re, 0.0);
  }
  text.remove_suffix(1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? text : text.substr(split);
  double re = 0.0;
  if (!re_part.empty()) {
    const auto r = parse_real(re_part);
    if (!r) return std::nullopt;
    re = *r;
  }
  double im = 0.0;
  if (im_part == "+" || im_part == "" ) {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    const auto v = parse_real(im_part);
    if (!v) return std::nullopt;
    im = *v;
  }
  return std::complex<double>(re, im);
}

}  // namespace anharmonic
