#include "cotlar/exact.hpp"

#include <cctype>

#include "cotlar/error.hpp"

namespace cotlar {

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const ExactComplex& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag;
  if (z.im == 1) {
    imag = "i";
  } else if (z.im == -1) {
    imag = "-i";
  } else {
    imag = to_string(z.im) + "i";
  }
  if (z.re == 0) return imag;
  return to_string(z.re) + (z.im > 0 ? "+" : "") + imag;
}

namespace {

Rational parse_rational(std::string_view text, std::string_view whole) {
  auto fail = [&] {
    return Error(ErrorCode::InvalidDescriptor, "malformed scalar '" + std::string(whole) + "'");
  };
  if (text.empty()) throw fail();
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view digits) {
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (start == digits.size()) throw fail();
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw fail();
    }
    std::string s(digits[0] == '+' ? digits.substr(1) : digits);
    return boost::multiprecision::cpp_int(s);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw fail();
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace

ExactComplex parse_exact_complex(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::string_view s = compact;
  if (s.empty()) throw Error(ErrorCode::InvalidDescriptor, "empty scalar");
  if (s.back() != 'i') return {parse_rational(s, text), 0};

  s.remove_suffix(1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view real_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
  std::string_view imag_part = split == std::string_view::npos ? s : s.substr(split);
  Rational imag;
  if (imag_part.empty() || imag_part == "+") {
    imag = 1;
  } else if (imag_part == "-") {
    imag = -1;
  } else {
    imag = parse_rational(imag_part, text);
  }
  Rational real = real_part.empty() ? Rational(0) : parse_rational(real_part, text);
  return {real, imag};
}

}  // namespace cotlar
