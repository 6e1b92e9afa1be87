#include "weil/label.hpp"

#include "weil/error.hpp"

namespace weil {

LabelConvention parse_label_convention(std::string_view text) {
  if (text == "lmfdb") return LabelConvention::Lmfdb;
  if (text == "negated") return LabelConvention::Negated;
  throw WeilError(ErrorCode::InvalidArgument, "unknown label convention '" + std::string(text) + "'");
}

BigInt decode_token(std::string_view token) {
  if (token.empty()) throw WeilError(ErrorCode::LabelSyntax, "empty coefficient token");
  bool negative = false;
  if (token.size() > 1 && token[0] == 'a') {
    negative = true;
    token.remove_prefix(1);
  }
  BigInt v = 0;
  for (char ch : token) {
    if (ch < 'a' || ch > 'z')
      throw WeilError(ErrorCode::LabelSyntax, "bad character '" + std::string(1, ch) + "' in token");
    v = v * 26 + (ch - 'a');
  }
  if (negative && v == 0) throw WeilError(ErrorCode::LabelSyntax, "negative zero token");
  return negative ? BigInt(-v) : v;
}

std::string encode_token(const BigInt& value) {
  BigInt v = abs(value);
  std::string digits;
  do {
    const BigInt r = v % 26;
    digits.insert(digits.begin(), static_cast<char>('a' + r.get_si()));
    v /= 26;
  } while (v != 0);
  return value < 0 ? "a" + digits : digits;
}

InstanceLabel parse_label(std::string_view text, LabelConvention conv) {
  const auto dot1 = text.find('.');
  const auto dot2 = dot1 == std::string_view::npos ? dot1 : text.find('.', dot1 + 1);
  if (dot2 == std::string_view::npos)
    throw WeilError(ErrorCode::LabelSyntax, "label must look like g.q.tokens");
  InstanceLabel label;
  try {
    label.g = std::stoi(std::string(text.substr(0, dot1)));
    label.q = BigInt(std::string(text.substr(dot1 + 1, dot2 - dot1 - 1)));
  } catch (const std::exception&) {
    throw WeilError(ErrorCode::LabelSyntax, "cannot read g and q from '" + std::string(text) + "'");
  }
  if (label.g < 1) throw WeilError(ErrorCode::LabelSyntax, "g must be positive");
  std::string_view rest = text.substr(dot2 + 1);
  while (true) {
    const auto us = rest.find('_');
    BigInt v = decode_token(rest.substr(0, us));
    label.a.push_back(conv == LabelConvention::Negated ? BigInt(-v) : v);
    if (us == std::string_view::npos) break;
    rest.remove_prefix(us + 1);
  }
  if (static_cast<int>(label.a.size()) != label.g)
    throw WeilError(ErrorCode::LabelSyntax, "expected " + std::to_string(label.g) + " coefficient tokens");
  return label;
}

std::string format_label(const InstanceLabel& label, LabelConvention conv) {
  std::string out = std::to_string(label.g) + "." + label.q.get_str() + ".";
  for (std::size_t i = 0; i < label.a.size(); ++i) {
    if (i) out += "_";
    out += encode_token(conv == LabelConvention::Negated ? BigInt(-label.a[i]) : label.a[i]);
  }
  return out;
}

IntPoly label_coefficients(const InstanceLabel& label) {
  const int g = label.g;
  IntPoly c(static_cast<std::size_t>(2 * g + 1));
  c[static_cast<std::size_t>(2 * g)] = 1;
  for (int i = 1; i <= g; ++i) c[static_cast<std::size_t>(2 * g - i)] = label.a[static_cast<std::size_t>(i - 1)];
  for (int i = 0; i < g; ++i) {
    BigInt qp;
    mpz_pow_ui(qp.get_mpz_t(), label.q.get_mpz_t(), static_cast<unsigned long>(g - i));
    c[static_cast<std::size_t>(i)] = qp * c[static_cast<std::size_t>(2 * g - i)];
  }
  return c;
}

InstanceLabel label_of(const WeilPolynomial& P) {
  InstanceLabel label;
  label.g = P.g;
  label.q = P.q.q;
  for (int i = 1; i <= P.g; ++i) label.a.push_back(P.coeffs[static_cast<std::size_t>(2 * P.g - i)]);
  return label;
}

}  // namespace weil
