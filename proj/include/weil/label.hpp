#pragma once

// Isogeny class labels "g.q.tok_tok_..." where token i encodes a_i, the
// coefficient of t^(2g-i), in base 26 with a = 0; a leading 'a' on a longer
// token marks a negative value.

#include <string>
#include <string_view>
#include <vector>

#include "weil/weil_poly.hpp"

namespace weil {

enum class LabelConvention {
  Lmfdb,    // tokens are a_1..a_g
  Negated,  // tokens are -a_1..-a_g
};

LabelConvention parse_label_convention(std::string_view text);

struct InstanceLabel {
  int g = 0;
  BigInt q;
  std::vector<BigInt> a;  // a_1..a_g
};

BigInt decode_token(std::string_view token);
std::string encode_token(const BigInt& value);

InstanceLabel parse_label(std::string_view text, LabelConvention conv = LabelConvention::Lmfdb);
std::string format_label(const InstanceLabel& label, LabelConvention conv = LabelConvention::Lmfdb);

/// Full coefficient list c_0..c_{2g} via the functional equation.
IntPoly label_coefficients(const InstanceLabel& label);
InstanceLabel label_of(const WeilPolynomial& P);

}  // namespace weil
