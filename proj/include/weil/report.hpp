#pragma once

// JSON rendering of reports and parsing of instance descriptions shared by
// the command line tool and batch mode.

#include <optional>
#include <string>

#include <json.hpp>

#include "weil/label.hpp"
#include "weil/tate.hpp"

namespace weil {

using Json = nlohmann::ordered_json;

struct InstanceRequest {
  std::optional<std::string> coeffs;
  std::optional<std::string> label;
  std::string q = "implied";
  bool low_first = false;
  LabelConvention convention = LabelConvention::Lmfdb;
};

struct ParsedInstance {
  IntPoly coeffs;  // low-first
  PrimePower q;
  std::optional<std::string> label;
};

/// Reads coefficients (high degree first unless low_first) or a label.
/// q may be "p^a", an integer, or "implied" (labels only).
ParsedInstance parse_instance(const InstanceRequest& request);

std::string rational_string(const BigRat& r);
Json slopes_json(const SlopeMultiset& s);
Json coeffs_json(const IntPoly& c);  // high degree first, decimal strings
Json vector_json(const IntVec& v);

Json validation_json(const WeilPolynomial& P);
Json report_json(const TateReport& rep, const std::optional<std::string>& label = std::nullopt);

}  // namespace weil
