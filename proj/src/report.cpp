#include "weil/report.hpp"

#include <algorithm>
#include <sstream>

#include "weil/error.hpp"

namespace weil {

ParsedInstance parse_instance(const InstanceRequest& request) {
  ParsedInstance out;
  if (request.label && request.coeffs)
    throw WeilError(ErrorCode::InvalidArgument, "give either coefficients or a label, not both");
  if (request.label) {
    const InstanceLabel lab = parse_label(*request.label, request.convention);
    out.coeffs = label_coefficients(lab);
    out.q = request.q == "implied" ? make_prime_power(lab.q) : parse_prime_power(request.q);
    if (out.q.q != lab.q) throw WeilError(ErrorCode::InvalidArgument, "q disagrees with the label");
    out.label = request.label;
    return out;
  }
  if (!request.coeffs) throw WeilError(ErrorCode::InvalidArgument, "no coefficients or label given");
  if (request.q == "implied") throw WeilError(ErrorCode::InvalidArgument, "q must be given with coefficients");
  std::string text = *request.coeffs;
  std::replace(text.begin(), text.end(), ',', ' ');
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      out.coeffs.emplace_back(tok);
    } catch (const std::invalid_argument&) {
      throw WeilError(ErrorCode::InvalidArgument, "bad coefficient '" + tok + "'");
    }
  }
  if (out.coeffs.empty()) throw WeilError(ErrorCode::InvalidArgument, "empty coefficient list");
  if (!request.low_first) std::reverse(out.coeffs.begin(), out.coeffs.end());
  out.q = parse_prime_power(request.q);
  return out;
}

std::string rational_string(const BigRat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Json slopes_json(const SlopeMultiset& s) {
  Json arr = Json::array();
  for (const auto& [slope, count] : s)
    for (int i = 0; i < count; ++i) arr.push_back(rational_string(slope));
  return arr;
}

Json coeffs_json(const IntPoly& c) {
  Json arr = Json::array();
  for (auto it = c.rbegin(); it != c.rend(); ++it) arr.push_back(it->get_str());
  return arr;
}

Json vector_json(const IntVec& v) {
  Json arr = Json::array();
  for (long long x : v) arr.push_back(x);
  return arr;
}

namespace {

Json mult_json(const std::vector<int>& m) {
  Json arr = Json::array();
  for (int x : m) arr.push_back(x);
  return arr;
}

Json function_json(const std::optional<AdmissibleFunction>& f) {
  if (!f) return nullptr;
  Json j;
  j["e"] = vector_json(f->e);
  j["degree"] = f->degree;
  j["weight"] = f->weight;
  return j;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

}  // namespace

Json validation_json(const WeilPolynomial& P) {
  Json j;
  j["valid"] = true;
  j["g"] = P.g;
  j["q"] = P.q.q.get_str();
  j["coeffs"] = coeffs_json(P.coeffs);
  j["multiplicities"] = mult_json(P.multiplicities);
  j["slopes"] = slopes_json(newton_polygon(P));
  return j;
}

Json report_json(const TateReport& rep, const std::optional<std::string>& label) {
  Json j;
  if (label) j["label"] = *label;
  j["coeffs"] = coeffs_json(rep.P.coeffs);
  j["q"] = rep.P.q.q.get_str();
  j["g"] = rep.P.g;
  j["slopes"] = slopes_json(rep.slopes);
  j["weight_bound"] = rep.weight_bound;
  j["m"] = rep.m;
  j["r"] = rep.r;
  j["multiplicities"] = mult_json(rep.P.multiplicities);
  j["small"] = rep.small;
  j["gamma_rank"] = rep.gamma_rank;
  j["base_change"] = rep.base_change;
  Json large;
  large["q"] = rep.large.q.q.get_str();
  large["coeffs"] = coeffs_json(rep.large.coeffs);
  large["m"] = rep.large.sqfree_roots();
  large["multiplicities"] = mult_json(rep.large.multiplicities);
  large["gamma_rank"] = rep.large_gamma_rank;
  large["rank_threshold"] = rep.rank_threshold;
  Json gens = Json::array();
  for (const auto& g : rep.hilbert.generators) gens.push_back(vector_json(g));
  large["hilbert_basis"] = gens;
  large["H"] = rep.hilbert.H;
  j["large_system"] = large;
  j["H"] = rep.hilbert.H;
  j["minimal_reduced"] = function_json(rep.minimal_reduced);
  j["minimal_exotic_power"] = optional_json(rep.minimal_exotic_power);
  j["power_bound"] = optional_json(rep.power_bound);
  Json exc = Json::array();
  for (const auto& x : rep.exceptional) {
    Json row;
    row["n"] = x.n;
    row["d"] = x.d;
    row["witness"] = vector_json(x.witness);
    exc.push_back(row);
  }
  j["max_power"] = rep.max_power;
  j["exceptional"] = exc;
  j["neat"] = to_string(rep.neat);
  j["neat_bound"] = rep.neat == NeatVerdict::NeatUpToBound ? Json(rep.weight_bound) : Json(nullptr);
  if (rep.witness) {
    j["witness"] = vector_json(rep.witness->e);
    j["witness_degree"] = rep.witness->degree;
    j["witness_base_change"] = rep.witness_base_change;
  } else {
    j["witness"] = nullptr;
    j["witness_degree"] = nullptr;
    j["witness_base_change"] = nullptr;
  }
  return j;
}

}  // namespace weil
