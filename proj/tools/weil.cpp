// weil: validate and analyze Weil q-polynomials.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "batch.hpp"
#include "weil/error.hpp"
#include "weil/oracle.hpp"
#include "weil/report.hpp"

using weil::Json;

namespace {

constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kPipeline = 3;

struct InputFlags {
  std::string coeffs;
  std::string label;
  std::string q = "implied";
  bool low_first = false;
  std::string convention = "lmfdb";

  void attach(CLI::App* app) {
    app->add_option("--coeffs", coeffs, "comma separated integer coefficients, highest degree first");
    app->add_option("--label", label, "isogeny class label g.q.tokens");
    app->add_option("--q", q, "field size as p^a or an integer; 'implied' takes it from the label");
    app->add_flag("--low-first", low_first, "coefficients are listed from the constant term up");
    app->add_option("--label-convention", convention, "lmfdb or negated")
        ->check(CLI::IsMember({"lmfdb", "negated"}));
  }

  weil::InstanceRequest request() const {
    weil::InstanceRequest s;
    if (!coeffs.empty()) s.coeffs = coeffs;
    if (!label.empty()) s.label = label;
    s.q = q;
    s.low_first = low_first;
    s.convention = weil::parse_label_convention(convention);
    return s;
  }
};

bool is_usage(weil::ErrorCode c) {
  return c == weil::ErrorCode::InvalidArgument || c == weil::ErrorCode::LabelSyntax;
}

Json invalid_json(const weil::WeilError& e) {
  Json j;
  j["valid"] = false;
  j["reason"] = std::string(weil::to_string(e.code()));
  j["detail"] = e.what();
  return j;
}

int cmd_validate(const InputFlags& in) {
  weil::ParsedInstance inst;
  try {
    inst = weil::parse_instance(in.request());
  } catch (const weil::WeilError& e) {
    if (is_usage(e.code())) {
      std::cerr << "weil: " << e.what() << "\n";
      return kUsage;
    }
    std::cout << invalid_json(e).dump(2) << "\n";
    return kInvalid;
  }
  try {
    const weil::WeilPolynomial P = weil::validate(inst.coeffs, inst.q);
    std::cout << weil::validation_json(P).dump(2) << "\n";
    return 0;
  } catch (const weil::WeilError& e) {
    std::cout << invalid_json(e).dump(2) << "\n";
    return kInvalid;
  }
}

void print_summary(const weil::TateReport& rep) {
  std::cout << "P = " << weil::to_string(rep.P.coeffs) << " over F_" << rep.P.q.q << " (g = " << rep.P.g << ")\n";
  std::cout << "distinct roots m = " << rep.m << ", conjugate pairs r = " << rep.r
            << (rep.small ? ", field is small" : "") << ", gamma rank " << rep.gamma_rank << "\n";
  std::cout << "base change " << rep.base_change << ": " << weil::to_string(rep.large.coeffs) << " over F_"
            << rep.large.q.q << ", gamma rank " << rep.large_gamma_rank << " (threshold " << rep.rank_threshold
            << ")\n";
  std::cout << "Hilbert basis:";
  for (const auto& g : rep.hilbert.generators) {
    std::cout << " (";
    for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? "," : "") << g[i];
    std::cout << ")";
  }
  std::cout << "  H = " << rep.hilbert.H << "\n";
  if (rep.minimal_reduced) {
    std::cout << "minimal reduced function:";
    for (long long x : rep.minimal_reduced->e) std::cout << " " << x;
    std::cout << " (degree " << rep.minimal_reduced->degree << ")\n";
  } else {
    std::cout << "no reduced function of weight <= " << rep.weight_bound << "\n";
  }
  if (rep.minimal_exotic_power) std::cout << "minimal exotic power " << *rep.minimal_exotic_power << "\n";
  std::cout << "verdict: " << weil::to_string(rep.neat);
  if (rep.neat == weil::NeatVerdict::NeatUpToBound) std::cout << " (weight <= " << rep.weight_bound << ")";
  std::cout << "\n";
}

int cmd_analyze(const InputFlags& in, const weil::AnalyzeOptions& opt, bool json) {
  weil::ParsedInstance inst;
  weil::WeilPolynomial P;
  try {
    inst = weil::parse_instance(in.request());
    P = weil::validate(inst.coeffs, inst.q);
  } catch (const weil::WeilError& e) {
    if (is_usage(e.code())) {
      std::cerr << "weil: " << e.what() << "\n";
      return kUsage;
    }
    if (json) std::cout << invalid_json(e).dump(2) << "\n";
    std::cerr << "weil: " << e.what() << "\n";
    return kInvalid;
  }
  try {
    const weil::TateReport rep = weil::neat_decision(P, opt);
    if (json)
      std::cout << weil::report_json(rep, inst.label).dump(2) << "\n";
    else
      print_summary(rep);
    return 0;
  } catch (const weil::WeilError& e) {
    std::cerr << "weil: " << e.what() << "\n";
    return kPipeline;
  }
}

int cmd_oracle_check(const InputFlags& in, int max_n, int max_d, bool explicit_mode) {
  weil::WeilPolynomial P;
  try {
    const auto inst = weil::parse_instance(in.request());
    P = weil::validate(inst.coeffs, inst.q);
  } catch (const weil::WeilError& e) {
    std::cerr << "weil: " << e.what() << "\n";
    return is_usage(e.code()) ? kUsage : kInvalid;
  }
  const weil::EigenvalueSystem sys = weil::build(P);
  Json rows = Json::array();
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 2; d <= max_d; ++d) {
      if (d > n * P.g) continue;
      const weil::BigInt t = weil::tate_space_dim(sys, n, d);
      const weil::BigInt im = weil::wedge_image_dim(sys, n, d);
      Json row;
      row["n"] = n;
      row["d"] = d;
      row["tate_dim"] = t.get_str();
      row["image_dim"] = im.get_str();
      row["exceptional"] = t > im;
      if (explicit_mode && 2 * P.g * n <= 12) {
        const auto ex = weil::explicit_wedge(sys, n, d);
        row["explicit_tate_dim"] = ex.tate_dim;
        row["explicit_image_dim"] = ex.image_dim;
      }
      rows.push_back(row);
    }
  }
  Json out;
  out["coeffs"] = weil::coeffs_json(P.coeffs);
  out["q"] = P.q.q.get_str();
  out["rows"] = rows;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius eigenvalue relations and exotic Tate classes"};
  app.require_subcommand(1);

  InputFlags vin;
  auto* validate = app.add_subcommand("validate", "check that a polynomial is a Weil q-polynomial");
  vin.attach(validate);

  InputFlags ain;
  weil::AnalyzeOptions aopt;
  bool ajson = false;
  auto* analyze = app.add_subcommand("analyze", "full relation and Tate class report");
  ain.attach(analyze);
  analyze->add_option("--weight-bound", aopt.weight_bound, "relation search weight (default 2(2g)^2)")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--max-power", aopt.max_power, "largest self-power scanned for exceptional forms")
      ->check(CLI::NonNegativeNumber);
  analyze->add_flag("--json", ajson, "print the report as JSON");

  std::string batch_file;
  BatchOptions bopt;
  std::string bconv = "lmfdb";
  auto* batch = app.add_subcommand("batch", "analyze a JSONL or CSV file, one JSON report per line");
  batch->add_option("file", batch_file, "input file, '-' for standard input")->required();
  batch->add_option("--parallel", bopt.parallel, "worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--weight-bound", bopt.analyze.weight_bound, "relation search weight")
      ->check(CLI::NonNegativeNumber);
  batch->add_option("--max-power", bopt.analyze.max_power, "largest self-power scanned")
      ->check(CLI::NonNegativeNumber);
  batch->add_option("--format", bopt.format, "auto, jsonl or csv")->check(CLI::IsMember({"auto", "jsonl", "csv"}));
  batch->add_option("--label-convention", bconv, "lmfdb or negated")->check(CLI::IsMember({"lmfdb", "negated"}));

  InputFlags oin;
  int max_n = 2, max_d = 2;
  bool explicit_mode = false;
  auto* oracle = app.add_subcommand("oracle-check", "tabulate Tate and wedge image dimensions");
  oin.attach(oracle);
  oracle->add_option("--max-n", max_n, "largest self-power")->check(CLI::PositiveNumber);
  oracle->add_option("--max-d", max_d, "largest degree")->check(CLI::PositiveNumber);
  oracle->add_flag("--explicit", explicit_mode, "also rank the explicit wedge matrix when |B| <= 12");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(vin);
    if (*analyze) return cmd_analyze(ain, aopt, ajson);
    if (*oracle) return cmd_oracle_check(oin, max_n, max_d, explicit_mode);
    if (*batch) {
      bopt.convention = weil::parse_label_convention(bconv);
      if (batch_file == "-") {
        run_batch(std::cin, std::cout, bopt);
        return 0;
      }
      std::ifstream f(batch_file);
      if (!f) {
        std::cerr << "weil: cannot open " << batch_file << "\n";
        return kUsage;
      }
      run_batch(f, std::cout, bopt);
      return 0;
    }
  } catch (const weil::WeilError& e) {
    std::cerr << "weil: " << e.what() << "\n";
    return is_usage(e.code()) ? kUsage : kPipeline;
  }
  return kUsage;
}
