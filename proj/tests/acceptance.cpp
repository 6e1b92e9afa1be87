// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "support/corpus.hpp"
#include "support/root_oracle.hpp"
#include "weil/cone.hpp"
#include "weil/error.hpp"
#include "weil/glbounds.hpp"
#include "weil/oracle.hpp"
#include "weil/report.hpp"
#include "weil/tate.hpp"

using namespace weil;
using namespace weil::testing;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] C%02d %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

struct System {
  CorpusEntry entry;
  WeilPolynomial P;
  EigenvalueSystem sys;
};

std::vector<System> build_corpus(std::size_t n, int max_g) {
  std::vector<System> out;
  for (const auto& e : weil_corpus(n, max_g)) {
    auto P = validate(e.coeffs, e.q);
    out.push_back({e, P, build(P)});
  }
  return out;
}

IntVec mult_vec(const EigenvalueSystem& sys) { return IntVec(sys.mult().begin(), sys.mult().end()); }

std::string describe(const System& s) { return to_string(s.entry.coeffs) + " / q=" + s.entry.q.get_str(); }

// 1
void validation_oracle() {
  const auto sample = mixed_corpus(200, 8, {2, 3, 4, 5, 7, 9, 25});
  std::vector<bool> ours;
  const auto t0 = Clock::now();
  for (const auto& e : sample) {
    try {
      validate(e.coeffs, e.q);
      ours.push_back(true);
    } catch (const WeilError&) {
      ours.push_back(false);
    }
  }
  const double t = seconds_since(t0);
  int agree = 0, valid = 0;
  std::string first;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const bool o = root_modulus_oracle(sample[i].coeffs, sample[i].q).valid;
    valid += o;
    if (o == ours[i])
      ++agree;
    else if (first.empty())
      first = " first disagreement " + to_string(sample[i].coeffs);
  }
  report(1, "validation agrees with root-modulus oracle", agree == 200 && t < 5.0,
         std::to_string(agree) + "/200 agree (" + std::to_string(valid) + " valid), validate time " +
             fmt("%.3f s", t) + first);
}

// 2
void multiplicity_relation(const std::vector<System>& corpus) {
  int bad = 0;
  for (const auto& s : corpus)
    if (!verify_relation(s.sys, mult_vec(s.sys), s.sys.g())) ++bad;
  report(2, "multiplicity vector is admissible of degree g", bad == 0 && corpus.size() >= 500,
         std::to_string(corpus.size()) + " instances, " + std::to_string(bad) + " failures");
}

// exhaustive reduced search: one side of each pair, fixed roots capped at 1
bool exhaustive_reduced_exists(const EigenvalueSystem& sys, int W) {
  const int r = sys.r();
  for (unsigned mask = 0; mask < (1U << r); ++mask) {
    IntVec upper(static_cast<std::size_t>(sys.m()), 0);
    for (int k = 0; k < r; ++k) {
      const auto& p = sys.pairs()[static_cast<std::size_t>(k)];
      upper[static_cast<std::size_t>((mask >> k) & 1U ? p.minus : p.plus)] = W;
    }
    for (int f : sys.fixed()) upper[static_cast<std::size_t>(f)] = 1;
    auto found = exhaustive_admissible(sys, upper, W, [&](const IntVec& e) {
      for (long long x : e)
        if (x != 0) return has_reduced_shape(sys, e);
      return false;
    });
    if (!found.empty()) return true;
  }
  return false;
}

// 3
void rank_equivalence(const std::vector<System>& corpus) {
  int tested = 0, bad = 0, with_reduced = 0;
  std::string first;
  const auto t0 = Clock::now();
  for (const auto& s : corpus) {
    if (s.sys.g() > 3) continue;
    const auto large = ensure_sufficiently_large(s.sys);
    const int W = default_weight_bound(large.sys.g());
    const bool found = exhaustive_reduced_exists(large.sys, W);
    const auto L = discover(large.sys);
    const bool rank_says = L.gamma_rank <= large.sys.m() / 2;
    ++tested;
    with_reduced += found;
    if (found != rank_says) {
      ++bad;
      if (first.empty()) first = ", first discrepancy " + describe(s);
    }
    if (tested >= 120) break;
  }
  report(3, "reduced function exists iff gamma rank <= floor(m/2)", bad == 0 && tested >= 50,
         std::to_string(tested) + " large systems (" + std::to_string(with_reduced) + " with reduced functions), " +
             std::to_string(bad) + " discrepancies, " + fmt("%.1f s", seconds_since(t0)) + first);
}

// 4
void nontrivial_reduction(const std::vector<System>& corpus) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  int inputs = 0, bad = 0;
  std::string first;
  for (int round = 0; round < 20 && inputs < 100; ++round) {
    for (const auto& s : corpus) {
      if (inputs >= 100) break;
      const auto L = discover(s.sys);
      IntVec v(static_cast<std::size_t>(s.sys.m()), 0);
      for (const auto& row : L.basis) {
        const int k = coef(rng);
        for (int i = 0; i < s.sys.m(); ++i) v[static_cast<std::size_t>(i)] += k * row[static_cast<std::size_t>(i)].get_si();
      }
      const auto c = classify(s.sys, v);
      if (!c.admissible || c.trivial) continue;
      ++inputs;
      try {
        const auto f = reduce_nontrivial(s.sys, v);
        const auto cf = classify(s.sys, f.e);
        if (!cf.admissible || !cf.reduced || f.weight > 2 * weight(v)) throw std::runtime_error("contract");
      } catch (const std::exception& err) {
        ++bad;
        if (first.empty()) first = std::string(", first failure ") + err.what() + " on " + describe(s);
      }
    }
  }
  report(4, "reduce_nontrivial gives reduced output of weight <= 2w", bad == 0 && inputs >= 100,
         std::to_string(inputs) + " nontrivial inputs, " + std::to_string(bad) + " failures" + first);
}

struct OracleHits {
  std::map<std::size_t, std::vector<int>> degrees;  // corpus index -> d with a hit
};

// 5
OracleHits criterion_oracle(const std::vector<System>& corpus) {
  OracleHits hits;
  int checks = 0, bad = 0, positive = 0;
  std::string first;
  const auto t0 = Clock::now();
  for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
    const auto& s = corpus[idx];
    const auto L = discover(s.sys);
    for (int n = 1; n <= 3; ++n)
      for (int d = 2; d <= std::min(4, n * s.sys.g()); ++d) {
        const bool a = exceptional_exists(s.sys, L, n, d);
        const bool b = exceptional_oracle(s.sys, n, d);
        ++checks;
        positive += b;
        if (b) hits.degrees[idx].push_back(d);
        if (a != b) {
          ++bad;
          if (first.empty())
            first = ", first discrepancy n=" + std::to_string(n) + " d=" + std::to_string(d) + " " + describe(s);
        }
      }
  }
  const double t = seconds_since(t0);
  report(5, "exceptional_exists equals the brute-force oracle", bad == 0 && t < 120.0,
         std::to_string(corpus.size()) + " systems, " + std::to_string(checks) + " (n,d) checks, " +
             std::to_string(positive) + " exceptional, " + std::to_string(bad) + " discrepancies, " + fmt("%.1f s", t) +
             first);
  return hits;
}

// 6
void benchmark_instance() {
  const auto four = four_root_system();
  const auto P = validate(four.coeffs, four.q);
  const auto sys = build(P);
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const BigInt td = tate_space_dim(sys, 2, 2), wd = wedge_image_dim(sys, 2, 2);
  expect(td == 20, "tate_dim " + td.get_str());
  expect(wd == 18, "image_dim " + wd.get_str());
  expect(exceptional_oracle(sys, 2, 2), "exceptional");
  const auto ex = explicit_wedge(sys, 2, 2);
  expect(ex.tate_dim == 20 && ex.image_dim == 18, "explicit matrix dims");
  expect(exceptional_exists(sys, 2, 2), "exceptional_exists");
  expect(minimal_exotic_power(sys, default_weight_bound(2)) == 2, "minimal_exotic_power");
  const auto h = hilbert_basis_of_lattice(exponent_lattice(discover(sys), sys.m()), sys.m());
  const std::vector<IntVec> gens{{1, 1, 0, 0}, {0, 0, 1, 1}, {2, 0, 2, 0}, {0, 2, 0, 2}};
  expect(h.generators == gens, "hilbert basis");
  expect(h.H == 4, "H");
  // the same generators by brute force: irreducible nonnegative admissible vectors of weight <= 8
  {
    const auto all = exhaustive_admissible(sys, 8, 8);
    std::set<IntVec> members(all.begin(), all.end()), irred;
    for (const auto& e : all) {
      if (weight(e) == 0) continue;
      bool split = false;
      for (const auto& a : all) {
        if (weight(a) == 0 || weight(a) >= weight(e)) continue;
        IntVec b = e;
        bool ok = true;
        for (std::size_t i = 0; i < b.size(); ++i) ok &= (b[i] -= a[i]) >= 0;
        split |= ok && members.count(b) > 0;
      }
      if (!split) irred.insert(e);
    }
    expect(irred == std::set<IntVec>(gens.begin(), gens.end()), "brute-force generators");
  }
  const auto rep = neat_decision(P);
  expect(rep.neat == NeatVerdict::NotNeat, std::string("neat ") + to_string(rep.neat));
  expect(rep.witness && rep.witness->e == IntVec({2, 0, 2, 0}), "witness");
  std::string detail = "tate 20, image 18 (explicit " + std::to_string(ex.tate_dim) + "/" +
                       std::to_string(ex.image_dim) + "), minimal power 2, H 4, NotNeat";
  if (!bad.empty()) {
    detail = "mismatches:";
    for (const auto& b : bad) detail += " " + b;
  }
  report(6, "benchmark (t^2-2t+5)(t^2+2t+5) over F_5", bad.empty(), detail);
}

bool in_semigroup(const EigenvalueSystem& sys, const IntVec& e) {
  long long s = 0;
  for (long long x : e) {
    if (x < 0) return false;
    s += x;
  }
  return s % 2 == 0 && verify_relation(sys, e, s / 2);
}

// 7
void gordan_hilbert(const std::vector<System>& corpus) {
  int systems = 0, elements = 0, bad = 0;
  std::string first;
  auto fail = [&](const std::string& why) {
    ++bad;
    if (first.empty()) first = ", first failure " + why;
  };
  for (const auto& s : corpus) {
    if (s.sys.m() > 5) continue;
    ++systems;
    HilbertBasis h;
    if (is_sufficiently_large(s.sys))
      h = hilbert_basis(s.sys, discover(s.sys));
    else
      h = hilbert_basis_of_lattice(exponent_lattice(discover(s.sys), s.sys.m()), s.sys.m());
    const int bound = static_cast<int>(2 * h.H);
    for (const auto& e : exhaustive_admissible(s.sys, bound, bound)) {
      ++elements;
      try {
        const auto parts = decompose(e, h);
        IntVec sum(e.size(), 0);
        for (const auto& p : parts)
          for (std::size_t i = 0; i < e.size(); ++i) sum[i] += p[i];
        if (sum != e) fail("sum mismatch on " + describe(s));
      } catch (const WeilError& err) {
        fail(std::string(err.what()) + " on " + describe(s));
      }
    }
    for (const auto& u : h.generators) {
      if (!in_semigroup(s.sys, u) || weight(u) % 2 != 0) fail("generator not admissible on " + describe(s));
      // every splitting u = a + b leaves a or b outside the semigroup
      IntVec a(u.size(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == u.size()) {
          if (weight(a) == 0 || weight(a) == weight(u)) return;
          IntVec b = u;
          for (std::size_t k = 0; k < u.size(); ++k) b[k] -= a[k];
          if (in_semigroup(s.sys, a) && in_semigroup(s.sys, b)) fail("generator splits on " + describe(s));
          return;
        }
        for (long long v = 0; v <= u[i]; ++v) {
          a[i] = v;
          rec(i + 1);
        }
        a[i] = 0;
      };
      rec(0);
    }
  }
  report(7, "Hilbert basis generates and is minimal", bad == 0,
         std::to_string(systems) + " systems with m <= 5, " + std::to_string(elements) +
             " admissible vectors decomposed, " + std::to_string(bad) + " failures" + first);
}

// 8
void power_bound_check(const std::vector<System>& corpus, const OracleHits& hits) {
  int instances = 0, bad = 0;
  std::string first;
  for (const auto& [idx, ds] : hits.degrees) {
    const auto& s = corpus[idx];
    ++instances;
    const auto pb = power_bound(s.sys, default_weight_bound(s.sys.g()));
    bool ok = false;
    if (pb) {
      const auto L = discover(s.sys);
      for (long long d = 1; d <= *pb * s.sys.g() && !ok; ++d)
        ok = exceptional_exists(s.sys, L, static_cast<int>(*pb), static_cast<int>(d));
    }
    if (!ok) {
      ++bad;
      if (first.empty()) first = ", first failure " + describe(s);
    }
  }
  report(8, "exotic class confirmed at the power bound", bad == 0,
         std::to_string(instances) + " instances with an exceptional form, " + std::to_string(bad) + " failures" + first);
}

// 9
void bounded_generation(const std::vector<System>& corpus) {
  int checks = 0, bad = 0;
  std::string first;
  for (const auto& s : corpus) {
    const auto large = ensure_sufficiently_large(s.sys);
    const long long H = degree_bound_H(large.sys);
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= n * large.sys.g(); ++m) {
        ++checks;
        if (!bounded_generation_oracle(large.sys, n, m, H)) {
          ++bad;
          if (first.empty()) first = ", first failure " + describe(s);
        }
      }
  }
  report(9, "bounded generation holds at H", bad == 0,
         std::to_string(corpus.size()) + " systems (made sufficiently large), " + std::to_string(checks) + " checks, " +
             std::to_string(bad) + " failures" + first);
}

// 10
void base_change_sufficiency(const std::vector<System>& corpus) {
  int instances = 0, bad = 0;
  std::map<int, int> exponents;
  std::string first;
  for (const auto& s : corpus) {
    if (s.sys.g() > 2 || !is_small(s.sys)) continue;
    ++instances;
    try {
      const auto large = ensure_sufficiently_large(s.sys);
      ++exponents[large.exponent];
      const BigInt D = torsion_bound_D(s.sys.g()).D;
      if (D % large.exponent != 0 || !is_sufficiently_large(large.sys)) throw std::runtime_error("not large");
    } catch (const std::exception& err) {
      ++bad;
      if (first.empty()) first = std::string(", first failure ") + err.what() + " on " + describe(s);
    }
  }
  std::string ex;
  for (auto [k, v] : exponents) ex += " " + std::to_string(k) + "x" + std::to_string(v);
  report(10, "base change by a divisor of D(g) makes the field large", bad == 0 && instances > 0,
         std::to_string(instances) + " small-field instances, exponents" + ex + ", " + std::to_string(bad) +
             " failures" + first);
}

int run_cli(const std::string& args, std::string& out) {
  FILE* p = popen((std::string(WEIL_CLI_PATH) + " " + args).c_str(), "r");
  if (!p) return -1;
  char buf[1 << 14];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int st = pclose(p);
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

// 11
void performance(const std::vector<System>& corpus) {
  double worst = 0;
  std::string worst_name;
  int analyzed = 0;
  for (const auto& s : corpus) {
    if (s.sys.g() > 3) continue;
    const auto t0 = Clock::now();
    const auto rep = neat_decision(s.P);
    const std::string text = report_json(rep).dump();
    const double t = seconds_since(t0);
    ++analyzed;
    if (t > worst) {
      worst = t;
      worst_name = describe(s);
    }
  }
  // 1000 quartics through the command line batch mode
  std::vector<CorpusEntry> quartics;
  for (const auto& e : weil_corpus(4000, 2, 4242))
    if (e.coeffs.size() == 5) quartics.push_back(e);
  std::ostringstream body;
  for (int i = 0; i < 1000; ++i) {
    const auto& e = quartics[static_cast<std::size_t>(i) % quartics.size()];
    body << "{\"coeffs\":\"";
    for (std::size_t k = e.coeffs.size(); k-- > 0;) body << e.coeffs[k].get_str() << (k ? "," : "");
    body << "\",\"q\":\"" << e.q.get_str() << "\"}\n";
  }
  const auto path = std::filesystem::temp_directory_path() / "weil_acceptance_quartics.jsonl";
  std::ofstream(path) << body.str();
  std::string out;
  const auto t0 = Clock::now();
  const int status = run_cli("batch --parallel 4 " + path.string(), out);
  const double batch_t = seconds_since(t0);
  const auto lines = std::count(out.begin(), out.end(), '\n');
  long errors = 0;
  for (std::size_t pos = out.find("\"error\":"); pos != std::string::npos; pos = out.find("\"error\":", pos + 1))
    ++errors;
  const bool ok = worst < 1.0 && batch_t < 60.0 && status == 0 && lines == 1000 && errors == 0;
  report(11, "performance", ok,
         "slowest of " + std::to_string(analyzed) + " analyses " + fmt("%.3f s", worst) + " (" + worst_name +
             "); batch of 1000 quartics (" + std::to_string(std::min<std::size_t>(quartics.size(), 1000)) +
             " distinct) " + fmt("%.2f s", batch_t) + ", " + std::to_string(lines) + " records, " +
             std::to_string(errors) + " errors");
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  validation_oracle();
  const auto corpus = build_corpus(500, 3);
  multiplicity_relation(corpus);
  rank_equivalence(corpus);
  nontrivial_reduction(corpus);
  const auto hits = criterion_oracle(corpus);
  benchmark_instance();
  gordan_hilbert(corpus);
  power_bound_check(corpus, hits);
  bounded_generation(corpus);
  base_change_sufficiency(corpus);
  performance(corpus);
  std::printf("%d of 11 criteria failed, total %.1f s\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
