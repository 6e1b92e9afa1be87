#include "batch.hpp"

#include <atomic>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "weil/error.hpp"

using weil::Json;

namespace {

struct Record {
  std::size_t line_no;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool looks_like_label(const std::string& s) {
  const auto d1 = s.find('.');
  return d1 != std::string::npos && d1 > 0 && std::isdigit(static_cast<unsigned char>(s[0])) &&
         s.find('.', d1 + 1) != std::string::npos;
}

weil::InstanceRequest request_from_json(const Json& j, weil::LabelConvention conv) {
  weil::InstanceRequest request;
  request.convention = conv;
  if (!j.is_object()) throw weil::WeilError(weil::ErrorCode::InvalidArgument, "record is not a JSON object");
  if (j.contains("label")) request.label = j.at("label").get<std::string>();
  if (j.contains("coeffs")) {
    const Json& c = j.at("coeffs");
    if (c.is_string()) {
      request.coeffs = c.get<std::string>();
    } else if (c.is_array()) {
      std::string s;
      for (const auto& x : c) {
        if (!s.empty()) s += ",";
        s += x.is_string() ? x.get<std::string>() : x.dump();
      }
      request.coeffs = s;
    } else {
      throw weil::WeilError(weil::ErrorCode::InvalidArgument, "coeffs must be a string or an array");
    }
  }
  if (j.contains("q")) {
    const Json& q = j.at("q");
    request.q = q.is_string() ? q.get<std::string>() : q.dump();
  }
  if (j.contains("low_first")) request.low_first = j.at("low_first").get<bool>();
  return request;
}

struct Outcome {
  std::string line;
  bool error = false;
};

Outcome process(const Record& rec, const BatchOptions& opt, bool csv) {
  Json out;
  bool failed = true;
  out["line"] = rec.line_no;
  try {
    weil::InstanceRequest request;
    if (csv) {
      const auto fields = split_csv(rec.text);
      request.convention = opt.convention;
      request.label = fields.at(0);
    } else {
      request = request_from_json(Json::parse(rec.text), opt.convention);
    }
    const weil::ParsedInstance inst = weil::parse_instance(request);
    const weil::WeilPolynomial P = weil::validate(inst.coeffs, inst.q);
    const weil::TateReport rep = weil::neat_decision(P, opt.analyze);
    Json body = weil::report_json(rep, inst.label);
    for (auto& [k, v] : body.items()) out[k] = v;
    failed = false;
  } catch (const weil::WeilError& e) {
    out["error"] = std::string(weil::to_string(e.code()));
    out["detail"] = e.what();
  } catch (const std::exception& e) {
    out["error"] = "MalformedRecord";
    out["detail"] = e.what();
  }
  return {out.dump(), failed};
}

}  // namespace

int run_batch(std::istream& in, std::ostream& out, const BatchOptions& opt) {
  std::vector<Record> records;
  std::string line;
  std::size_t no = 0;
  bool csv = opt.format == "csv";
  bool decided = opt.format != "auto";
  while (std::getline(in, line)) {
    ++no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (!decided) {
      csv = t[0] != '{';
      decided = true;
    }
    if (csv && records.empty() && !looks_like_label(split_csv(t).at(0))) continue;  // header
    records.push_back({no, t});
  }

  std::vector<std::optional<Outcome>> results(records.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= records.size()) return;
      Outcome s = process(records[i], opt, csv);
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(s);
      }
      cv.notify_all();
    }
  };
  const int nthreads = std::max(1, opt.parallel);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);

  int errors = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    Outcome s;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return results[i].has_value(); });
      s = std::move(*results[i]);
      results[i].reset();
    }
    if (s.error) ++errors;
    out << s.line << '\n';
  }
  out.flush();
  for (auto& th : pool) th.join();
  return errors;
}
