#pragma once

#include <istream>
#include <ostream>
#include <string>

#include "weil/report.hpp"

struct BatchOptions {
  int parallel = 1;
  weil::AnalyzeOptions analyze;
  weil::LabelConvention convention = weil::LabelConvention::Lmfdb;
  std::string format = "auto";  // auto, jsonl, csv
};

// One JSON line per nonblank input line, in input order. Returns the number of
// error records written.
int run_batch(std::istream& in, std::ostream& out, const BatchOptions& opt);
