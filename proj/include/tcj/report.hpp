#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcj/statesum.hpp"

namespace tcj {

// Vol column constant for a catalog link, when the complement's volume is
// known (W, B, ell from Lobachevsky constants; green_2_1 carried as a
// reference value).
std::optional<double> volume_target(const std::string& link);

struct TableOptions {
  std::vector<std::string> links = {"green_2_1", "B", "ell"};
  std::vector<long> ns = {10, 20};
  int threads = 1;
  EvalOptions eval;
};
// CSV of normalized logs, one row per link, one column per n, plus Vol.
std::string table_csv(const TableOptions& opt);

struct ConvergeOptions {
  std::string link = "W";
  std::vector<long> ns;
  int threads = 1;
  EvalOptions eval;
};
// CSV with columns n, value_log, normalized_log, target, gap. W uses the
// closed form; other links run the state sum at r = n.
std::string converge_csv(const ConvergeOptions& opt);

struct VerifyOptions {
  std::string only;  // empty = all: linwang, cabling, weave, relationship,
                     // invariance, skein
  long n = 4;        // cabling colors run 2..n
  EvalOptions eval;
};
struct VerifyCheck {
  std::string name;
  bool pass;
  std::string detail;
};
struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
  std::string text() const;
};
VerifyReport run_verify(const VerifyOptions& opt);

}  // namespace tcj
