#pragma once

#include <set>
#include <string>
#include <vector>

#include "kc/errors.hpp"
#include "kc/json_fwd.hpp"

namespace kc {

enum class CorpusCheck { Mfw, Support, Sln };

struct CorpusLine {
  int lineno = 0;
  std::string text;
  enum class Status { Pass, Fail, Skipped, BadInput } status = Status::Pass;
  std::string detail;
};

struct CorpusSummary {
  int passed = 0, failed = 0, skipped = 0, bad_input = 0;
  std::vector<CorpusLine> lines;

  /// 1 when any check failed, else 2 when any line was malformed, else 0.
  int exit_code() const;
};

/// Runs the selected verifiers over a corpus: one braid word per line,
/// blank lines and '#' comments ignored.  Lines that fail to parse are
/// reported and skipped; cap overruns count as skipped.
CorpusSummary corpus_run(const std::string& text, const std::set<CorpusCheck>& checks,
                         int n, const Caps& caps = {});

Json corpus_to_json(const CorpusSummary& s);
std::string corpus_to_text(const CorpusSummary& s);

}  // namespace kc
