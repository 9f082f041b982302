#include "kc/corpus.hpp"

#include <sstream>

#include "kc/bounds.hpp"
#include "kc/braid.hpp"
#include "kc/homfly.hpp"

namespace kc {

int CorpusSummary::exit_code() const {
  if (failed > 0) return 1;
  if (bad_input > 0) return 2;
  return 0;
}

CorpusSummary corpus_run(const std::string& text, const std::set<CorpusCheck>& checks,
                         int n, const Caps& caps) {
  CorpusSummary summary;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    CorpusLine res;
    res.lineno = lineno;
    res.text = line;
    try {
      BraidWord b = parse_braid(line);
      std::vector<std::string> failures;
      for (CorpusCheck check : checks) {
        switch (check) {
          case CorpusCheck::Mfw:
            if (!verify_mfw(braid_closure(b), caps)) failures.push_back("mfw");
            break;
          case CorpusCheck::Support:
            if (!verify_support(b, n, caps).holds) failures.push_back("support");
            break;
          case CorpusCheck::Sln:
            if (!sln_vs_homfly_check(b, n, caps).holds) failures.push_back("sln");
            break;
        }
      }
      if (failures.empty()) {
        res.status = CorpusLine::Status::Pass;
        ++summary.passed;
      } else {
        res.status = CorpusLine::Status::Fail;
        ++summary.failed;
        for (const auto& f : failures) res.detail += f + " ";
      }
    } catch (const CapError& e) {
      res.status = CorpusLine::Status::Skipped;
      res.detail = e.what();
      ++summary.skipped;
    } catch (const ParseError& e) {
      res.status = CorpusLine::Status::BadInput;
      res.detail = e.what();
      ++summary.bad_input;
    }
    summary.lines.push_back(std::move(res));
  }
  return summary;
}

namespace {
const char* status_tag(CorpusLine::Status s) {
  switch (s) {
    case CorpusLine::Status::Pass: return "pass";
    case CorpusLine::Status::Fail: return "FAIL";
    case CorpusLine::Status::Skipped: return "skip";
    default: return "bad-input";
  }
}
}  // namespace

Json corpus_to_json(const CorpusSummary& s) {
  Json j;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["skipped"] = s.skipped;
  j["bad_input"] = s.bad_input;
  Json lines = Json::array();
  for (const auto& l : s.lines) {
    Json lj;
    lj["line"] = l.lineno;
    lj["input"] = l.text;
    lj["status"] = status_tag(l.status);
    if (!l.detail.empty()) lj["detail"] = l.detail;
    lines.push_back(std::move(lj));
  }
  j["lines"] = std::move(lines);
  return j;
}

std::string corpus_to_text(const CorpusSummary& s) {
  std::ostringstream os;
  for (const auto& l : s.lines) {
    os << status_tag(l.status) << "  line " << l.lineno << "  " << l.text;
    if (!l.detail.empty()) os << "  [" << l.detail << "]";
    os << "\n";
  }
  os << "passed " << s.passed << ", failed " << s.failed << ", skipped " << s.skipped
     << ", bad input " << s.bad_input << "\n";
  return os.str();
}

}  // namespace kc
