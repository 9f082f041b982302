// Command-line front end: diagram statistics, resolutions, labelings,
// graph polynomials, link polynomials, bound reports and batch verification.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "kc/bounds.hpp"
#include "kc/braid.hpp"
#include "kc/corpus.hpp"
#include "kc/diagram.hpp"
#include "kc/errors.hpp"
#include "kc/homfly.hpp"
#include "kc/labeling.hpp"
#include "kc/moy.hpp"
#include "kc/resolution.hpp"
#include "kc/seifert.hpp"

namespace {

struct CommonOpts {
  std::string inline_input;
  std::string file;
  bool use_stdin = false;
  std::string format = "json";
  int n = 2;
  int m = 1;
  int max_crossings = -1;
  long max_dim = -1;
  std::uint64_t resolution_mask = ~std::uint64_t{0};
  std::string checks = "mfw";
  std::string corpus_path;
  std::string wide_convention = "minus";
};

void add_input_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("input", o.inline_input, "inline input text");
  cmd->add_option("--file", o.file, "read input from a file");
  cmd->add_flag("--stdin", o.use_stdin, "read input from stdin");
  cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--max-crossings", o.max_crossings, "override the crossing caps");
  cmd->add_option("--max-dim", o.max_dim, "override the state-dimension cap");
}

std::string read_input(const CommonOpts& o) {
  int sources = !o.inline_input.empty() + !o.file.empty() + o.use_stdin;
  if (sources != 1)
    throw kc::ParseError("exactly one input source required (inline, --file or --stdin)");
  if (!o.inline_input.empty()) return o.inline_input;
  if (o.use_stdin) {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(o.file);
  if (!in) throw kc::ParseError("cannot read file '" + o.file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

kc::Caps caps_of(const CommonOpts& o) {
  kc::Caps caps;
  if (o.max_crossings >= 0) {
    caps.max_skein_crossings = o.max_crossings;
    caps.max_resolve_crossings = o.max_crossings;
  }
  if (o.max_dim >= 0) caps.max_state_dim = o.max_dim;
  return caps;
}

bool is_diagram_text(const std::string& s) {
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == 'X' || c == '#';
  }
  return false;
}

bool is_named_graph(const std::string& s) {
  return s == "circle" || s == "theta" || s == "theta2";
}

kc::LinkDiagram parse_any_diagram(const std::string& text) {
  if (is_diagram_text(text)) return kc::parse_diagram(text);
  return kc::braid_closure(kc::parse_braid(text));
}

// Named graph, or a braid resolution (all-wide unless --resolution given).
kc::ResolvedGraph parse_any_graph(const std::string& text, const CommonOpts& o) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  auto end = trimmed.find_last_not_of(" \t\r\n");
  if (end != std::string::npos) trimmed.erase(end + 1);
  if (is_named_graph(trimmed)) return kc::named_graph(trimmed);
  kc::BraidWord b = kc::parse_braid(text);
  std::uint64_t mask = o.resolution_mask;
  if (b.crossing_count() < 64) mask &= (std::uint64_t{1} << b.crossing_count()) - 1;
  return kc::resolution_graph(b, mask);
}

void emit(const CommonOpts& o, const kc::Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int run(int argc, char** argv) {
  CLI::App app{"knot diagram invariants: Seifert statistics, graph polynomials, "
               "link polynomials and Bennequin-type bound reports"};
  app.require_subcommand(1);
  CommonOpts o;

  auto* stats = app.add_subcommand("stats", "Seifert statistics of a diagram");
  add_input_opts(stats, o);

  auto* resolve = app.add_subcommand("resolve", "all crossing resolutions of a braid");
  add_input_opts(resolve, o);

  auto* labelings = app.add_subcommand("labelings", "labelings of a resolved graph");
  add_input_opts(labelings, o);
  labelings->add_option("--resolution", o.resolution_mask,
                        "resolution mask (bit i = letter i wide); default all wide");
  bool with_split = false;
  labelings->add_flag("--split", with_split, "also emit the split of each labeling");

  auto* moycmd = app.add_subcommand("moy", "graph polynomial of a resolved graph");
  add_input_opts(moycmd, o);
  moycmd->add_option("--n", o.n, "rank")->check(CLI::PositiveNumber);
  moycmd->add_option("--resolution", o.resolution_mask, "resolution mask");
  moycmd->add_option("--wide-convention", o.wide_convention, "minus or plus (test switch)")
      ->check(CLI::IsMember({"minus", "plus"}));

  auto* homflycmd = app.add_subcommand("homfly", "link polynomial by skein recursion");
  add_input_opts(homflycmd, o);

  auto* slncmd = app.add_subcommand("sln", "rank-n link polynomial by state sum");
  add_input_opts(slncmd, o);
  slncmd->add_option("--n", o.n, "rank")->check(CLI::PositiveNumber);

  auto* boundscmd = app.add_subcommand("bounds", "Bennequin-type bound report");
  add_input_opts(boundscmd, o);
  boundscmd->add_option("--n", o.n, "rank (>= 2)");

  auto* verify = app.add_subcommand("verify", "run a verifier");
  verify->require_subcommand(1);
  auto* vcomp = verify->add_subcommand("composition", "composition product identity");
  add_input_opts(vcomp, o);
  vcomp->add_option("--m", o.m, "left rank")->check(CLI::PositiveNumber);
  vcomp->add_option("--n", o.n, "right rank")->check(CLI::PositiveNumber);
  vcomp->add_option("--resolution", o.resolution_mask, "resolution mask");
  auto* vmfw = verify->add_subcommand("mfw", "framed a-degree bounds");
  add_input_opts(vmfw, o);
  auto* vsupport = verify->add_subcommand("support", "graded support bounds");
  add_input_opts(vsupport, o);
  vsupport->add_option("--n", o.n, "rank")->check(CLI::PositiveNumber);
  vsupport->add_option("--resolution", o.resolution_mask, "resolution mask");

  auto* corpuscmd = app.add_subcommand("corpus", "batch-run verifiers over a word list");
  corpuscmd->add_option("path", o.corpus_path, "corpus file, one braid word per line");
  corpuscmd->add_option("--corpus", o.corpus_path, "corpus file");
  corpuscmd->add_option("--checks", o.checks, "comma list of mfw,support,sln");
  corpuscmd->add_option("--n", o.n, "rank for support/sln checks")->check(CLI::PositiveNumber);
  corpuscmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  corpuscmd->add_option("--max-crossings", o.max_crossings, "override the crossing caps");
  corpuscmd->add_option("--max-dim", o.max_dim, "override the state-dimension cap");

  CLI11_PARSE(app, argc, argv);
  kc::Caps caps = caps_of(o);

  if (stats->parsed()) {
    kc::SeifertStats s = kc::seifert_stats(parse_any_diagram(read_input(o)));
    std::ostringstream text;
    text << "w=" << s.writhe << " O=" << s.circles << " c+=" << s.c_plus
         << " c-=" << s.c_minus << " O>=" << s.o_gt << " O<=" << s.o_lt
         << " Ogeq=" << s.o_geq << " Oleq=" << s.o_leq
         << " components=" << s.components << "\n";
    emit(o, kc::stats_to_json(s), text.str());
    return 0;
  }
  if (resolve->parsed()) {
    kc::BraidWord b = kc::parse_braid(read_input(o));
    auto rs = kc::resolve_all(b, caps);
    kc::Json j = kc::Json::array();
    std::ostringstream text;
    for (const auto& r : rs) {
      j.push_back(kc::resolution_to_json(r));
      text << "mask=" << r.mask << " e+=" << r.e_plus << " e-=" << r.e_minus
           << " degree=" << r.hom_degree << "\n";
    }
    emit(o, j, text.str());
    return 0;
  }
  if (labelings->parsed()) {
    kc::ResolvedGraph g = parse_any_graph(read_input(o), o);
    auto ls = kc::enumerate_labelings(g, caps);
    kc::Json j = kc::Json::array();
    std::ostringstream text;
    for (const auto& f : ls) {
      if (with_split) {
        kc::Json entry;
        entry["labeling"] = kc::labeling_to_json(f);
        entry["split"] = kc::split_to_json(kc::split(g, f));
        j.push_back(std::move(entry));
      } else {
        j.push_back(kc::labeling_to_json(f));
      }
      for (int v : f) text << v;
      text << "\n";
    }
    text << ls.size() << " labelings\n";
    emit(o, j, text.str());
    return 0;
  }
  if (moycmd->parsed()) {
    kc::ResolvedGraph g = parse_any_graph(read_input(o), o);
    auto conv = o.wide_convention == "plus" ? kc::WideConvention::PosOffDiag
                                            : kc::WideConvention::NegOffDiag;
    kc::LaurentPoly1 p = kc::moy(g, o.n, caps, conv);
    kc::SupportReport sup = kc::support_check(g, o.n, caps);
    kc::Json j;
    j["moy"] = p.to_json();
    j["text"] = p.to_string();
    if (sup.support)
      j["support"] = kc::Json::array({sup.support->first, sup.support->second});
    else
      j["support"] = nullptr;
    j["bounds"] = kc::Json::array({sup.lower_bound, sup.upper_bound});
    j["holds"] = sup.holds;
    emit(o, j, p.to_string() + "\n");
    return 0;
  }
  if (homflycmd->parsed()) {
    kc::LinkDiagram d = parse_any_diagram(read_input(o));
    kc::LaurentPoly2 p = kc::homfly(d, caps);
    kc::Json j;
    j["homfly"] = p.to_json();
    j["text"] = p.to_string();
    j["mfw"] = kc::mfw_to_json(kc::mfw_degrees(d, caps));
    emit(o, j, p.to_string() + "\n");
    return 0;
  }
  if (slncmd->parsed()) {
    kc::BraidWord b = kc::parse_braid(read_input(o));
    kc::LaurentPoly1 p = kc::sln_state_sum(b, o.n, caps);
    kc::Json j;
    kc::Json inner;
    inner["n"] = o.n;
    inner["poly"] = p.to_json();
    inner["text"] = p.to_string();
    j["sln"] = std::move(inner);
    emit(o, j, p.to_string() + "\n");
    return 0;
  }
  if (boundscmd->parsed()) {
    kc::SeifertStats s = kc::seifert_stats(parse_any_diagram(read_input(o)));
    kc::BoundsReport r = kc::bennequin_report(s, o.n);
    emit(o, kc::bounds_to_json(r), kc::bounds_to_text(r));
    return 0;
  }
  if (vcomp->parsed()) {
    kc::ResolvedGraph g = parse_any_graph(read_input(o), o);
    kc::CompositionReport r = kc::verify_composition(g, o.m, o.n, caps);
    emit(o, kc::composition_to_json(r),
         std::string(r.holds ? "holds" : "FAILS") + "\nlhs: " + r.lhs.to_string() +
             "\nrhs: " + r.rhs.to_string() + "\n");
    return r.holds ? 0 : 1;
  }
  if (vmfw->parsed()) {
    kc::MfwReport r = kc::mfw_degrees(parse_any_diagram(read_input(o)), caps);
    std::ostringstream text;
    text << (r.holds ? "holds" : "FAILS") << ": " << r.w_minus_o << " <= "
         << r.framed_min_a << " <= " << r.framed_max_a << " <= " << r.w_plus_o << "\n";
    emit(o, kc::mfw_to_json(r), text.str());
    return r.holds ? 0 : 1;
  }
  if (vsupport->parsed()) {
    std::string input = read_input(o);
    std::string trimmed = input;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    auto end = trimmed.find_last_not_of(" \t\r\n");
    if (end != std::string::npos) trimmed.erase(end + 1);
    if (is_named_graph(trimmed)) {
      kc::SupportReport r = kc::support_check(kc::named_graph(trimmed), o.n, caps);
      emit(o, kc::support_to_json(r), std::string(r.holds ? "holds" : "FAILS") + "\n");
      return r.holds ? 0 : 1;
    }
    kc::SupportVerifyReport r = kc::verify_support(kc::parse_braid(input), o.n, caps);
    emit(o, kc::support_verify_to_json(r),
         std::string(r.holds ? "holds" : "FAILS") + "\n");
    return r.holds ? 0 : 1;
  }
  if (corpuscmd->parsed()) {
    if (o.corpus_path.empty()) throw kc::ParseError("corpus: no file given");
    std::ifstream in(o.corpus_path);
    if (!in) throw kc::ParseError("cannot read corpus file '" + o.corpus_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    std::set<kc::CorpusCheck> checks;
    std::stringstream cs(o.checks);
    std::string item;
    while (std::getline(cs, item, ',')) {
      if (item == "mfw")
        checks.insert(kc::CorpusCheck::Mfw);
      else if (item == "support")
        checks.insert(kc::CorpusCheck::Support);
      else if (item == "sln")
        checks.insert(kc::CorpusCheck::Sln);
      else
        throw kc::ParseError("unknown check '" + item + "'");
    }
    kc::CorpusSummary s = kc::corpus_run(ss.str(), checks, o.n, caps);
    emit(o, kc::corpus_to_json(s), kc::corpus_to_text(s));
    return s.exit_code();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kc::CapError& e) {
    kc::Json j;
    j["error"] = {{"code", 3}, {"reason", e.what()}};
    std::cout << j.dump() << "\n";
    return 3;
  } catch (const kc::ParseError& e) {
    kc::Json j;
    kc::Json inner;
    inner["code"] = 2;
    inner["reason"] = e.what();
    if (e.pos != std::string::npos) inner["position"] = e.pos;
    j["error"] = std::move(inner);
    std::cout << j.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    kc::Json j;
    j["error"] = {{"code", 2}, {"reason", e.what()}};
    std::cout << j.dump() << "\n";
    return 2;
  }
}
