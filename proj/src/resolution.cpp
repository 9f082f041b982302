#include "kc/resolution.hpp"

namespace kc {

int ResolvedGraph::wide_count() const {
  int n = 0;
  for (const auto& s : slices) n += (s.kind == SliceKind::Wide);
  return n;
}

int ResolvedGraph::e_plus() const {
  int n = 0;
  for (const auto& s : slices)
    n += (s.kind == SliceKind::Wide && s.origin == WideOrigin::FromPositive);
  return n;
}

int ResolvedGraph::e_minus() const {
  int n = 0;
  for (const auto& s : slices)
    n += (s.kind == SliceKind::Wide && s.origin == WideOrigin::FromNegative);
  return n;
}

std::vector<int> ResolvedGraph::wide_positions() const {
  std::vector<int> ps;
  for (const auto& s : slices)
    if (s.kind == SliceKind::Wide) ps.push_back(s.pos);
  return ps;
}

std::vector<int> ResolvedGraph::wide_slice_indices() const {
  std::vector<int> idx;
  for (std::size_t i = 0; i < slices.size(); ++i)
    if (slices[i].kind == SliceKind::Wide) idx.push_back(static_cast<int>(i));
  return idx;
}

ResolvedGraph resolution_graph(const BraidWord& b, std::uint64_t mask) {
  ResolvedGraph g;
  g.strands = b.strands;
  g.slices.reserve(b.letters.size());
  for (std::size_t i = 0; i < b.letters.size(); ++i) {
    int letter = b.letters[i];
    Slice s;
    s.pos = std::abs(letter);
    s.origin = letter > 0 ? WideOrigin::FromPositive : WideOrigin::FromNegative;
    s.kind = (mask >> i) & 1 ? SliceKind::Wide : SliceKind::Identity;
    g.slices.push_back(s);
  }
  return g;
}

std::vector<Resolution> resolve_all(const BraidWord& b, const Caps& caps) {
  int c = b.crossing_count();
  if (c > caps.max_resolve_crossings)
    throw CapError("resolution enumeration needs 2^" + std::to_string(c) +
                   " graphs, above the cap of 2^" +
                   std::to_string(caps.max_resolve_crossings));
  std::vector<Resolution> out;
  out.reserve(std::size_t{1} << c);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    Resolution r;
    r.graph = resolution_graph(b, mask);
    r.e_plus = r.graph.e_plus();
    r.e_minus = r.graph.e_minus();
    r.hom_degree = r.e_plus - r.e_minus;
    r.mask = mask;
    out.push_back(std::move(r));
  }
  return out;
}

ResolvedGraph oriented_resolution(const BraidWord& b) {
  return resolution_graph(b, 0);
}

int grading_shift(int e_plus, int e_minus, int w, int n) {
  return (n - 1) * w + e_plus - e_minus;
}

ResolvedGraph named_graph(const std::string& name) {
  ResolvedGraph g;
  if (name == "circle") {
    g.strands = 1;
    return g;
  }
  if (name == "theta") {
    g.strands = 2;
    g.slices.push_back({SliceKind::Wide, 1, WideOrigin::Intrinsic});
    return g;
  }
  if (name == "theta2") {
    g.strands = 2;
    g.slices.push_back({SliceKind::Wide, 1, WideOrigin::Intrinsic});
    g.slices.push_back({SliceKind::Wide, 1, WideOrigin::Intrinsic});
    return g;
  }
  throw ParseError("unknown graph name '" + name + "' (try circle, theta, theta2)");
}

static const char* origin_tag(WideOrigin o) {
  switch (o) {
    case WideOrigin::FromPositive: return "+";
    case WideOrigin::FromNegative: return "-";
    default: return "x";
  }
}

Json graph_to_json(const ResolvedGraph& g) {
  Json j;
  j["strands"] = g.strands;
  Json slices = Json::array();
  for (const auto& s : g.slices) {
    Json sj;
    sj["pos"] = s.pos;
    sj["kind"] = s.kind == SliceKind::Wide ? "wide" : "id";
    sj["origin"] = origin_tag(s.origin);
    slices.push_back(std::move(sj));
  }
  j["slices"] = std::move(slices);
  return j;
}

Json resolution_to_json(const Resolution& r) {
  Json j = graph_to_json(r.graph);
  j["e_plus"] = r.e_plus;
  j["e_minus"] = r.e_minus;
  j["hom_degree"] = r.hom_degree;
  j["mask"] = r.mask;
  return j;
}

}  // namespace kc
