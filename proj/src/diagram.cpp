#include "kc/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace kc {

int LinkDiagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings) w += c.sign;
  return w;
}

std::vector<int> LinkDiagram::arc_ids() const {
  std::set<int> ids;
  for (const auto& c : crossings) {
    ids.insert(c.under_in);
    ids.insert(c.under_out);
    ids.insert(c.over_in);
    ids.insert(c.over_out);
  }
  return {ids.begin(), ids.end()};
}

void validate(const LinkDiagram& d) {
  std::map<int, int> heads, tails;
  for (const auto& c : d.crossings) {
    if (c.sign != 1 && c.sign != -1) throw ParseError("crossing sign must be +1 or -1");
    ++heads[c.under_in];
    ++heads[c.over_in];
    ++tails[c.under_out];
    ++tails[c.over_out];
  }
  for (const auto& [arc, n] : heads) {
    if (n != 1) throw ParseError("arc " + std::to_string(arc) + " has " +
                                 std::to_string(n) + " head incidences");
    if (tails.find(arc) == tails.end())
      throw ParseError("arc " + std::to_string(arc) + " has a head but no tail");
  }
  for (const auto& [arc, n] : tails) {
    if (n != 1) throw ParseError("arc " + std::to_string(arc) + " has " +
                                 std::to_string(n) + " tail incidences");
    if (heads.find(arc) == heads.end())
      throw ParseError("arc " + std::to_string(arc) + " has a tail but no head");
  }
  if (d.free_loops < 0) throw ParseError("negative free loop count");
  if (d.crossings.empty() && d.free_loops == 0)
    throw ParseError("empty diagram (no crossings, no circles)");
}

LinkDiagram parse_diagram(std::string_view text) {
  LinkDiagram d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "X")
      throw ParseError("line " + std::to_string(lineno) + ": expected 'X'", lineno);
    std::string sign;
    Crossing c;
    if (!(ls >> sign >> c.under_in >> c.under_out >> c.over_in >> c.over_out))
      throw ParseError("line " + std::to_string(lineno) + ": malformed crossing", lineno);
    if (sign == "+")
      c.sign = +1;
    else if (sign == "-")
      c.sign = -1;
    else
      throw ParseError("line " + std::to_string(lineno) + ": sign must be + or -", lineno);
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing tokens", lineno);
    d.crossings.push_back(c);
  }
  validate(d);
  return d;
}

std::string to_text(const LinkDiagram& d) {
  std::ostringstream os;
  for (const auto& c : d.crossings) {
    os << "X " << (c.sign > 0 ? '+' : '-') << ' ' << c.under_in << ' ' << c.under_out
       << ' ' << c.over_in << ' ' << c.over_out << '\n';
  }
  return os.str();
}

LinkDiagram braid_closure(const BraidWord& b) {
  LinkDiagram d;
  // Bottom arc of strand position p is arc p; fresh arcs continue upward.
  std::vector<int> cur(b.strands);
  for (int p = 0; p < b.strands; ++p) cur[p] = p;
  int next_arc = b.strands;
  for (int g : b.letters) {
    int p = std::abs(g) - 1;
    int out_left = next_arc++;
    int out_right = next_arc++;
    Crossing c;
    c.sign = g > 0 ? +1 : -1;
    if (g > 0) {
      // Positive generator: the strand entering at p passes over.
      c.over_in = cur[p];
      c.over_out = out_right;
      c.under_in = cur[p + 1];
      c.under_out = out_left;
    } else {
      c.under_in = cur[p];
      c.under_out = out_right;
      c.over_in = cur[p + 1];
      c.over_out = out_left;
    }
    d.crossings.push_back(c);
    cur[p] = out_left;
    cur[p + 1] = out_right;
  }
  // Close up: the top arc at position p is identified with bottom arc p.
  for (int p = 0; p < b.strands; ++p) {
    if (cur[p] == p) {
      ++d.free_loops;  // untouched strand
      continue;
    }
    for (auto& c : d.crossings) {
      if (c.under_out == cur[p]) c.under_out = p;
      if (c.over_out == cur[p]) c.over_out = p;
    }
  }
  validate(d);
  return d;
}

namespace {

// Successor map along link components: entering a crossing on the under
// (resp. over) strand exits on the under (resp. over) strand.
std::map<int, int> component_successor(const LinkDiagram& d) {
  std::map<int, int> next;
  for (const auto& c : d.crossings) {
    next[c.under_in] = c.under_out;
    next[c.over_in] = c.over_out;
  }
  return next;
}

std::vector<std::vector<int>> component_cycles(const LinkDiagram& d) {
  auto next = component_successor(d);
  std::set<int> seen;
  std::vector<std::vector<int>> cycles;
  for (const auto& [arc, _] : next) {
    if (seen.count(arc)) continue;
    std::vector<int> cyc;
    int a = arc;
    while (!seen.count(a)) {
      seen.insert(a);
      cyc.push_back(a);
      a = next.at(a);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// Serialize one traversal: arcs renamed in order of first mention, crossings
// emitted at first visit as (sign, visited-on-under, renamed arc quadruple).
std::string serialize_traversal(const LinkDiagram& d,
                                const std::vector<std::vector<int>>& comps,
                                const std::vector<std::pair<int, int>>& order) {
  std::map<int, const Crossing*> head_at;  // arc -> crossing where it ends
  for (const auto& c : d.crossings) {
    head_at[c.under_in] = &c;
    head_at[c.over_in] = &c;
  }
  std::map<int, int> rename;
  auto id_of = [&](int arc) {
    auto it = rename.find(arc);
    if (it != rename.end()) return it->second;
    int id = static_cast<int>(rename.size());
    rename.emplace(arc, id);
    return id;
  };
  std::set<const Crossing*> visited;
  std::ostringstream os;
  for (const auto& [ci, start] : order) {
    const auto& cyc = comps[ci];
    os << 'C';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int arc = cyc[(start + k) % cyc.size()];
      const Crossing* x = head_at.at(arc);
      bool under = (x->under_in == arc);
      if (visited.insert(x).second) {
        os << (x->sign > 0 ? '+' : '-') << (under ? 'u' : 'o') << id_of(x->under_in)
           << ',' << id_of(x->under_out) << ',' << id_of(x->over_in) << ','
           << id_of(x->over_out) << ';';
      } else {
        os << '.' << id_of(arc) << ';';
      }
    }
  }
  os << "L" << d.free_loops;
  return os.str();
}

}  // namespace

int component_count(const LinkDiagram& d) {
  return static_cast<int>(component_cycles(d).size()) + d.free_loops;
}

std::string canonical_key(const LinkDiagram& d) {
  auto comps = component_cycles(d);
  // Greedy canonical form: repeatedly append the (component, basepoint)
  // whose standalone serialization is lexicographically least.
  std::vector<std::string> best(comps.size());
  std::vector<int> best_start(comps.size(), 0);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    for (std::size_t s = 0; s < comps[ci].size(); ++s) {
      std::string ser = serialize_traversal(
          d, comps, {{static_cast<int>(ci), static_cast<int>(s)}});
      if (s == 0 || ser < best[ci]) {
        best[ci] = ser;
        best_start[ci] = static_cast<int>(s);
      }
    }
  }
  std::vector<std::size_t> comp_order(comps.size());
  for (std::size_t i = 0; i < comp_order.size(); ++i) comp_order[i] = i;
  std::stable_sort(comp_order.begin(), comp_order.end(),
                   [&](std::size_t a, std::size_t b) { return best[a] < best[b]; });
  std::vector<std::pair<int, int>> order;
  for (std::size_t ci : comp_order)
    order.push_back({static_cast<int>(ci), best_start[ci]});
  return serialize_traversal(d, comps, order);
}

}  // namespace kc
