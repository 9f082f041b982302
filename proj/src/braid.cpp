#include "kc/braid.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace kc {

int BraidWord::writhe() const {
  int w = 0;
  for (int g : letters) w += (g > 0) ? 1 : -1;
  return w;
}

int BraidWord::c_plus() const {
  int c = 0;
  for (int g : letters) c += (g > 0);
  return c;
}

int BraidWord::c_minus() const {
  int c = 0;
  for (int g : letters) c += (g < 0);
  return c;
}

BraidWord parse_braid(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto parse_int = [&](bool allow_sign) -> long {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw ParseError("expected integer", start);
    return std::strtol(std::string(text.substr(start, i - start)).c_str(), nullptr, 10);
  };

  skip_ws();
  std::size_t strands_pos = i;
  long strands = parse_int(false);
  if (strands < 1) throw ParseError("strand count must be positive", strands_pos);
  skip_ws();
  if (i >= text.size() || text[i] != ':') throw ParseError("expected ':'", i);
  ++i;

  BraidWord b;
  b.strands = static_cast<int>(strands);
  for (;;) {
    skip_ws();
    if (i >= text.size()) break;
    std::size_t letter_pos = i;
    long g = parse_int(true);
    if (g == 0) throw ParseError("generator index must be nonzero", letter_pos);
    if (std::labs(g) > strands - 1) {
      std::ostringstream os;
      os << "generator " << g << " exceeds strands-1=" << strands - 1;
      throw ParseError(os.str(), letter_pos);
    }
    b.letters.push_back(static_cast<int>(g));
  }
  return b;
}

std::string to_text(const BraidWord& b) {
  std::ostringstream os;
  os << b.strands << ":";
  for (int g : b.letters) os << ' ' << g;
  return os.str();
}

std::vector<int> strand_permutation(const BraidWord& b) {
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  // perm[p] = strand position at the top reached from bottom position p.
  for (int g : b.letters) {
    int p = std::abs(g) - 1;
    for (auto& v : perm)
      if (v == p)
        v = p + 1;
      else if (v == p + 1)
        v = p;
  }
  return perm;
}

int closure_component_count(const BraidWord& b) {
  std::vector<int> perm = strand_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t t = s; !seen[t]; t = perm[t]) seen[t] = true;
  }
  return cycles;
}

std::vector<BraidWord> enumerate_braid_words(int max_strands, int max_letters) {
  std::vector<BraidWord> out;
  for (int s = 1; s <= max_strands; ++s) {
    std::vector<int> alphabet;
    for (int g = 1; g <= s - 1; ++g) {
      alphabet.push_back(g);
      alphabet.push_back(-g);
    }
    for (int len = 0; len <= max_letters; ++len) {
      if (alphabet.empty() && len > 0) break;
      std::vector<int> idx(len, 0);
      for (;;) {
        BraidWord b;
        b.strands = s;
        for (int v : idx) b.letters.push_back(alphabet[v]);
        out.push_back(std::move(b));
        int k = len - 1;
        while (k >= 0 && idx[k] + 1 == static_cast<int>(alphabet.size())) {
          idx[k] = 0;
          --k;
        }
        if (k < 0) break;
        ++idx[k];
      }
    }
  }
  return out;
}

}  // namespace kc
