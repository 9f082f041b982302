#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kc/errors.hpp"

namespace kc {

/// A braid word on a fixed number of strands.  Letter g stands for the
/// generator crossing strands |g| and |g|+1; its sign is the crossing sign.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  int crossing_count() const { return static_cast<int>(letters.size()); }
  int writhe() const;
  int c_plus() const;
  int c_minus() const;

  bool operator==(const BraidWord&) const = default;
};

/// Grammar: "<strands> ':' (<ws> <signed-int>)*".  Throws ParseError with
/// the offending byte position on bad syntax or an out-of-range generator.
BraidWord parse_braid(std::string_view text);

/// Canonical text form, e.g. "3: 1 -2 1 -2"; the empty word is "3:".
std::string to_text(const BraidWord& b);

/// Permutation induced by the word on strand positions (0-based image).
std::vector<int> strand_permutation(const BraidWord& b);

/// Number of components of the closure = cycles of strand_permutation.
int closure_component_count(const BraidWord& b);

/// All braid words with at most max_strands strands and at most max_letters
/// letters: for each strand count s, every word over the alphabet
/// {1, -1, ..., s-1, -(s-1)}.  Deterministic order: strand count, then
/// length, then lexicographic with 1 < -1 < 2 < -2 < ...
std::vector<BraidWord> enumerate_braid_words(int max_strands, int max_letters);

}  // namespace kc
