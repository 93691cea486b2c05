#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wordchar/numbers.hpp"

namespace wordchar {

/// One letter of a free-group word: generator index (0-based) and sign.
struct Letter {
  int generator = 0;
  int sign = 1;  // +1 or -1
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

Letter inverse(const Letter& l);

enum class WordClass {
  kIdentity,
  kPrimitiveDetected,  // some generator occurs exactly once after reduction
  kProperPower,
  kGeneric,
};

std::string to_string(WordClass c);

class ReducedWord;
namespace detail {
/// Assembles a word from already-reduced letters (re-indexing generators).
ReducedWord assemble_word(std::vector<Letter> letters);
}  // namespace detail

/// A freely and cyclically reduced word over generators 0..rank-1, with the
/// unused generators dropped and the remaining ones re-indexed densely.
class ReducedWord {
public:
  const std::vector<Letter>& letters() const { return letters_; }
  int rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  /// Occurrences of each generator (either sign); sums to length().
  const std::vector<int>& occurrences() const { return occurrences_; }
  bool cyclically_reduced() const { return cyclically_reduced_; }

  /// Letters as a..z for generators, A..Z for inverses.
  std::string to_string() const;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

private:
  friend ReducedWord detail::assemble_word(std::vector<Letter>);
  std::vector<Letter> letters_;
  std::vector<int> occurrences_;
  int rank_ = 0;
  bool cyclically_reduced_ = true;
};

struct WordAnalysis {
  ReducedWord word;          // the cyclically reduced core
  WordClass word_class = WordClass::kIdentity;
  ReducedWord power_root;    // set when word_class == kProperPower
  int power_exponent = 1;
};

/// Free reduction, cyclic reduction, classification (identity / detected
/// primitive / proper power / generic), and dense re-indexing of generators.
WordAnalysis preprocess_word(const std::vector<Letter>& letters);

/// Cyclic rotation by `by` positions (letter `by` becomes first).
ReducedWord rotate(const ReducedWord& w, int by);

/// Parse "aBAb" style words: lowercase a..z are generators 1..26, uppercase
/// their inverses. Throws std::invalid_argument on anything else.
std::vector<Letter> parse_word(const std::string& text);

std::string letters_to_string(const std::vector<Letter>& letters);

}  // namespace wordchar
