#include "wordchar/word.hpp"

#include <algorithm>
#include <map>

namespace wordchar {

Letter inverse(const Letter& l) { return Letter{l.generator, -l.sign}; }

std::string to_string(WordClass c) {
  switch (c) {
    case WordClass::kIdentity: return "identity";
    case WordClass::kPrimitiveDetected: return "primitive-detected";
    case WordClass::kProperPower: return "proper-power";
    case WordClass::kGeneric: return "generic";
  }
  return "?";
}

namespace {

std::vector<Letter> freely_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  for (const Letter& l : in) {
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("bad letter sign");
    if (!out.empty() && out.back() == inverse(l)) out.pop_back();
    else out.push_back(l);
  }
  return out;
}


}  // namespace

namespace detail {

ReducedWord assemble_word(std::vector<Letter> letters) {
  // Dense re-indexing of the generators that actually occur.
  std::map<int, int> remap;
  for (const Letter& l : letters) remap.try_emplace(l.generator, 0);
  int next = 0;
  for (auto& [g, id] : remap) id = next++;
  ReducedWord w;
  w.rank_ = next;
  w.occurrences_.assign(static_cast<size_t>(next), 0);
  for (Letter l : letters) {
    l.generator = remap[l.generator];
    ++w.occurrences_[static_cast<size_t>(l.generator)];
    w.letters_.push_back(l);
  }
  w.cyclically_reduced_ =
      w.letters_.empty() || !(w.letters_.front() == inverse(w.letters_.back()));
  return w;
}

}  // namespace detail

WordAnalysis preprocess_word(const std::vector<Letter>& letters) {
  std::vector<Letter> red = freely_reduce(letters);
  // Cyclic reduction: strip matching first/last pairs.
  size_t lo = 0, hi = red.size();
  while (hi - lo >= 2 && red[lo] == inverse(red[hi - 1])) { ++lo; --hi; }
  std::vector<Letter> core(red.begin() + static_cast<long>(lo),
                           red.begin() + static_cast<long>(hi));

  WordAnalysis a;
  a.word = detail::assemble_word(core);
  if (a.word.length() == 0) {
    a.word_class = WordClass::kIdentity;
    return a;
  }
  for (int occ : a.word.occurrences()) {
    if (occ == 1) {
      a.word_class = WordClass::kPrimitiveDetected;
      return a;
    }
  }
  // Proper power iff the letter sequence has a literal period p | l, p < l.
  const auto& ls = a.word.letters();
  const int l = a.word.length();
  for (int p = 1; p < l; ++p) {
    if (l % p != 0) continue;
    bool periodic = true;
    for (int i = p; i < l && periodic; ++i)
      periodic = ls[static_cast<size_t>(i)] == ls[static_cast<size_t>(i % p)];
    if (periodic) {
      a.word_class = WordClass::kProperPower;
      a.power_root = detail::assemble_word(std::vector<Letter>(ls.begin(), ls.begin() + p));
      a.power_exponent = l / p;
      return a;
    }
  }
  a.word_class = WordClass::kGeneric;
  return a;
}

ReducedWord rotate(const ReducedWord& w, int by) {
  if (!w.cyclically_reduced())
    throw std::invalid_argument("rotate: word must be cyclically reduced");
  const int l = w.length();
  if (l == 0) return w;
  by = ((by % l) + l) % l;
  std::vector<Letter> rot;
  rot.reserve(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i)
    rot.push_back(w.letters()[static_cast<size_t>((i + by) % l)]);
  return detail::assemble_word(std::move(rot));
}

std::vector<Letter> parse_word(const std::string& text) {
  std::vector<Letter> out;
  for (char c : text) {
    if (c >= 'a' && c <= 'z') out.push_back({c - 'a', 1});
    else if (c >= 'A' && c <= 'Z') out.push_back({c - 'A', -1});
    else throw std::invalid_argument(std::string("bad word character: ") + c);
  }
  return out;
}

std::string letters_to_string(const std::vector<Letter>& letters) {
  std::string s;
  for (const Letter& l : letters) {
    if (l.generator > 25) throw std::invalid_argument("generator beyond z");
    s += static_cast<char>((l.sign == 1 ? 'a' : 'A') + l.generator);
  }
  return s;
}

std::string ReducedWord::to_string() const { return letters_to_string(letters_); }

}  // namespace wordchar
