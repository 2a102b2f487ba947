#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alca/errors.hpp"

namespace alca {

using SymbolId = std::uint32_t;
using Word = std::vector<SymbolId>;

// Display spelling of the empty word and its spelling inside machine files.
inline constexpr std::string_view kLambda = "λ";
inline constexpr std::string_view kLambdaAscii = "lambda";

// Ordered set of symbol names; order fixes the canonical ordering of words.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw SchemaError("alphabet must not be empty");
    std::vector<std::string> sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw SchemaError("alphabet contains duplicate symbols");
    for (const auto& s : symbols_) {
      if (s.empty()) throw SchemaError("alphabet symbols must be nonempty");
      if (s == kLambda || s == kLambdaAscii)
        throw SchemaError("symbol name '" + s + "' is reserved for the empty word");
      if (s.size() != 1) single_char_ = false;
    }
  }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::string& name(SymbolId id) const { return symbols_.at(id); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<SymbolId> find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == name) return static_cast<SymbolId>(i);
    return std::nullopt;
  }

  // Words are spelled by plain concatenation when every symbol is a single
  // byte, otherwise symbols are joined with '.'.
  bool single_char() const { return single_char_; }

  std::string spell(const Word& w) const {
    if (w.empty()) return std::string(kLambda);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!single_char_ && i > 0) out += '.';
      out += name(w[i]);
    }
    return out;
  }

  // Inverse of spell(); also accepts "lambda" and "" for the empty word.
  std::optional<Word> try_read(std::string_view text) const {
    Word w;
    if (text.empty() || text == kLambda || text == kLambdaAscii) return w;
    if (single_char_) {
      for (char c : text) {
        auto id = find(std::string_view(&c, 1));
        if (!id) return std::nullopt;
        w.push_back(*id);
      }
      return w;
    }
    std::size_t start = 0;
    while (true) {
      std::size_t dot = text.find('.', start);
      auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
      auto id = find(piece);
      if (!id) return std::nullopt;
      w.push_back(*id);
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
    return w;
  }

  Word read(std::string_view text) const {
    auto w = try_read(text);
    if (!w) throw SymbolError("'" + std::string(text) + "' is not a word over the alphabet");
    return *w;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  bool single_char_ = true;
};

// Length first, then lexicographic by alphabet position.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Ultimately periodic infinite word prefix . cycle^omega.
struct Lasso {
  Word prefix;
  Word cycle;

  SymbolId at(std::size_t t) const {
    if (t < prefix.size()) return prefix[t];
    return cycle[(t - prefix.size()) % cycle.size()];
  }

  friend bool operator==(const Lasso&, const Lasso&) = default;
};

inline Lasso make_lasso(Word prefix, Word cycle) {
  if (cycle.empty()) throw SymbolError("lasso cycle must be nonempty");
  return Lasso{std::move(prefix), std::move(cycle)};
}

// "prefix;cycle" with the alphabet's spelling.
inline std::string spell(const Alphabet& a, const Lasso& w) {
  return a.spell(w.prefix) + ";" + a.spell(w.cycle);
}

// Finite set of equal-length words, sorted lexicographically.
struct WordSet {
  std::size_t length = 0;
  std::vector<Word> words;

  static WordSet of(std::size_t length, std::vector<Word> words) {
    for (const auto& w : words)
      if (w.size() != length) throw Error("WordSet: word length mismatch");
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return WordSet{length, std::move(words)};
  }

  static WordSet lambda() { return WordSet{0, {Word{}}}; }

  bool contains(const Word& w) const {
    return w.size() == length && std::binary_search(words.begin(), words.end(), w);
  }
  bool empty() const { return words.empty(); }
  std::size_t size() const { return words.size(); }

  WordSet unite(const WordSet& o) const {
    if (o.length != length) throw Error("WordSet: union of different lengths");
    WordSet out{length, {}};
    std::set_union(words.begin(), words.end(), o.words.begin(), o.words.end(),
                   std::back_inserter(out.words));
    return out;
  }

  friend bool operator==(const WordSet&, const WordSet&) = default;
};

// Space-separated spelling of a word set.
inline std::string spell(const Alphabet& a, const WordSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.words.size(); ++i) {
    if (i) out += ' ';
    out += a.spell(s.words[i]);
  }
  return out;
}

}  // namespace alca
