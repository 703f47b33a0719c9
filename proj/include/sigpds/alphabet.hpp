#ifndef SIGPDS_ALPHABET_HPP
#define SIGPDS_ALPHABET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigpds {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Interned set of stack symbols. Symbols are dense integer ids, so words
/// compare and hash as plain integer vectors.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names) {
    for (const auto& n : names) add(n);
  }

  Symbol add(std::string name) {
    if (auto it = index_.find(name); it != index_.end()) return it->second;
    if (name.empty()) throw std::invalid_argument("empty symbol name");
    for (char c : name)
      if (c == '/' || c == ',' || c == '|' || std::isspace(static_cast<unsigned char>(c)))
        throw std::invalid_argument("symbol name contains reserved character: " + name);
    Symbol id = static_cast<Symbol>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
  }

  std::optional<Symbol> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Symbol require(std::string_view name) const {
    auto s = find(name);
    if (!s) throw std::invalid_argument("unknown symbol: " + std::string(name));
    return *s;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }

  std::string render_word(const Word& w) const {
    if (w.empty()) return "-";
    std::string out;
    for (Symbol s : w) out += name(s);
    return out;
  }

  /// Parses a word given either as contiguous single-character symbols
  /// ("abc") or as dot-separated names ("a.b.c"). "-" denotes the empty word.
  Word parse_word(std::string_view text) const {
    Word w;
    if (text == "-" || text.empty()) return w;
    if (text.find('.') != std::string_view::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto dot = text.find('.', pos);
        auto piece = text.substr(pos, dot == std::string_view::npos ? dot : dot - pos);
        w.push_back(require(piece));
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
      }
      return w;
    }
    // Whole token as one symbol, otherwise per-character.
    if (auto s = find(text)) return {*s};
    for (char c : text) w.push_back(require(std::string_view(&c, 1)));
    return w;
  }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Symbol, std::less<>> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline bool is_prefix(const Word& pre, const Word& w) {
  if (pre.size() > w.size()) return false;
  return std::equal(pre.begin(), pre.end(), w.begin());
}

inline Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

/// The part of `w` after the prefix `pre`; callers must check is_prefix.
inline Word drop_prefix(const Word& pre, const Word& w) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(pre.size()), w.end());
}

}  // namespace sigpds

#endif
