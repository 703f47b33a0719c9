#ifndef SIGPDS_DFA_HPP
#define SIGPDS_DFA_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "sigpds/alphabet.hpp"
#include "sigpds/errors.hpp"

namespace sigpds {

/// Total DFA over a dense alphabet 0..k-1, kept in canonical form: minimal,
/// states numbered by BFS discovery order from the initial state with letters
/// taken in increasing order. Structural equality then coincides with
/// language equality, which the saturation fixpoint test relies on.
class Dfa {
 public:
  /// Builds (and by default canonicalizes) a DFA. `delta` is row-major
  /// n x k and must be total.
  Dfa(std::uint32_t k, std::uint32_t n, std::vector<std::uint32_t> delta, std::uint32_t init,
      std::vector<bool> accepting, bool canonicalize = true);

  static Dfa empty_lang(std::uint32_t k);
  static Dfa all_words(std::uint32_t k);
  static Dfa single_word(std::uint32_t k, const Word& w);

  std::uint32_t alphabet_size() const { return k_; }
  std::uint32_t state_count() const { return n_; }
  std::uint32_t initial() const { return init_; }
  bool accepting(std::uint32_t q) const { return acc_[q]; }
  std::uint32_t step(std::uint32_t q, Symbol a) const { return delta_[q * k_ + a]; }
  bool canonical() const { return canonical_; }

  bool accepts(const Word& w) const;
  bool is_empty() const;

  Dfa canonicalized() const;

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.init_ == b.init_ && a.delta_ == b.delta_ &&
           a.acc_ == b.acc_;
  }
  friend std::strong_ordering operator<=>(const Dfa& a, const Dfa& b);

 private:
  std::uint32_t k_, n_;
  std::vector<std::uint32_t> delta_;
  std::uint32_t init_;
  std::vector<bool> acc_;
  bool canonical_ = false;
};

Dfa dfa_union(const Dfa& a, const Dfa& b);
Dfa dfa_intersect(const Dfa& a, const Dfa& b);

/// Left quotient w^-1 L: initial state advanced along w, re-canonicalized.
Dfa dfa_quotient(const Word& w, const Dfa& a);

/// Closure of a set of languages under union, intersection and single-letter
/// quotients (hence all word quotients), seeded with the empty language and
/// the full language. Throws CapExceeded beyond `cap` members.
std::vector<Dfa> close_languages(const std::vector<Dfa>& seed, std::uint32_t k, std::size_t cap);

/// A letter-to-letter transduction: a regular language over the paired
/// alphabet, realized as the product alphabet with pairs ordered
/// lexicographically. Pair <a,b> has id a*k+b.
class Transduction {
 public:
  Transduction(Dfa dfa, std::uint32_t base);

  static Transduction identity(std::uint32_t base);
  static Transduction empty(std::uint32_t base);
  /// Exact letter map: relates w to f(w) letterwise; entries give f.
  static Transduction letter_map(std::uint32_t base, const std::vector<Symbol>& image);

  const Dfa& dfa() const { return dfa_; }
  std::uint32_t base() const { return base_; }
  static Symbol pair_id(std::uint32_t base, Symbol a, Symbol b) { return a * base + b; }

  bool relates(const Word& u, const Word& v) const;
  /// All outputs of length |u| related to u; used by explicit-state oracles.
  std::vector<Word> outputs(const Word& u) const;

  friend bool operator==(const Transduction& a, const Transduction& b) {
    return a.base_ == b.base_ && a.dfa_ == b.dfa_;
  }
  friend std::strong_ordering operator<=>(const Transduction& a, const Transduction& b);

 private:
  std::uint32_t base_;
  Dfa dfa_;
};

Transduction compose(const Transduction& t1, const Transduction& t2);
Transduction t_union(const Transduction& t1, const Transduction& t2);
Transduction pair_quotient(Symbol a, Symbol b, const Transduction& t);

/// Least set containing the seed, the empty and identity transductions,
/// closed under compose, union and single-pair quotients. Throws CapExceeded
/// (cap name "closure") when the set would grow beyond `cap`; a too-large
/// closure means the finiteness hypothesis on the transduction set fails or
/// the cap is too small.
std::vector<Transduction> close_transductions(const std::vector<Transduction>& seed,
                                              std::uint32_t base, std::size_t cap);

}  // namespace sigpds

#endif
