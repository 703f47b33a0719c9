#ifndef SIGPDS_TESTS_SIG_SAMPLES_HPP
#define SIGPDS_TESTS_SIG_SAMPLES_HPP

#include <random>
#include <vector>

#include "sigpds/signature.hpp"

namespace sigpds::testing {

using Rng = std::mt19937_64;

inline std::vector<Word> words_up_to(std::size_t nsyms, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Symbol s = 0; s < nsyms; ++s) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

/// All proper signatures with |pop|+|push| <= total_len over nsyms symbols.
inline std::vector<StackSig> proper_sigs_up_to(std::size_t nsyms, std::size_t total_len) {
  std::vector<StackSig> out;
  auto words = words_up_to(nsyms, total_len);
  for (const auto& p : words)
    for (const auto& q : words)
      if (p.size() + q.size() <= total_len) out.push_back(StackSig::proper(p, q));
  return out;
}

inline std::vector<StackSig> sigs_with_top(std::size_t nsyms, std::size_t total_len) {
  auto out = proper_sigs_up_to(nsyms, total_len);
  out.push_back(StackSig::top());
  return out;
}

inline Word random_word(Rng& rng, std::size_t nsyms, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<Symbol> sym(0, static_cast<Symbol>(nsyms - 1));
  Word w(len(rng));
  for (auto& s : w) s = sym(rng);
  return w;
}

inline StackSig random_proper_sig(Rng& rng, std::size_t nsyms, std::size_t max_len) {
  return StackSig::proper(random_word(rng, nsyms, max_len), random_word(rng, nsyms, max_len));
}

inline StackSig random_sig(Rng& rng, std::size_t nsyms, std::size_t max_len) {
  if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return StackSig::top();
  return random_proper_sig(rng, nsyms, max_len);
}

}  // namespace sigpds::testing

#endif
