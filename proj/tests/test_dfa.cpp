#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sig_samples.hpp"
#include "sigpds/dfa.hpp"

using namespace sigpds;
using sigpds::testing::Rng;

namespace {

Dfa random_dfa(Rng& rng, std::uint32_t k, std::uint32_t max_states) {
  std::uniform_int_distribution<std::uint32_t> nstates(1, max_states);
  std::uint32_t n = nstates(rng);
  std::uniform_int_distribution<std::uint32_t> st(0, n - 1);
  std::vector<std::uint32_t> delta(static_cast<std::size_t>(n) * k);
  for (auto& t : delta) t = st(rng);
  std::vector<bool> acc(n);
  std::bernoulli_distribution coin(0.4);
  for (std::size_t i = 0; i < n; ++i) acc[i] = coin(rng);
  return Dfa(k, n, std::move(delta), st(rng), std::move(acc), false);
}

Dfa even_length(std::uint32_t k) {
  std::vector<std::uint32_t> delta;
  for (std::uint32_t c = 0; c < k; ++c) delta.push_back(1);
  for (std::uint32_t c = 0; c < k; ++c) delta.push_back(0);
  return Dfa(k, 2, std::move(delta), 0, {true, false});
}

}  // namespace

TEST_CASE("boolean operations with trivial operands") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Dfa l = random_dfa(rng, 2, 5).canonicalized();
    CHECK(dfa_union(l, Dfa::empty_lang(2)) == l);
    CHECK(dfa_intersect(l, Dfa::all_words(2)) == l);
    CHECK(dfa_intersect(l, Dfa::empty_lang(2)) == Dfa::empty_lang(2));
  }
  CHECK_THROWS_AS(dfa_union(Dfa::all_words(2), Dfa::all_words(3)), std::invalid_argument);
}

TEST_CASE("even lengths intersected with nonempty lengths") {
  // over a single letter: even-length words meet length >= 1
  Dfa ge1(1, 2, {1, 1}, 0, {false, true});
  Dfa both = dfa_intersect(even_length(1), ge1);
  for (std::size_t len = 0; len <= 6; ++len) {
    Word w(len, 0);
    CHECK(both.accepts(w) == (len >= 1 && len % 2 == 0));
  }
}

TEST_CASE("left quotient") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Dfa l = random_dfa(rng, 2, 5).canonicalized();
    CHECK(dfa_quotient(Word{}, l) == l);
  }
  // explicit: quotient of the even-length language is the odd-length language
  Dfa even = even_length(1);
  Dfa odd = dfa_quotient(Word{0}, even);
  for (std::size_t len = 0; len <= 6; ++len) CHECK(odd.accepts(Word(len, 0)) == (len % 2 == 1));

  // gamma^-1 of gamma-prefixed language recovers the language
  for (int i = 0; i < 30; ++i) {
    Dfa l = random_dfa(rng, 2, 4).canonicalized();
    // build { a w | w in L } directly
    std::uint32_t n = l.state_count();
    std::vector<std::uint32_t> delta;
    std::uint32_t sink = n + 1;
    // state 0 = fresh initial, states 1.. = shifted l states, sink last
    delta.push_back(l.initial() + 1);  // on 'a'
    delta.push_back(sink);             // on 'b'
    for (std::uint32_t q = 0; q < n; ++q)
      for (std::uint32_t c = 0; c < 2; ++c) delta.push_back(l.step(q, c) + 1);
    for (std::uint32_t c = 0; c < 2; ++c) delta.push_back(sink);
    std::vector<bool> acc(n + 2, false);
    for (std::uint32_t q = 0; q < n; ++q) acc[q + 1] = l.accepting(q);
    Dfa prefixed(2, n + 2, std::move(delta), 0, std::move(acc));
    CHECK(dfa_quotient(Word{0}, prefixed) == l);
  }
}

TEST_CASE("quotient distributes over union and intersection") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    Dfa a = random_dfa(rng, 2, 4);
    Dfa b = random_dfa(rng, 2, 4);
    Word w = testing::random_word(rng, 2, 3);
    CHECK(dfa_quotient(w, dfa_union(a, b)) == dfa_union(dfa_quotient(w, a), dfa_quotient(w, b)));
    CHECK(dfa_quotient(w, dfa_intersect(a, b)) ==
          dfa_intersect(dfa_quotient(w, a), dfa_quotient(w, b)));
  }
}

TEST_CASE("canonicalization is idempotent and preserves the language") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    Dfa raw = random_dfa(rng, 2, 6);
    Dfa canon = raw.canonicalized();
    CHECK(canon.canonicalized() == canon);
    for (const auto& w : testing::words_up_to(2, 5)) CHECK(raw.accepts(w) == canon.accepts(w));
  }
}

TEST_CASE("iterated single-letter quotients reach a finite fixpoint") {
  Rng rng(19);
  for (int i = 0; i < 20; ++i) {
    Dfa l = random_dfa(rng, 2, 6).canonicalized();
    std::set<Dfa> langs{l};
    std::vector<Dfa> todo{l};
    std::size_t guard = 0;
    while (!todo.empty()) {
      Dfa cur = std::move(todo.back());
      todo.pop_back();
      for (Symbol c = 0; c < 2; ++c) {
        Dfa q = dfa_quotient(Word{c}, cur);
        if (langs.insert(q).second) todo.push_back(std::move(q));
      }
      REQUIRE(++guard < 1000);
    }
    // Myhill-Nerode: number of quotients bounded by the state count
    CHECK(langs.size() <= static_cast<std::size_t>(l.state_count()) + 1);
  }
}

TEST_CASE("membership and emptiness") {
  CHECK(Dfa::all_words(2).accepts(Word{0, 1, 0}));
  CHECK(Dfa::all_words(2).accepts(Word{}));
  CHECK_FALSE(Dfa::empty_lang(2).accepts(Word{}));
  CHECK(Dfa::empty_lang(2).is_empty());
  CHECK_FALSE(Dfa::all_words(2).is_empty());
  CHECK_FALSE(even_length(1).accepts(Word{0, 0, 0}));
  CHECK(Dfa::single_word(2, Word{0, 1}).accepts(Word{0, 1}));
  CHECK_FALSE(Dfa::single_word(2, Word{0, 1}).accepts(Word{0}));
}

TEST_CASE("transduction composition") {
  auto id = Transduction::identity(2);
  auto none = Transduction::empty(2);
  // increment mod 2 letter map
  auto inc = Transduction::letter_map(2, {1, 0});

  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    Transduction t(random_dfa(rng, 4, 4), 2);
    CHECK(compose(id, t) == t);
    CHECK(compose(t, id) == t);
    CHECK(compose(none, t) == none);
    CHECK(compose(t, none) == none);
  }

  CHECK(compose(inc, inc) == id);
  // enumerate pairs to length 4
  auto words = sigpds::testing::words_up_to(2, 4);
  for (const auto& u : words)
    for (const auto& v : words) {
      if (u.size() != v.size()) continue;
      CHECK(compose(inc, inc).relates(u, v) == (u == v));
    }
}

TEST_CASE("transduction closure") {
  auto by_value = [](std::vector<Transduction> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto base = by_value(close_transductions({}, 2, 100));
  CHECK(base.size() == 2);  // empty and identity

  CHECK(by_value(close_transductions({Transduction::identity(2)}, 2, 100)) == base);

  auto swap = Transduction::letter_map(2, {1, 0});
  auto closed = close_transductions({swap}, 2, 100);
  CHECK(closed.size() == 4);  // empty, id, swap, id-or-swap
  std::set<Transduction> cset(closed.begin(), closed.end());
  CHECK(cset.count(Transduction::empty(2)) == 1);
  CHECK(cset.count(Transduction::identity(2)) == 1);
  CHECK(cset.count(swap) == 1);
  CHECK(cset.count(t_union(swap, Transduction::identity(2))) == 1);

  CHECK_THROWS_AS(close_transductions({swap}, 2, 2), CapExceeded);
}

TEST_CASE("language closure is finite and capped") {
  Dfa even = even_length(1);
  auto closed = close_languages({even}, 1, 100);
  // empty, all, even, odd, nonempty-even/odd meets etc: a small finite set
  CHECK(closed.size() >= 4);
  std::set<Dfa> cset(closed.begin(), closed.end());
  // closed under quotient and boolean ops by construction; spot check
  for (const auto& l : closed) {
    CHECK(cset.count(dfa_quotient(Word{0}, l)) == 1);
    for (const auto& m : closed) {
      CHECK(cset.count(dfa_union(l, m)) == 1);
      CHECK(cset.count(dfa_intersect(l, m)) == 1);
    }
  }
  CHECK_THROWS_AS(close_languages({even}, 1, 2), CapExceeded);
}
