#include "sigpds/dfa.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace sigpds {

namespace {

// Hopcroft partition refinement over a trimmed total DFA; returns the block
// id of each state.
std::vector<std::uint32_t> hopcroft_blocks(std::uint32_t n, std::uint32_t k,
                                           const std::vector<std::uint32_t>& delta,
                                           const std::vector<bool>& acc) {
  std::vector<std::vector<std::vector<std::uint32_t>>> inv(
      k, std::vector<std::vector<std::uint32_t>>(n));
  for (std::uint32_t q = 0; q < n; ++q)
    for (std::uint32_t c = 0; c < k; ++c) inv[c][delta[q * k + c]].push_back(q);

  std::vector<std::uint32_t> block_of(n, 0);
  std::vector<std::vector<std::uint32_t>> blocks;
  {
    std::vector<std::uint32_t> in, out;
    for (std::uint32_t q = 0; q < n; ++q) (acc[q] ? in : out).push_back(q);
    for (auto* part : {&in, &out})
      if (!part->empty()) {
        for (auto q : *part) block_of[q] = static_cast<std::uint32_t>(blocks.size());
        blocks.push_back(*part);
      }
  }

  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  std::vector<std::vector<bool>> in_work;
  auto push_work = [&](std::uint32_t b, std::uint32_t c) {
    if (in_work[b][c]) return;
    in_work[b][c] = true;
    work.emplace_back(b, c);
  };
  in_work.assign(blocks.size(), std::vector<bool>(k, false));
  for (std::uint32_t b = 0; b < blocks.size(); ++b)
    for (std::uint32_t c = 0; c < k; ++c) push_work(b, c);

  while (!work.empty()) {
    auto [splitter, c] = work.front();
    work.pop_front();
    in_work[splitter][c] = false;

    // States leading into the splitter block under c, grouped by their block.
    std::map<std::uint32_t, std::vector<std::uint32_t>> hits;
    for (std::uint32_t q : blocks[splitter])
      for (std::uint32_t p : inv[c][q]) hits[block_of[p]].push_back(p);

    for (auto& [b, hit] : hits) {
      if (hit.size() == blocks[b].size()) continue;
      // Split block b into the hit part (new block) and the rest (keeps id b).
      std::vector<bool> is_hit(n, false);
      for (auto p : hit) is_hit[p] = true;
      std::vector<std::uint32_t> rest;
      for (auto q : blocks[b])
        if (!is_hit[q]) rest.push_back(q);
      auto nb = static_cast<std::uint32_t>(blocks.size());
      blocks[b] = std::move(rest);
      blocks.push_back(hit);
      for (auto p : hit) block_of[p] = nb;
      in_work.push_back(std::vector<bool>(k, false));
      for (std::uint32_t c2 = 0; c2 < k; ++c2) {
        if (in_work[b][c2]) {
          push_work(nb, c2);
        } else {
          push_work(blocks[b].size() <= blocks[nb].size() ? b : nb, c2);
        }
      }
    }
  }
  return block_of;
}

}  // namespace

Dfa::Dfa(std::uint32_t k, std::uint32_t n, std::vector<std::uint32_t> delta, std::uint32_t init,
         std::vector<bool> accepting, bool canonicalize)
    : k_(k), n_(n), delta_(std::move(delta)), init_(init), acc_(std::move(accepting)) {
  if (n_ == 0 || delta_.size() != static_cast<std::size_t>(n_) * k_ || acc_.size() != n_ ||
      init_ >= n_)
    throw ContractViolation("malformed DFA");
  for (auto t : delta_)
    if (t >= n_) throw ContractViolation("DFA transition out of range");
  if (canonicalize) *this = canonicalized();
}

Dfa Dfa::canonicalized() const {
  // 1) trim to reachable states (BFS, letters ascending)
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> rename(n_, UINT32_MAX);
  order.push_back(init_);
  rename[init_] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint32_t c = 0; c < k_; ++c) {
      std::uint32_t t = delta_[order[i] * k_ + c];
      if (rename[t] == UINT32_MAX) {
        rename[t] = static_cast<std::uint32_t>(order.size());
        order.push_back(t);
      }
    }
  auto m = static_cast<std::uint32_t>(order.size());
  std::vector<std::uint32_t> d(static_cast<std::size_t>(m) * k_);
  std::vector<bool> a(m);
  for (std::uint32_t q = 0; q < m; ++q) {
    a[q] = acc_[order[q]];
    for (std::uint32_t c = 0; c < k_; ++c) d[q * k_ + c] = rename[delta_[order[q] * k_ + c]];
  }

  // 2) minimize
  auto block_of = hopcroft_blocks(m, k_, d, a);

  // 3) quotient + BFS renumber in one pass over blocks
  std::uint32_t nblocks = *std::max_element(block_of.begin(), block_of.end()) + 1;
  std::vector<std::uint32_t> bstate(nblocks, UINT32_MAX);  // representative state
  for (std::uint32_t q = 0; q < m; ++q)
    if (bstate[block_of[q]] == UINT32_MAX) bstate[block_of[q]] = q;

  std::vector<std::uint32_t> bname(nblocks, UINT32_MAX);
  std::vector<std::uint32_t> border;
  bname[block_of[0]] = 0;
  border.push_back(block_of[0]);
  for (std::size_t i = 0; i < border.size(); ++i) {
    std::uint32_t rep = bstate[border[i]];
    for (std::uint32_t c = 0; c < k_; ++c) {
      std::uint32_t tb = block_of[d[rep * k_ + c]];
      if (bname[tb] == UINT32_MAX) {
        bname[tb] = static_cast<std::uint32_t>(border.size());
        border.push_back(tb);
      }
    }
  }
  auto fn = static_cast<std::uint32_t>(border.size());
  std::vector<std::uint32_t> fd(static_cast<std::size_t>(fn) * k_);
  std::vector<bool> fa(fn);
  for (std::uint32_t i = 0; i < fn; ++i) {
    std::uint32_t rep = bstate[border[i]];
    fa[i] = a[rep];
    for (std::uint32_t c = 0; c < k_; ++c) fd[i * k_ + c] = bname[block_of[d[rep * k_ + c]]];
  }
  Dfa out(k_, fn, std::move(fd), 0, std::move(fa), false);
  out.canonical_ = true;
  return out;
}

Dfa Dfa::empty_lang(std::uint32_t k) {
  return Dfa(k, 1, std::vector<std::uint32_t>(k, 0), 0, {false});
}

Dfa Dfa::all_words(std::uint32_t k) {
  return Dfa(k, 1, std::vector<std::uint32_t>(k, 0), 0, {true});
}

Dfa Dfa::single_word(std::uint32_t k, const Word& w) {
  // chain of |w|+1 states plus a sink
  auto n = static_cast<std::uint32_t>(w.size() + 2);
  std::uint32_t sink = n - 1;
  std::vector<std::uint32_t> delta(static_cast<std::size_t>(n) * k, sink);
  for (std::uint32_t i = 0; i < w.size(); ++i) delta[i * k + w[i]] = i + 1;
  std::vector<bool> acc(n, false);
  acc[w.size()] = true;
  return Dfa(k, n, std::move(delta), 0, std::move(acc));
}

bool Dfa::accepts(const Word& w) const {
  std::uint32_t q = init_;
  for (Symbol s : w) {
    if (s >= k_) throw ContractViolation("symbol outside DFA alphabet");
    q = step(q, s);
  }
  return acc_[q];
}

bool Dfa::is_empty() const {
  // all states reachable in canonical form; otherwise do the BFS
  if (canonical_) return std::find(acc_.begin(), acc_.end(), true) == acc_.end();
  return canonicalized().is_empty();
}

std::strong_ordering operator<=>(const Dfa& a, const Dfa& b) {
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.init_ <=> b.init_; c != 0) return c;
  if (auto c = a.delta_ <=> b.delta_; c != 0) return c;
  return a.acc_ <=> b.acc_;
}

namespace {

Dfa product(const Dfa& a, const Dfa& b, bool(*comb)(bool, bool)) {
  if (a.alphabet_size() != b.alphabet_size())
    throw std::invalid_argument("alphabet mismatch in DFA product");
  std::uint32_t k = a.alphabet_size();
  std::uint32_t nb = b.state_count();
  auto id = [nb](std::uint32_t qa, std::uint32_t qb) { return qa * nb + qb; };

  std::map<std::uint32_t, std::uint32_t> seen;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> states;
  auto intern = [&](std::uint32_t qa, std::uint32_t qb) {
    auto [it, fresh] = seen.emplace(id(qa, qb), static_cast<std::uint32_t>(states.size()));
    if (fresh) states.emplace_back(qa, qb);
    return it->second;
  };
  intern(a.initial(), b.initial());
  std::vector<std::uint32_t> delta;  // filled row-major as states are discovered
  std::vector<bool> acc;
  for (std::size_t i = 0; i < states.size(); ++i) {
    auto [qa, qb] = states[i];
    acc.push_back(comb(a.accepting(qa), b.accepting(qb)));
    for (std::uint32_t c = 0; c < k; ++c) delta.push_back(intern(a.step(qa, c), b.step(qb, c)));
  }
  return Dfa(k, static_cast<std::uint32_t>(states.size()), std::move(delta), 0, std::move(acc));
}

}  // namespace

Dfa dfa_union(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa dfa_intersect(const Dfa& a, const Dfa& b) {
  return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa dfa_quotient(const Word& w, const Dfa& a) {
  std::uint32_t q = a.initial();
  for (Symbol s : w) {
    if (s >= a.alphabet_size()) throw ContractViolation("symbol outside DFA alphabet");
    q = a.step(q, s);
  }
  std::vector<std::uint32_t> delta(a.state_count() * a.alphabet_size());
  std::vector<bool> acc(a.state_count());
  for (std::uint32_t s = 0; s < a.state_count(); ++s) {
    acc[s] = a.accepting(s);
    for (std::uint32_t c = 0; c < a.alphabet_size(); ++c) delta[s * a.alphabet_size() + c] = a.step(s, c);
  }
  return Dfa(a.alphabet_size(), a.state_count(), std::move(delta), q, std::move(acc));
}

std::vector<Dfa> close_languages(const std::vector<Dfa>& seed, std::uint32_t k, std::size_t cap) {
  std::set<Dfa> have;
  std::vector<Dfa> members;
  std::deque<std::size_t> todo;
  auto add = [&](Dfa d) {
    if (have.insert(d).second) {
      members.push_back(std::move(d));
      todo.push_back(members.size() - 1);
      if (members.size() > cap) throw CapExceeded("closure", members.size());
    }
  };
  add(Dfa::empty_lang(k));
  add(Dfa::all_words(k));
  for (const auto& s : seed) {
    if (s.alphabet_size() != k) throw std::invalid_argument("alphabet mismatch in closure seed");
    add(s.canonical() ? s : s.canonicalized());
  }
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    for (Symbol c = 0; c < k; ++c) add(dfa_quotient(Word{c}, members[i]));
    for (std::size_t j = 0; j <= i && j < members.size(); ++j) {
      add(dfa_union(members[i], members[j]));
      add(dfa_intersect(members[i], members[j]));
    }
  }
  return members;
}

Transduction::Transduction(Dfa dfa, std::uint32_t base) : base_(base), dfa_(std::move(dfa)) {
  if (dfa_.alphabet_size() != base * base)
    throw ContractViolation("transduction DFA must range over the paired alphabet");
  if (!dfa_.canonical()) dfa_ = dfa_.canonicalized();
}

Transduction Transduction::identity(std::uint32_t base) {
  std::vector<Symbol> image(base);
  for (Symbol a = 0; a < base; ++a) image[a] = a;
  return letter_map(base, image);
}

Transduction Transduction::empty(std::uint32_t base) {
  return Transduction(Dfa::empty_lang(base * base), base);
}

Transduction Transduction::letter_map(std::uint32_t base, const std::vector<Symbol>& image) {
  std::uint32_t k = base * base;
  std::vector<std::uint32_t> delta(2 * k, 1);
  for (Symbol a = 0; a < base && a < image.size(); ++a) delta[pair_id(base, a, image[a])] = 0;
  return Transduction(Dfa(k, 2, std::move(delta), 0, {true, false}), base);
}

bool Transduction::relates(const Word& u, const Word& v) const {
  if (u.size() != v.size()) return false;
  Word pairs(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) pairs[i] = pair_id(base_, u[i], v[i]);
  return dfa_.accepts(pairs);
}

std::vector<Word> Transduction::outputs(const Word& u) const {
  std::vector<Word> out;
  struct Frame {
    std::uint32_t q;
    Word v;
  };
  std::vector<Frame> stack{{dfa_.initial(), {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.v.size() == u.size()) {
      if (dfa_.accepting(f.q)) out.push_back(std::move(f.v));
      continue;
    }
    Symbol a = u[f.v.size()];
    for (Symbol b = 0; b < base_; ++b) {
      std::uint32_t q2 = dfa_.step(f.q, pair_id(base_, a, b));
      Word v2 = f.v;
      v2.push_back(b);
      stack.push_back({q2, std::move(v2)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering operator<=>(const Transduction& a, const Transduction& b) {
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  return a.dfa_ <=> b.dfa_;
}

Transduction compose(const Transduction& t1, const Transduction& t2) {
  if (t1.base() != t2.base()) throw std::invalid_argument("alphabet mismatch in composition");
  std::uint32_t base = t1.base();
  const Dfa& d1 = t1.dfa();
  const Dfa& d2 = t2.dfa();

  // product NFA projecting the middle tape, then subset construction
  using StatePair = std::pair<std::uint32_t, std::uint32_t>;
  std::map<std::set<StatePair>, std::uint32_t> seen;
  std::vector<std::set<StatePair>> subsets;
  auto intern = [&](std::set<StatePair> s) {
    auto [it, fresh] = seen.emplace(std::move(s), static_cast<std::uint32_t>(subsets.size()));
    if (fresh) subsets.push_back(it->first);
    return it->second;
  };
  intern({{d1.initial(), d2.initial()}});
  std::vector<std::uint32_t> delta;  // row-major over pair letters (x,z)
  std::vector<bool> acc;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    auto cur = subsets[i];  // copy: subsets may reallocate below
    bool a = false;
    for (auto [q1, q2] : cur) a = a || (d1.accepting(q1) && d2.accepting(q2));
    acc.push_back(a);
    for (Symbol x = 0; x < base; ++x)
      for (Symbol z = 0; z < base; ++z) {
        std::set<StatePair> next;
        for (auto [q1, q2] : cur)
          for (Symbol y = 0; y < base; ++y)
            next.emplace(d1.step(q1, Transduction::pair_id(base, x, y)),
                         d2.step(q2, Transduction::pair_id(base, y, z)));
        delta.push_back(intern(std::move(next)));
      }
  }
  std::uint32_t k = base * base;
  return Transduction(
      Dfa(k, static_cast<std::uint32_t>(subsets.size()), std::move(delta), 0, std::move(acc)), base);
}

Transduction t_union(const Transduction& t1, const Transduction& t2) {
  if (t1.base() != t2.base()) throw std::invalid_argument("alphabet mismatch in union");
  return Transduction(dfa_union(t1.dfa(), t2.dfa()), t1.base());
}

Transduction pair_quotient(Symbol a, Symbol b, const Transduction& t) {
  return Transduction(dfa_quotient(Word{Transduction::pair_id(t.base(), a, b)}, t.dfa()), t.base());
}

std::vector<Transduction> close_transductions(const std::vector<Transduction>& seed,
                                              std::uint32_t base, std::size_t cap) {
  std::set<Transduction> have;
  std::vector<Transduction> members;
  std::deque<std::size_t> todo;
  auto add = [&](Transduction t) {
    if (have.insert(t).second) {
      members.push_back(std::move(t));
      todo.push_back(members.size() - 1);
      if (members.size() > cap) throw CapExceeded("closure", members.size());
    }
  };
  add(Transduction::empty(base));
  add(Transduction::identity(base));
  for (const auto& s : seed) {
    if (s.base() != base) throw std::invalid_argument("alphabet mismatch in closure seed");
    add(s);
  }
  while (!todo.empty()) {
    std::size_t i = todo.front();
    todo.pop_front();
    for (Symbol a = 0; a < base; ++a)
      for (Symbol b = 0; b < base; ++b) add(pair_quotient(a, b, members[i]));
    for (std::size_t j = 0; j <= i && j < members.size(); ++j) {
      add(compose(members[i], members[j]));
      add(compose(members[j], members[i]));
      add(t_union(members[i], members[j]));
    }
  }
  return members;
}

}  // namespace sigpds
