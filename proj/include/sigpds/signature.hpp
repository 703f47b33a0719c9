#ifndef SIGPDS_SIGNATURE_HPP
#define SIGPDS_SIGNATURE_HPP

#include <cassert>
#include <compare>
#include <optional>
#include <string>

#include "sigpds/alphabet.hpp"

namespace sigpds {

/// A stack signature: the net stack effect of a computation, recorded as the
/// word it pops and the word it pushes, with an absorbing TOP element for
/// incompatible compositions. pop/push words are stored top-of-stack first.
class StackSig {
 public:
  static StackSig unit() { return StackSig(Word{}, Word{}); }
  static StackSig top() {
    StackSig s;
    s.top_ = true;
    return s;
  }
  static StackSig proper(Word pop, Word push) { return StackSig(std::move(pop), std::move(push)); }

  bool is_top() const { return top_; }
  bool is_proper() const { return !top_; }
  bool is_unit() const { return !top_ && pop_.empty() && push_.empty(); }

  const Word& pop() const {
    assert(!top_);
    return pop_;
  }
  const Word& push() const {
    assert(!top_);
    return push_;
  }

  friend bool operator==(const StackSig& a, const StackSig& b) {
    if (a.top_ != b.top_) return false;
    return a.top_ || (a.pop_ == b.pop_ && a.push_ == b.push_);
  }

  // Arbitrary total order so signatures can key maps; TOP sorts last.
  friend std::strong_ordering operator<=>(const StackSig& a, const StackSig& b) {
    if (a.top_ != b.top_) return a.top_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.top_) return std::strong_ordering::equal;
    if (auto c = a.pop_ <=> b.pop_; c != 0) return c;
    return a.push_ <=> b.push_;
  }

  std::string render(const Alphabet& g) const {
    if (top_) return "TOP";
    return g.render_word(pop_) + "/" + g.render_word(push_);
  }

 private:
  StackSig() = default;
  StackSig(Word pop, Word push) : pop_(std::move(pop)), push_(std::move(push)) {}

  bool top_ = false;
  Word pop_, push_;
};

/// Case split of the signature product, mirroring the two prefix cases of the
/// definition. Exposed so the case analysis itself can be unit-tested.
enum class MulCase {
  top_operand,        // either operand is TOP
  pop_absorbed,       // second pop is a prefix of first push
  push_extended,      // first push is a proper prefix of second pop
  incompatible,       // neither word is a prefix of the other
};

inline MulCase mul_case(const StackSig& s1, const StackSig& s2) {
  if (s1.is_top() || s2.is_top()) return MulCase::top_operand;
  if (is_prefix(s2.pop(), s1.push())) return MulCase::pop_absorbed;
  if (is_prefix(s1.push(), s2.pop())) return MulCase::push_extended;
  return MulCase::incompatible;
}

/// Monoid multiplication: prefix-cancellation product, TOP when the operands
/// are incompatible or either one is TOP. Total.
inline StackSig mul(const StackSig& s1, const StackSig& s2) {
  switch (mul_case(s1, s2)) {
    case MulCase::top_operand:
    case MulCase::incompatible:
      return StackSig::top();
    case MulCase::pop_absorbed: {
      // s1.push = s2.pop . r  =>  result = s1.pop / s2.push . r
      Word r = drop_prefix(s2.pop(), s1.push());
      return StackSig::proper(s1.pop(), concat(s2.push(), r));
    }
    case MulCase::push_extended: {
      // s2.pop = s1.push . r  =>  result = s1.pop . r / s2.push
      Word r = drop_prefix(s1.push(), s2.pop());
      return StackSig::proper(concat(s1.pop(), r), s2.push());
    }
  }
  return StackSig::top();  // unreachable
}

/// Witness for leq: the common suffix w with s2 = s1 extended by w.
/// Empty result when s2 is TOP or no such suffix exists.
inline std::optional<Word> suffix_of(const StackSig& s1, const StackSig& s2) {
  if (s1.is_top() || s2.is_top()) return std::nullopt;
  if (!is_prefix(s1.pop(), s2.pop()) || !is_prefix(s1.push(), s2.push())) return std::nullopt;
  Word w1 = drop_prefix(s1.pop(), s2.pop());
  Word w2 = drop_prefix(s1.push(), s2.push());
  if (w1 != w2) return std::nullopt;
  return w1;
}

/// s1 <= s2: s2 is TOP, or s2 extends both components of s1 by one common suffix.
inline bool leq(const StackSig& s1, const StackSig& s2) {
  if (s2.is_top()) return true;
  if (s1.is_top()) return false;
  return suffix_of(s1, s2).has_value();
}

/// Extends a proper signature by a suffix word on both components.
inline StackSig lift_by(const StackSig& s, const Word& w) {
  assert(s.is_proper());
  return StackSig::proper(concat(s.pop(), w), concat(s.push(), w));
}

/// Both operands must be proper; true iff push(s1) = pop(s2), in which case
/// the product needs no lifting.
inline bool strictly_compatible(const StackSig& s1, const StackSig& s2) {
  if (s1.is_top() || s2.is_top()) throw std::invalid_argument("strictly_compatible: TOP operand");
  return s1.push() == s2.pop();
}

/// Result of aligning a compatible pair: the minimal lifts making the pair
/// strictly compatible, and which side (if any) was lifted by which suffix.
struct Alignment {
  enum class Side { none, left, right };
  StackSig left, right;
  Side lifted = Side::none;
  Word suffix;
};

/// For proper s1, s2: the minimal strictly compatible lift of the pair, or
/// nullopt when the pair is incompatible. Ties cannot occur (the prefix
/// relation on words is antisymmetric).
inline std::optional<Alignment> align(const StackSig& s1, const StackSig& s2) {
  assert(s1.is_proper() && s2.is_proper());
  if (s1.push() == s2.pop()) return Alignment{s1, s2, Alignment::Side::none, Word{}};
  if (is_prefix(s1.push(), s2.pop())) {
    Word r = drop_prefix(s1.push(), s2.pop());
    return Alignment{lift_by(s1, r), s2, Alignment::Side::left, r};
  }
  if (is_prefix(s2.pop(), s1.push())) {
    Word r = drop_prefix(s2.pop(), s1.push());
    return Alignment{s1, lift_by(s2, r), Alignment::Side::right, r};
  }
  return std::nullopt;
}

/// Element of the join-semilattice completion: a signature or BOT, where BOT
/// is placed strictly below every signature. BOT exists only here; the
/// monoid itself never produces it.
class SigLattice {
 public:
  static SigLattice bottom() { return SigLattice(); }
  SigLattice(StackSig s) : sig_(std::move(s)) {}  // NOLINT: implicit by design of the lattice

  bool is_bottom() const { return !sig_.has_value(); }
  const StackSig& sig() const {
    assert(sig_.has_value());
    return *sig_;
  }

  friend bool operator==(const SigLattice& a, const SigLattice& b) { return a.sig_ == b.sig_; }

  std::string render(const Alphabet& g) const { return is_bottom() ? "BOT" : sig_->render(g); }

 private:
  SigLattice() = default;
  std::optional<StackSig> sig_;
};

inline bool leq(const SigLattice& a, const SigLattice& b) {
  if (a.is_bottom()) return true;
  if (b.is_bottom()) return false;
  return leq(a.sig(), b.sig());
}

/// Least upper bound. For proper signatures the order is linear below any
/// common proper bound, so incomparable pairs join to TOP.
inline SigLattice join(const SigLattice& a, const SigLattice& b) {
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  if (leq(a.sig(), b.sig())) return b;
  if (leq(b.sig(), a.sig())) return a;
  return SigLattice(StackSig::top());
}

inline SigLattice mul(const SigLattice& a, const SigLattice& b) {
  if (a.is_bottom() || b.is_bottom()) return SigLattice::bottom();
  return SigLattice(mul(a.sig(), b.sig()));
}

}  // namespace sigpds

#endif
