#ifndef SIGPDS_WQO_HPP
#define SIGPDS_WQO_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigpds/errors.hpp"

namespace sigpds {

/// Flat encoding of a quasi-ordered element (or tuple of them): `width`
/// integers per base element, tuples concatenated.
using WqoElem = std::vector<std::uint32_t>;
using WqoView = std::span<const std::uint32_t>;

/// A well-quasi-order on a (possibly infinite) carrier. Instances must
/// document why the order is a WQO; the interface only carries the
/// reflexive-transitive comparison.
class Wqo {
 public:
  virtual ~Wqo() = default;
  virtual std::size_t width() const = 0;
  virtual bool leq(WqoView a, WqoView b) const = 0;
  /// All base elements, for finite instances; nullopt when infinite.
  virtual std::optional<std::vector<WqoElem>> enumerate() const { return std::nullopt; }
  virtual std::string render(WqoView e) const = 0;
  virtual bool same_as(const Wqo& other) const = 0;
};

using WqoPtr = std::shared_ptr<const Wqo>;

/// Upward-closed subset of carrier^arity, stored as the sorted antichain of
/// its minimal generators. The empty antichain denotes the empty set.
class UpSet {
 public:
  UpSet(WqoPtr wqo, std::size_t arity) : wqo_(std::move(wqo)), arity_(arity) {}
  static UpSet up(WqoPtr wqo, std::size_t arity, std::vector<WqoElem> gens);

  bool empty() const { return gens_.empty(); }
  std::size_t arity() const { return arity_; }
  const WqoPtr& wqo() const { return wqo_; }
  const std::vector<WqoElem>& generators() const { return gens_; }

  /// componentwise base order on tuples
  bool tuple_leq(WqoView a, WqoView b) const;
  bool member(const WqoElem& x) const;

  friend bool operator==(const UpSet& a, const UpSet& b) {
    return a.arity_ == b.arity_ && a.gens_ == b.gens_;
  }
  friend std::strong_ordering operator<=>(const UpSet& a, const UpSet& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.gens_ <=> b.gens_;
  }

  std::string render() const;

 private:
  WqoPtr wqo_;
  std::size_t arity_;
  std::vector<WqoElem> gens_;
};

UpSet union_up(const UpSet& a, const UpSet& b);
UpSet product_up(const UpSet& a, const UpSet& b);

/// A monotone partial map carrier -> carrier^arity with a computable
/// preimage on upward-closed sets.
class MonotoneTransfer {
 public:
  virtual ~MonotoneTransfer() = default;
  virtual const WqoPtr& wqo() const = 0;
  virtual std::size_t arity() const = 0;
  virtual std::optional<WqoElem> apply(WqoView x) const = 0;
  /// { x | apply(x) defined and in target }; target arity must match.
  virtual UpSet preimage(const UpSet& target) const = 0;
  virtual std::string describe() const = 0;
  virtual bool same_as(const MonotoneTransfer& other) const = 0;
};

using TransferPtr = std::shared_ptr<const MonotoneTransfer>;

/// Finite, explicitly ordered carrier. The order is given as edges whose
/// reflexive-transitive closure is taken; any quasi-order on a finite set is
/// trivially a WQO.
class FiniteWqo final : public Wqo {
 public:
  FiniteWqo(std::vector<std::string> names, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  std::size_t width() const override { return 1; }
  bool leq(WqoView a, WqoView b) const override { return leq_[a[0] * names_.size() + b[0]]; }
  std::optional<std::vector<WqoElem>> enumerate() const override;
  std::string render(WqoView e) const override { return names_.at(e[0]); }
  bool same_as(const Wqo& other) const override;

  std::size_t carrier_size() const { return names_.size(); }
  std::optional<std::uint32_t> find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> leq_;
};

/// Vectors of naturals under the pointwise order (Dickson's lemma).
class VectorWqo final : public Wqo {
 public:
  explicit VectorWqo(std::size_t dims) : dims_(dims) {}
  std::size_t width() const override { return dims_; }
  bool leq(WqoView a, WqoView b) const override;
  std::string render(WqoView e) const override;
  bool same_as(const Wqo& other) const override;

 private:
  std::size_t dims_;
};

/// Transfer on a finite carrier given by explicit entries; the preimage is
/// computed by filtering the whole carrier.
class FiniteTransfer final : public MonotoneTransfer {
 public:
  FiniteTransfer(WqoPtr wqo, std::size_t arity,
                 std::vector<std::pair<std::uint32_t, WqoElem>> entries, std::string name);

  const WqoPtr& wqo() const override { return wqo_; }
  std::size_t arity() const override { return arity_; }
  std::optional<WqoElem> apply(WqoView x) const override;
  UpSet preimage(const UpSet& target) const override;
  std::string describe() const override { return name_; }
  bool same_as(const MonotoneTransfer& other) const override;

  /// exhaustive monotonicity check; instances are spot-checked in tests
  bool check_monotone() const;

 private:
  WqoPtr wqo_;
  std::size_t arity_;
  std::vector<std::pair<std::uint32_t, WqoElem>> entries_;  // sorted by key
  std::string name_;
};

/// Guarded translation on vectors: defined when v >= guard, maps v to the
/// tuple (v - guard + offset_j)_j. Monotone by construction, and preimages of
/// principal ideals have the closed form max(guard, t + guard - offset).
class GuardedTranslation final : public MonotoneTransfer {
 public:
  GuardedTranslation(WqoPtr wqo, WqoElem guard, std::vector<WqoElem> offsets, std::string name);

  const WqoPtr& wqo() const override { return wqo_; }
  std::size_t arity() const override { return offsets_.size(); }
  std::optional<WqoElem> apply(WqoView x) const override;
  UpSet preimage(const UpSet& target) const override;
  std::string describe() const override { return name_; }
  bool same_as(const MonotoneTransfer& other) const override;

  const WqoElem& guard() const { return guard_; }
  const std::vector<WqoElem>& offsets() const { return offsets_; }

 private:
  WqoPtr wqo_;
  WqoElem guard_;
  std::vector<WqoElem> offsets_;
  std::string name_;
};

}  // namespace sigpds

#endif
