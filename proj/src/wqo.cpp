#include "sigpds/wqo.hpp"

#include <algorithm>
#include <cassert>

namespace sigpds {

bool UpSet::tuple_leq(WqoView a, WqoView b) const {
  assert(a.size() == b.size());
  std::size_t w = wqo_->width();
  for (std::size_t off = 0; off < a.size(); off += w)
    if (!wqo_->leq(a.subspan(off, w), b.subspan(off, w))) return false;
  return true;
}

UpSet UpSet::up(WqoPtr wqo, std::size_t arity, std::vector<WqoElem> gens) {
  UpSet s(std::move(wqo), arity);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    if (g.size() != arity * s.wqo_->width())
      throw ContractViolation("generator arity mismatch in UpSet");
    bool dominated = false;
    for (const auto& h : gens)
      if (&h != &g && (s.tuple_leq(h, g) && !(s.tuple_leq(g, h) && h > g))) {
        // strictly below, or equivalent with a smaller representative
        if (!s.tuple_leq(g, h) || h < g) {
          dominated = true;
          break;
        }
      }
    if (!dominated) s.gens_.push_back(g);
  }
  return s;
}

bool UpSet::member(const WqoElem& x) const {
  if (x.size() != arity_ * wqo_->width()) throw ContractViolation("member arity mismatch");
  for (const auto& g : gens_)
    if (tuple_leq(g, x)) return true;
  return false;
}

std::string UpSet::render() const {
  std::string out = "up{";
  std::size_t w = wqo_->width();
  bool first_gen = true;
  for (const auto& g : gens_) {
    if (!first_gen) out += ";";
    first_gen = false;
    for (std::size_t off = 0; off < g.size(); off += w)
      out += wqo_->render(WqoView(g).subspan(off, w));
    if (g.empty()) out += "()";
  }
  out += "}";
  return out;
}

UpSet union_up(const UpSet& a, const UpSet& b) {
  if (a.arity() != b.arity() || !a.wqo()->same_as(*b.wqo()))
    throw ContractViolation("union of UpSets over different orders");
  std::vector<WqoElem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return UpSet::up(a.wqo(), a.arity(), std::move(gens));
}

UpSet product_up(const UpSet& a, const UpSet& b) {
  if (!a.wqo()->same_as(*b.wqo())) throw ContractViolation("product of UpSets over different orders");
  std::vector<WqoElem> gens;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      WqoElem g = x;
      g.insert(g.end(), y.begin(), y.end());
      gens.push_back(std::move(g));
    }
  return UpSet::up(a.wqo(), a.arity() + b.arity(), std::move(gens));
}

FiniteWqo::FiniteWqo(std::vector<std::string> names,
                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges)
    : names_(std::move(names)) {
  std::size_t n = names_.size();
  leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = true;
  for (auto [a, b] : edges) leq_.at(a * n + b) = true;
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_[k * n + j]) leq_[i * n + j] = true;
}

std::optional<std::vector<WqoElem>> FiniteWqo::enumerate() const {
  std::vector<WqoElem> out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back({i});
  return out;
}

bool FiniteWqo::same_as(const Wqo& other) const {
  auto* o = dynamic_cast<const FiniteWqo*>(&other);
  return o && o->names_ == names_ && o->leq_ == leq_;
}

std::optional<std::uint32_t> FiniteWqo::find(const std::string& name) const {
  for (std::uint32_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool VectorWqo::leq(WqoView a, WqoView b) const {
  for (std::size_t i = 0; i < dims_; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::string VectorWqo::render(WqoView e) const {
  std::string out = "(";
  for (std::size_t i = 0; i < dims_; ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

bool VectorWqo::same_as(const Wqo& other) const {
  auto* o = dynamic_cast<const VectorWqo*>(&other);
  return o && o->dims_ == dims_;
}

FiniteTransfer::FiniteTransfer(WqoPtr wqo, std::size_t arity,
                               std::vector<std::pair<std::uint32_t, WqoElem>> entries,
                               std::string name)
    : wqo_(std::move(wqo)), arity_(arity), entries_(std::move(entries)), name_(std::move(name)) {
  if (wqo_->width() != 1) throw ContractViolation("FiniteTransfer requires a width-1 carrier");
  std::sort(entries_.begin(), entries_.end());
  for (const auto& [k, v] : entries_)
    if (v.size() != arity_) throw ContractViolation("FiniteTransfer entry arity mismatch");
}

std::optional<WqoElem> FiniteTransfer::apply(WqoView x) const {
  for (const auto& [k, v] : entries_)
    if (k == x[0]) return v;
  return std::nullopt;
}

UpSet FiniteTransfer::preimage(const UpSet& target) const {
  if (target.arity() != arity_) throw ContractViolation("preimage arity mismatch");
  std::vector<WqoElem> gens;
  for (const auto& [k, v] : entries_)
    if (target.member(v)) gens.push_back({k});
  return UpSet::up(wqo_, 1, std::move(gens));
}

bool FiniteTransfer::same_as(const MonotoneTransfer& other) const {
  auto* o = dynamic_cast<const FiniteTransfer*>(&other);
  return o && o->arity_ == arity_ && o->entries_ == entries_ && o->wqo_->same_as(*wqo_);
}

bool FiniteTransfer::check_monotone() const {
  auto elems = wqo_->enumerate();
  if (!elems) return true;
  UpSet probe(wqo_, arity_);
  for (const auto& x : *elems)
    for (const auto& y : *elems) {
      if (!wqo_->leq(x, y)) continue;
      auto fx = apply(x);
      if (!fx) continue;
      auto fy = apply(y);
      if (!fy) return false;
      if (!probe.tuple_leq(*fx, *fy)) return false;
    }
  return true;
}

GuardedTranslation::GuardedTranslation(WqoPtr wqo, WqoElem guard, std::vector<WqoElem> offsets,
                                       std::string name)
    : wqo_(std::move(wqo)), guard_(std::move(guard)), offsets_(std::move(offsets)), name_(std::move(name)) {
  std::size_t w = wqo_->width();
  if (guard_.size() != w) throw ContractViolation("guard width mismatch");
  for (const auto& d : offsets_)
    if (d.size() != w) throw ContractViolation("offset width mismatch");
}

std::optional<WqoElem> GuardedTranslation::apply(WqoView x) const {
  std::size_t w = wqo_->width();
  for (std::size_t c = 0; c < w; ++c)
    if (x[c] < guard_[c]) return std::nullopt;
  WqoElem out;
  out.reserve(offsets_.size() * w);
  for (const auto& d : offsets_)
    for (std::size_t c = 0; c < w; ++c) out.push_back(x[c] - guard_[c] + d[c]);
  return out;
}

UpSet GuardedTranslation::preimage(const UpSet& target) const {
  if (target.arity() != arity()) throw ContractViolation("preimage arity mismatch");
  std::size_t w = wqo_->width();
  std::vector<WqoElem> gens;
  for (const auto& t : target.generators()) {
    // v >= guard and, per output slot j, v - guard + d_j >= t_j
    WqoElem g = guard_;
    for (std::size_t j = 0; j < offsets_.size(); ++j)
      for (std::size_t c = 0; c < w; ++c) {
        std::int64_t need = static_cast<std::int64_t>(t[j * w + c]) + guard_[c] - offsets_[j][c];
        if (need > g[c]) g[c] = static_cast<std::uint32_t>(need);
      }
    gens.push_back(std::move(g));
  }
  return UpSet::up(wqo_, 1, std::move(gens));
}

bool GuardedTranslation::same_as(const MonotoneTransfer& other) const {
  auto* o = dynamic_cast<const GuardedTranslation*>(&other);
  return o && o->guard_ == guard_ && o->offsets_ == offsets_ && o->wqo_->same_as(*wqo_);
}

}  // namespace sigpds
