#include "malg/core.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace malg {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp,
                                         std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
  }
  if (result > limit) return std::nullopt;
  return result;
}

// --- Signature --------------------------------------------------------------

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw Error("symbol name must not be empty");
    if (!seen.insert(s.name).second) throw Error("duplicate symbol '" + s.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

// --- Universe ---------------------------------------------------------------

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("universe must be non-empty");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw Error("duplicate element '" + labels_[i] + "'");
  }
}

Universe Universe::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Universe(std::move(labels));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// --- Subset -----------------------------------------------------------------

Subset::Subset(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

Subset Subset::singleton(std::size_t width, std::size_t element) {
  Subset s(width);
  s.set(element);
  return s;
}

Subset Subset::full(std::size_t width) {
  Subset s(width);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (width % 64 != 0 && !s.words_.empty())
    s.words_.back() = (std::uint64_t{1} << (width % 64)) - 1;
  return s;
}

Subset Subset::from_mask(std::size_t width, std::uint64_t mask) {
  if (width > 64) throw Error("from_mask requires width <= 64");
  Subset s(width);
  if (width < 64 && (mask >> width) != 0) throw Error("mask wider than subset");
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

Subset Subset::from_elements(std::size_t width, std::span<const std::size_t> elements) {
  Subset s(width);
  for (auto e : elements) {
    if (e >= width) throw Error("subset element out of range");
    s.set(e);
  }
  return s;
}

std::size_t Subset::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool Subset::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void Subset::check_width(const Subset& other) const {
  if (width_ != other.width_) throw Error("subset width mismatch");
}

bool Subset::is_subset_of(const Subset& other) const {
  check_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  return true;
}

bool Subset::intersects(const Subset& other) const {
  check_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if ((words_[w] & other.words_[w]) != 0) return true;
  return false;
}

std::optional<std::size_t> Subset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return w * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[w]));
  return std::nullopt;
}

std::optional<std::size_t> Subset::next(std::size_t i) const {
  std::size_t start = i + 1;
  if (start >= width_) return std::nullopt;
  std::size_t w = start >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits != 0) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
    if (++w == words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t e) { out.push_back(e); });
  return out;
}

std::uint64_t Subset::to_mask() const {
  if (width_ > 64) throw Error("to_mask requires width <= 64");
  return words_.empty() ? 0 : words_[0];
}

Subset& Subset::operator|=(const Subset& other) {
  check_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  check_width(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Subset Subset::complement() const {
  Subset out = full(width_);
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
  return out;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.width_ <=> b.width_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t Subset::hash() const {
  std::size_t h = std::hash<std::size_t>{}(width_);
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t powerset_index(const Subset& s) {
  if (s.width() > 63) throw Error("powerset_index requires width <= 63");
  const auto mask = s.to_mask();
  if (mask == 0) throw Error("powerset_index of the empty set");
  return static_cast<std::size_t>(mask - 1);
}

Subset powerset_element(std::size_t index, std::size_t width) {
  return Subset::from_mask(width, static_cast<std::uint64_t>(index) + 1);
}

std::string format_subset(const Universe& u, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t e) {
    if (!first) out += ',';
    out += u.label(e);
    first = false;
  });
  out += '}';
  return out;
}

std::string format_tuple(const Universe& u, std::span<const std::size_t> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += u.label(tuple[i]);
  }
  out += ')';
  return out;
}

// --- SubsetAlgebra ------------------------------------------------------------

SubsetAlgebra::SubsetAlgebra(const Universe& u, Caps caps) : width_(u.size()), caps_(caps) {}

Subset SubsetAlgebra::singleton(std::size_t e) const { return Subset::singleton(width_, e); }
Subset SubsetAlgebra::unite(const Subset& a, const Subset& b) const { return a | b; }
Subset SubsetAlgebra::intersect(const Subset& a, const Subset& b) const { return a & b; }
Subset SubsetAlgebra::complement(const Subset& a) const { return a.complement(); }
bool SubsetAlgebra::includes(const Subset& small, const Subset& big) const {
  return small.is_subset_of(big);
}

std::vector<Subset> SubsetAlgebra::nonempty_subsets() const {
  if (width_ > caps_.max_subset_universe || width_ > 63)
    throw CapExceeded("subset enumeration over " + std::to_string(width_) +
                      " elements exceeds cap " + std::to_string(caps_.max_subset_universe));
  const std::uint64_t total = (std::uint64_t{1} << width_) - 1;
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t m = 1; m <= total; ++m) out.push_back(Subset::from_mask(width_, m));
  return out;
}

// --- Tuples -------------------------------------------------------------------

std::uint64_t tuple_count(std::size_t size, std::size_t arity, const Caps& caps) {
  auto n = checked_pow(size, arity, caps.max_tuples);
  if (!n)
    throw CapExceeded(std::to_string(size) + "^" + std::to_string(arity) +
                      " tuples exceeds cap " + std::to_string(caps.max_tuples));
  return *n;
}

std::size_t tuple_index(std::span<const std::size_t> tuple, std::size_t size) {
  std::size_t idx = 0;
  for (auto t : tuple) idx = idx * size + t;
  return idx;
}

Tuples::Tuples(std::size_t size, std::size_t arity, const Caps& caps)
    : size_(size), arity_(arity), count_(tuple_count(size, arity, caps)) {}

Tuples::iterator::iterator(std::size_t size, std::size_t arity, std::uint64_t remaining)
    : size_(size), current_(arity, 0), remaining_(remaining) {}

Tuples::iterator& Tuples::iterator::operator++() {
  --remaining_;
  for (std::size_t i = current_.size(); i-- > 0;) {
    if (++current_[i] < size_) break;
    current_[i] = 0;
  }
  return *this;
}

// --- Term ---------------------------------------------------------------------

Term Term::variable(std::size_t index) {
  Term t;
  t.is_variable_ = true;
  t.index_ = index;
  return t;
}

Term Term::apply(const Signature& sig, std::size_t symbol, std::vector<Term> args) {
  if (symbol >= sig.size()) throw Error("unknown symbol index");
  if (args.size() != sig[symbol].arity)
    throw Error("symbol '" + sig[symbol].name + "' expects " +
                std::to_string(sig[symbol].arity) + " arguments, got " +
                std::to_string(args.size()));
  Term t;
  t.is_variable_ = false;
  t.index_ = symbol;
  t.args_ = std::move(args);
  return t;
}

std::size_t Term::depth() const {
  if (is_variable_) return 0;
  std::size_t d = 0;
  for (const auto& a : args_) d = std::max(d, a.depth());
  return d + 1;
}

std::size_t Term::variable_bound() const {
  if (is_variable_) return index_ + 1;
  std::size_t b = 0;
  for (const auto& a : args_) b = std::max(b, a.variable_bound());
  return b;
}

std::string format_term(const Signature& sig, const Term& t,
                        std::span<const std::string> var_names) {
  if (t.is_variable()) {
    if (t.index() < var_names.size()) return var_names[t.index()];
    return "x" + std::to_string(t.index());
  }
  std::string out = sig[t.index()].name + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ',';
    out += format_term(sig, t.args()[i], var_names);
  }
  return out + ")";
}

// --- Morphism -----------------------------------------------------------------

Morphism::Morphism(std::size_t source_size, std::size_t target_size,
                   std::vector<std::size_t> map)
    : target_size_(target_size), map_(std::move(map)) {
  if (map_.size() != source_size) throw Error("morphism is not total on its source");
  for (auto m : map_)
    if (m >= target_size) throw Error("morphism image out of range");
}

Morphism Morphism::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  return Morphism(n, n, std::move(map));
}

bool Morphism::is_injective() const {
  std::vector<bool> hit(target_size_, false);
  for (auto m : map_) {
    if (hit[m]) return false;
    hit[m] = true;
  }
  return true;
}

bool Morphism::is_bijective() const { return map_.size() == target_size_ && is_injective(); }

Morphism Morphism::inverse() const {
  if (!is_bijective()) throw Error("inverse of a non-bijective morphism");
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Morphism(target_size_, map_.size(), std::move(inv));
}

Subset Morphism::image(const Subset& s) const {
  Subset out(target_size_);
  s.for_each([&](std::size_t e) { out.set(map_[e]); });
  return out;
}

Morphism compose(const Morphism& second, const Morphism& first) {
  if (first.target_size() != second.source_size())
    throw Error("morphisms are not composable");
  std::vector<std::size_t> map(first.source_size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second(first(i));
  return Morphism(first.source_size(), second.target_size(), std::move(map));
}

Verdict Verdict::fail(std::string condition, std::string detail, Witness witness) {
  Verdict v;
  v.ok = false;
  v.condition = std::move(condition);
  v.detail = std::move(detail);
  v.witness = std::move(witness);
  return v;
}

}  // namespace malg
