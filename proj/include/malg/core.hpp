#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace malg {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size limit would be exceeded; raised before any work is done.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class SignatureMismatch : public Error {
 public:
  using Error::Error;
};

/// An input morphism does not satisfy the contract an operation requires.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Caps
// ---------------------------------------------------------------------------

/// Hard limits on exhaustive work. Every enumerator checks its cap up front
/// and throws CapExceeded instead of truncating.
struct Caps {
  std::size_t max_subset_universe = 20;         // non-empty subset enumeration
  std::uint64_t max_tuples = 1'000'000;         // |u|^n for tuple iteration
  std::uint64_t max_maps = 1'000'000;           // |B|^|A| for morphism search
  std::size_t max_powerset_universe = 12;       // apply_P and friends
  std::size_t max_exhaustive_carrier = 4095;    // poset validators
  std::size_t max_tilde_universe = 7;           // input universe of P~
};

/// base^exp, or nullopt when the result exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp,
                                         std::uint64_t limit);

// ---------------------------------------------------------------------------
// Signature
// ---------------------------------------------------------------------------

struct Symbol {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class Signature {
 public:
  Signature() = default;
  /// Throws Error on duplicate names.
  explicit Signature(std::vector<Symbol> symbols);

  [[nodiscard]] std::size_t size() const { return symbols_.size(); }
  [[nodiscard]] bool empty() const { return symbols_.empty(); }
  [[nodiscard]] const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  [[nodiscard]] const std::vector<Symbol>& symbols() const { return symbols_; }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
};

// ---------------------------------------------------------------------------
// Universe
// ---------------------------------------------------------------------------

/// Non-empty ordered set of uniquely labelled elements, addressed by dense
/// indices 0..size-1.
class Universe {
 public:
  /// Throws Error when empty or when labels repeat.
  explicit Universe(std::vector<std::string> labels);
  /// Elements labelled "0".."n-1".
  static Universe numbered(std::size_t n);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return labels_[i]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const;

  friend bool operator==(const Universe& a, const Universe& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Subset
// ---------------------------------------------------------------------------

/// Fixed-width bit vector holding a subset of {0..width-1}.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t width);

  static Subset singleton(std::size_t width, std::size_t element);
  static Subset full(std::size_t width);
  /// Requires width <= 64.
  static Subset from_mask(std::size_t width, std::uint64_t mask);
  static Subset from_elements(std::size_t width, std::span<const std::size_t> elements);

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  [[nodiscard]] std::size_t count() const;
  [[nodiscard]] bool empty() const;
  [[nodiscard]] bool is_subset_of(const Subset& other) const;
  [[nodiscard]] bool intersects(const Subset& other) const;

  /// Lowest member, or nullopt.
  [[nodiscard]] std::optional<std::size_t> first() const;
  /// Lowest member strictly greater than i, or nullopt.
  [[nodiscard]] std::optional<std::size_t> next(std::size_t i) const;
  [[nodiscard]] std::vector<std::size_t> elements() const;

  /// Requires width <= 64.
  [[nodiscard]] std::uint64_t to_mask() const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  [[nodiscard]] Subset complement() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Subset&, const Subset&) = default;
  /// Width first, then numeric value of the bit vector.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  [[nodiscard]] std::size_t hash() const;

 private:
  void check_width(const Subset& other) const;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

/// Carrier index of a non-empty subset in the mask-ordered enumeration of
/// P*(X): the subset with bit mask m sits at index m - 1. Width <= 63.
std::size_t powerset_index(const Subset& s);
/// Inverse of powerset_index.
Subset powerset_element(std::size_t index, std::size_t width);

/// "{a,b}" using the universe's labels.
std::string format_subset(const Universe& u, const Subset& s);

/// Subset algebra over one universe.
class SubsetAlgebra {
 public:
  explicit SubsetAlgebra(const Universe& u, Caps caps = {});

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] Subset empty_set() const { return Subset(width_); }
  [[nodiscard]] Subset singleton(std::size_t e) const;
  [[nodiscard]] Subset unite(const Subset& a, const Subset& b) const;
  [[nodiscard]] Subset intersect(const Subset& a, const Subset& b) const;
  [[nodiscard]] Subset complement(const Subset& a) const;
  [[nodiscard]] bool includes(const Subset& small, const Subset& big) const;

  /// All 2^n - 1 non-empty subsets in increasing mask order. Throws
  /// CapExceeded when the universe is larger than max_subset_universe.
  [[nodiscard]] std::vector<Subset> nonempty_subsets() const;

 private:
  std::size_t width_;
  Caps caps_;
};

// ---------------------------------------------------------------------------
// Tuples
// ---------------------------------------------------------------------------

/// |size|^arity, throwing CapExceeded beyond caps.max_tuples.
std::uint64_t tuple_count(std::size_t size, std::size_t arity, const Caps& caps = {});

/// Flat position of a tuple in lexicographic order (first coordinate most
/// significant).
std::size_t tuple_index(std::span<const std::size_t> tuple, std::size_t size);

/// All size^arity tuples in lexicographic index order. Arity 0 yields one
/// empty tuple.
class Tuples {
 public:
  Tuples(std::size_t size, std::size_t arity, const Caps& caps = {});

  class iterator {
   public:
    using value_type = std::vector<std::size_t>;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const std::vector<std::size_t>& operator*() const { return current_; }
    const std::vector<std::size_t>* operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.remaining_ == b.remaining_;
    }

   private:
    friend class Tuples;
    iterator(std::size_t size, std::size_t arity, std::uint64_t remaining);

    std::size_t size_ = 0;
    std::vector<std::size_t> current_;
    std::uint64_t remaining_ = 0;
  };

  [[nodiscard]] iterator begin() const { return iterator(size_, arity_, count_); }
  [[nodiscard]] iterator end() const { return iterator(size_, arity_, 0); }
  [[nodiscard]] std::uint64_t count() const { return count_; }

 private:
  std::size_t size_;
  std::size_t arity_;
  std::uint64_t count_;
};

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

/// A Sigma-term: a variable or a symbol applied to exactly arity subterms.
class Term {
 public:
  static Term variable(std::size_t index);
  /// Throws Error when args.size() differs from the symbol's arity.
  static Term apply(const Signature& sig, std::size_t symbol, std::vector<Term> args);

  [[nodiscard]] bool is_variable() const { return is_variable_; }
  /// Variable index or symbol index.
  [[nodiscard]] std::size_t index() const { return index_; }
  [[nodiscard]] const std::vector<Term>& args() const { return args_; }
  [[nodiscard]] std::size_t depth() const;
  /// One past the largest variable index occurring in the term.
  [[nodiscard]] std::size_t variable_bound() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term() = default;

  bool is_variable_ = true;
  std::size_t index_ = 0;
  std::vector<Term> args_;
};

/// Variable index -> element index. Total by contract: evaluators throw when
/// a term mentions a variable past the end.
using Valuation = std::vector<std::size_t>;

/// Renders a term with the given variable names (x0, x1, ... when absent).
std::string format_term(const Signature& sig, const Term& t,
                        std::span<const std::string> var_names = {});

// ---------------------------------------------------------------------------
// Morphisms and verdicts
// ---------------------------------------------------------------------------

/// Total map between two finite universes, by index.
class Morphism {
 public:
  Morphism() = default;
  /// Throws Error when map.size() != source_size or an image is out of range.
  Morphism(std::size_t source_size, std::size_t target_size, std::vector<std::size_t> map);
  static Morphism identity(std::size_t n);

  [[nodiscard]] std::size_t source_size() const { return map_.size(); }
  [[nodiscard]] std::size_t target_size() const { return target_size_; }
  [[nodiscard]] std::size_t operator()(std::size_t i) const { return map_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& map() const { return map_; }

  [[nodiscard]] bool is_injective() const;
  [[nodiscard]] bool is_bijective() const;
  /// Requires a bijection.
  [[nodiscard]] Morphism inverse() const;
  /// Image of a subset of the source.
  [[nodiscard]] Subset image(const Subset& s) const;

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism& a, const Morphism& b) {
    return a.map_ <=> b.map_;
  }

 private:
  std::size_t target_size_ = 0;
  std::vector<std::size_t> map_;
};

/// second ∘ first.
Morphism compose(const Morphism& second, const Morphism& first);

/// Where a check failed. Fields that do not apply stay empty.
struct Witness {
  std::optional<std::size_t> symbol;
  std::vector<std::size_t> tuple;
  std::vector<std::size_t> elements;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Result of a checker: PASS, or FAIL naming the first violated condition in
/// deterministic order together with its witness.
struct Verdict {
  bool ok = true;
  std::string condition;   // empty on PASS
  std::string detail;      // human-readable, uses element labels
  Witness witness;
  bool exhaustive = true;  // false when a sampled regime was used

  static Verdict pass() { return {}; }
  static Verdict fail(std::string condition, std::string detail, Witness witness = {});

  explicit operator bool() const { return ok; }
};

/// A validated value or the verdict explaining why validation failed.
template <class T>
struct Checked {
  std::optional<T> value;
  Verdict verdict;

  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

std::string format_tuple(const Universe& u, std::span<const std::size_t> tuple);

}  // namespace malg
