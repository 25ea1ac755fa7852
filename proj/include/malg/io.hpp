#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "malg/multialg.hpp"
#include "malg/ordalg.hpp"
#include "malg/variants.hpp"

namespace malg {

/// Syntax or semantic error in a structure file; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class Kind { multialgebra, partial, poset, ordered_algebra, morphism, term };

std::string to_string(Kind k);

struct PosetSpec {
  Universe carrier;
  OrderMatrix leq;  // reflexive closure of the listed pairs
};

struct OrderedAlgebraSpec {
  Signature signature;
  Universe carrier;
  OrderMatrix leq;
  std::vector<OrderedAlgebra::Table> tables;
};

/// Morphism files name elements by label; they are resolved against the
/// universes of the structures they connect.
struct MorphismSpec {
  struct Entry {
    std::string source;
    std::vector<std::string> targets;
    bool braced = false;
    std::size_t line = 0;
  };
  std::vector<Entry> entries;
  [[nodiscard]] bool set_valued() const;
};

struct TermSpec {
  Signature signature;
  Term term;
  std::vector<std::string> variables;  // in order of first occurrence
};

using Document =
    std::variant<MultiAlgebra, PartialMultiAlgebra, PosetSpec, OrderedAlgebraSpec, MorphismSpec, TermSpec>;

Kind kind_of(const Document& d);

Document parse_document(std::string_view text, const Caps& caps = {});
/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);

/// Runs validate_poset, validate_cabl and validate_ordered_algebra.
Checked<OrderedAlgebra> build_ordered_algebra(const OrderedAlgebraSpec& spec, const Caps& caps = {});

Morphism resolve_morphism(const MorphismSpec& spec, const Universe& src, const Universe& dst);
SetValuedMorphism resolve_set_morphism(const MorphismSpec& spec, const Universe& src,
                                       const Universe& dst);

/// "s/1, f/2".
Signature parse_signature(std::string_view text);

/// A term over `sig`; identifiers not followed by '(' are variables.
TermSpec parse_term(std::string_view text, const Signature& sig);
/// "x=0,y=1" against the term's variables; every variable must be bound.
Valuation parse_valuation(std::string_view text, const std::vector<std::string>& variables,
                          const Universe& u);

std::string quote_label(const std::string& label);

std::string print(const MultiAlgebra& m);
std::string print(const PartialMultiAlgebra& m);
std::string print(const PosetSpec& p);
std::string print(const FinitePoset& p);
std::string print(const OrderedAlgebraSpec& a);
std::string print(const OrderedAlgebra& a);
std::string print(const TermSpec& t);
std::string print_morphism(const Morphism& h, const Universe& src, const Universe& dst);
std::string print_morphism(const SetValuedMorphism& h, const Universe& src, const Universe& dst);
std::string print_document(const Document& d);

}  // namespace malg
