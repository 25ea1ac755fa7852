#include "malg/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace malg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::multialgebra: return "multialgebra";
    case Kind::partial: return "partial";
    case Kind::poset: return "poset";
    case Kind::ordered_algebra: return "ordered-algebra";
    case Kind::morphism: return "morphism";
    case Kind::term: return "term";
  }
  return "?";
}

bool MorphismSpec::set_valued() const {
  for (const auto& e : entries)
    if (e.braced) return true;
  return false;
}

Kind kind_of(const Document& d) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MultiAlgebra>) return Kind::multialgebra;
        else if constexpr (std::is_same_v<T, PartialMultiAlgebra>) return Kind::partial;
        else if constexpr (std::is_same_v<T, PosetSpec>) return Kind::poset;
        else if constexpr (std::is_same_v<T, OrderedAlgebraSpec>) return Kind::ordered_algebra;
        else if constexpr (std::is_same_v<T, MorphismSpec>) return Kind::morphism;
        else return Kind::term;
      },
      d);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

bool bare_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.' || c == '\'';
}

enum class Tok { label, lbrace, rbrace, lparen, rparen, comma, eq, slash, leq, arrow, end };

std::string describe(Tok t) {
  switch (t) {
    case Tok::label: return "a label";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::eq: return "'='";
    case Tok::slash: return "'/'";
    case Tok::leq: return "'<='";
    case Tok::arrow: return "'->'";
    case Tok::end: return "end of line";
  }
  return "?";
}

struct Token {
  Tok type = Tok::end;
  std::string text;
  bool quoted = false;
  std::size_t column = 0;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t line) : line_(line) {
    std::size_t i = 0;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
      Token t;
      t.column = i + 1;
      if (i >= text.size() || text[i] == '#') {
        tokens_.push_back(t);
        break;
      }
      const char c = text[i];
      if (bare_char(c)) {
        const auto start = i;
        while (i < text.size() && bare_char(text[i])) ++i;
        t.type = Tok::label;
        t.text = std::string(text.substr(start, i - start));
      } else if (c == '"') {
        ++i;
        while (true) {
          if (i >= text.size()) throw ParseError(line, t.column, "unterminated quoted label");
          if (text[i] == '"') break;
          if (text[i] == '\\' && i + 1 < text.size()) ++i;
          t.text += text[i++];
        }
        ++i;
        t.type = Tok::label;
        t.quoted = true;
      } else if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
        t.type = Tok::leq;
        i += 2;
      } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
        t.type = Tok::arrow;
        i += 2;
      } else {
        switch (c) {
          case '{': t.type = Tok::lbrace; break;
          case '}': t.type = Tok::rbrace; break;
          case '(': t.type = Tok::lparen; break;
          case ')': t.type = Tok::rparen; break;
          case ',': t.type = Tok::comma; break;
          case '=': t.type = Tok::eq; break;
          case '/': t.type = Tok::slash; break;
          default:
            throw ParseError(line, t.column, std::string("unexpected character '") + c + "'");
        }
        ++i;
      }
      tokens_.push_back(std::move(t));
    }
  }

  [[nodiscard]] const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token next() {
    auto t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  Token expect(Tok type) {
    if (peek().type != type) fail(peek(), "expected " + describe(type) + ", found " + describe(peek().type));
    return next();
  }
  bool accept(Tok type) {
    if (peek().type != type) return false;
    next();
    return true;
  }
  void finish() {
    if (peek().type != Tok::end) fail(peek(), "unexpected " + describe(peek().type) + " after end of statement");
  }
  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(line_, t.column, message);
  }
  [[nodiscard]] std::size_t line() const { return line_; }

  /// "{a,b}" as a list of tokens; the empty set is allowed.
  std::vector<Token> braced_labels() {
    expect(Tok::lbrace);
    std::vector<Token> out;
    if (accept(Tok::rbrace)) return out;
    do out.push_back(expect(Tok::label));
    while (accept(Tok::comma));
    expect(Tok::rbrace);
    return out;
  }

  /// "(a,b)" as a list of tokens; "()" is allowed.
  std::vector<Token> paren_labels() {
    expect(Tok::lparen);
    std::vector<Token> out;
    if (accept(Tok::rparen)) return out;
    do out.push_back(expect(Tok::label));
    while (accept(Tok::comma));
    expect(Tok::rparen);
    return out;
  }

 private:
  std::size_t line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct SourceLine {
  std::size_t number;
  std::string_view text;
};

bool blank(std::string_view s) {
  for (char c : s) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    ++number;
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!blank(line)) out.push_back({number, line});
    start = end + 1;
  }
  return out;
}

bool is_directive(const Lexer& lx, std::string_view word) {
  const auto& t = lx.peek();
  if (t.type != Tok::label || t.quoted || t.text != word) return false;
  const auto follow = lx.peek(1).type;
  return follow != Tok::lparen && follow != Tok::leq && follow != Tok::arrow;
}

Signature parse_signature_line(Lexer& lx) {
  lx.next();
  std::vector<Symbol> symbols;
  std::map<std::string, std::size_t> seen;
  if (lx.peek().type != Tok::end) {
    do {
      const auto name = lx.expect(Tok::label);
      lx.expect(Tok::slash);
      const auto arity = lx.expect(Tok::label);
      std::size_t value = 0;
      for (char c : arity.text) {
        if (c < '0' || c > '9') lx.fail(arity, "arity must be a natural number");
        value = value * 10 + static_cast<std::size_t>(c - '0');
        if (value > 64) lx.fail(arity, "arity too large");
      }
      if (seen.count(name.text)) lx.fail(name, "duplicate symbol '" + name.text + "'");
      seen[name.text] = symbols.size();
      symbols.push_back({name.text, value});
    } while (lx.accept(Tok::comma));
  }
  lx.finish();
  return Signature(std::move(symbols));
}

Universe parse_universe_line(Lexer& lx) {
  lx.next();
  const auto open = lx.peek();
  auto labels = lx.braced_labels();
  lx.finish();
  if (labels.empty()) lx.fail(open, "universe must be non-empty");
  std::vector<std::string> names;
  std::map<std::string, bool> seen;
  for (const auto& t : labels) {
    if (seen.count(t.text)) lx.fail(t, "duplicate element '" + t.text + "'");
    seen[t.text] = true;
    names.push_back(t.text);
  }
  return Universe(std::move(names));
}

std::size_t element(const Lexer& lx, const Universe& u, const Token& t) {
  const auto e = u.find(t.text);
  if (!e) lx.fail(t, "unknown element '" + t.text + "'");
  return *e;
}

/// Signature that is either declared up front or grown from usage.
class SymbolTable {
 public:
  void declare(Signature sig) {
    declared_ = true;
    symbols_ = sig.symbols();
  }
  [[nodiscard]] bool declared() const { return declared_; }
  std::size_t resolve(const Lexer& lx, const Token& name, std::size_t arity) {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].name == name.text) {
        if (symbols_[i].arity != arity)
          lx.fail(name, "arity mismatch: '" + name.text + "' takes " + std::to_string(symbols_[i].arity) +
                            " arguments, given " + std::to_string(arity));
        return i;
      }
    if (declared_) lx.fail(name, "unknown symbol '" + name.text + "'");
    symbols_.push_back({name.text, arity});
    return symbols_.size() - 1;
  }
  [[nodiscard]] Signature signature() const { return Signature(symbols_); }

 private:
  bool declared_ = false;
  std::vector<Symbol> symbols_;
};

struct Header {
  Kind kind;
  std::size_t line;
};

Header parse_header(const SourceLine& l) {
  std::istringstream ss{std::string(l.text.substr(0, l.text.find('#')))};
  std::string kind, version, extra;
  ss >> kind >> version;
  const std::map<std::string, Kind> kinds = {
      {"multialgebra", Kind::multialgebra}, {"partial", Kind::partial},
      {"poset", Kind::poset},               {"ordered-algebra", Kind::ordered_algebra},
      {"morphism", Kind::morphism},         {"term", Kind::term}};
  const auto it = kinds.find(kind);
  if (it == kinds.end()) throw ParseError(l.number, 1, "unknown structure kind '" + kind + "'");
  if (version != "v1")
    throw ParseError(l.number, kind.size() + 2,
                     version.empty() ? "missing format version" : "unsupported format version '" + version + "'");
  if (ss >> extra) throw ParseError(l.number, 1, "unexpected text after the header");
  return {it->second, l.number};
}

/// Shared reader for kinds with a signature and universe preamble.
struct Preamble {
  SymbolTable symbols;
  std::optional<Universe> universe;
  std::size_t body_start = 0;
};

Preamble parse_preamble(const std::vector<SourceLine>& lines, bool want_signature) {
  Preamble p;
  std::size_t i = 1;
  for (; i < lines.size(); ++i) {
    Lexer lx(lines[i].text, lines[i].number);
    if (want_signature && is_directive(lx, "signature")) {
      if (p.symbols.declared() || p.universe) lx.fail(lx.peek(), "signature must come once, before the universe");
      p.symbols.declare(parse_signature_line(lx));
    } else if (is_directive(lx, "universe")) {
      if (p.universe) lx.fail(lx.peek(), "universe declared twice");
      p.universe = parse_universe_line(lx);
    } else {
      break;
    }
  }
  if (!p.universe) {
    const auto line = i < lines.size() ? lines[i].number : lines.back().number;
    throw ParseError(line, 1, "missing universe declaration");
  }
  p.body_start = i;
  return p;
}

template <class Value>
struct RawTables {
  // symbol -> tuple index -> (value, line)
  std::vector<std::map<std::size_t, Value>> entries;
};

template <class Value>
std::vector<std::vector<Value>> complete_tables(const Signature& sig, const Universe& u,
                                                RawTables<Value>& raw, std::size_t last_line,
                                                const Caps& caps) {
  raw.entries.resize(sig.size());
  std::vector<std::vector<Value>> out;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    std::vector<Value> table;
    std::size_t k = 0;
    for (const auto& t : Tuples(u.size(), sig[s].arity, caps)) {
      const auto it = raw.entries[s].find(k++);
      if (it == raw.entries[s].end())
        throw ParseError(last_line, 1, "table for '" + sig[s].name + "' is not total: missing " +
                                           sig[s].name + format_tuple(u, t));
      table.push_back(it->second);
    }
    out.push_back(std::move(table));
  }
  return out;
}

std::vector<std::size_t> elements_of(const Lexer& lx, const Universe& u, const std::vector<Token>& ts) {
  std::vector<std::size_t> out;
  for (const auto& t : ts) out.push_back(element(lx, u, t));
  return out;
}

Document parse_set_valued(const std::vector<SourceLine>& lines, bool partial, const Caps& caps) {
  auto pre = parse_preamble(lines, true);
  const auto& u = *pre.universe;
  RawTables<Subset> raw;
  for (std::size_t i = pre.body_start; i < lines.size(); ++i) {
    Lexer lx(lines[i].text, lines[i].number);
    const auto name = lx.expect(Tok::label);
    const auto args = lx.paren_labels();
    const auto s = pre.symbols.resolve(lx, name, args.size());
    const auto tuple = elements_of(lx, u, args);
    lx.expect(Tok::eq);
    const auto open = lx.peek();
    const auto values = lx.braced_labels();
    lx.finish();
    if (values.empty() && !partial) lx.fail(open, "empty value forbidden");
    Subset value(u.size());
    for (const auto& v : values) value.set(element(lx, u, v));
    if (raw.entries.size() <= s) raw.entries.resize(s + 1);
    const auto k = tuple_index(tuple, u.size());
    if (raw.entries[s].count(k)) lx.fail(name, "duplicate definition of " + name.text + format_tuple(u, tuple));
    raw.entries[s][k] = value;
  }
  const auto sig = pre.symbols.signature();
  auto tables = complete_tables(sig, u, raw, lines.back().number, caps);
  if (partial) return PartialMultiAlgebra(sig, u, std::move(tables), caps);
  return MultiAlgebra(sig, u, std::move(tables), caps);
}

void parse_order_line(Lexer& lx, const Universe& u, OrderMatrix& leq) {
  const auto a = lx.expect(Tok::label);
  lx.expect(Tok::leq);
  const auto b = lx.expect(Tok::label);
  lx.finish();
  leq[element(lx, u, a)][element(lx, u, b)] = true;
}

OrderMatrix reflexive(std::size_t n) {
  OrderMatrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return m;
}

Document parse_poset(const std::vector<SourceLine>& lines) {
  auto pre = parse_preamble(lines, false);
  PosetSpec out{*pre.universe, reflexive(pre.universe->size())};
  for (std::size_t i = pre.body_start; i < lines.size(); ++i) {
    Lexer lx(lines[i].text, lines[i].number);
    parse_order_line(lx, out.carrier, out.leq);
  }
  return out;
}

Document parse_ordered(const std::vector<SourceLine>& lines, const Caps& caps) {
  auto pre = parse_preamble(lines, true);
  const auto& u = *pre.universe;
  auto leq = reflexive(u.size());
  RawTables<std::size_t> raw;
  for (std::size_t i = pre.body_start; i < lines.size(); ++i) {
    Lexer lx(lines[i].text, lines[i].number);
    if (lx.peek(1).type == Tok::leq) {
      parse_order_line(lx, u, leq);
      continue;
    }
    const auto name = lx.expect(Tok::label);
    const auto args = lx.paren_labels();
    const auto s = pre.symbols.resolve(lx, name, args.size());
    const auto tuple = elements_of(lx, u, args);
    lx.expect(Tok::eq);
    const auto value = element(lx, u, lx.expect(Tok::label));
    lx.finish();
    if (raw.entries.size() <= s) raw.entries.resize(s + 1);
    const auto k = tuple_index(tuple, u.size());
    if (raw.entries[s].count(k)) lx.fail(name, "duplicate definition of " + name.text + format_tuple(u, tuple));
    raw.entries[s][k] = value;
  }
  auto sig = pre.symbols.signature();
  auto tables = complete_tables(sig, u, raw, lines.back().number, caps);
  return OrderedAlgebraSpec{std::move(sig), u, std::move(leq), std::move(tables)};
}

Document parse_morphism_body(const std::vector<SourceLine>& lines) {
  MorphismSpec out;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Lexer lx(lines[i].text, lines[i].number);
    const auto src = lx.expect(Tok::label);
    lx.expect(Tok::arrow);
    MorphismSpec::Entry e;
    e.source = src.text;
    e.line = lines[i].number;
    if (lx.peek().type == Tok::lbrace) {
      e.braced = true;
      for (const auto& t : lx.braced_labels()) e.targets.push_back(t.text);
    } else {
      e.targets.push_back(lx.expect(Tok::label).text);
    }
    lx.finish();
    if (seen.count(e.source)) lx.fail(src, "element '" + e.source + "' mapped twice");
    seen[e.source] = 1;
    out.entries.push_back(std::move(e));
  }
  return out;
}

Term parse_term_expr(Lexer& lx, SymbolTable& symbols, std::vector<std::string>& variables,
                     const Signature* fixed) {
  const auto name = lx.expect(Tok::label);
  if (lx.peek().type != Tok::lparen) {
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (variables[i] == name.text) return Term::variable(i);
    variables.push_back(name.text);
    return Term::variable(variables.size() - 1);
  }
  lx.next();
  std::vector<Term> args;
  if (!lx.accept(Tok::rparen)) {
    do args.push_back(parse_term_expr(lx, symbols, variables, fixed));
    while (lx.accept(Tok::comma));
    lx.expect(Tok::rparen);
  }
  const auto s = symbols.resolve(lx, name, args.size());
  if (fixed) return Term::apply(*fixed, s, std::move(args));
  return Term::apply(symbols.signature(), s, std::move(args));
}

Document parse_term_file(const std::vector<SourceLine>& lines) {
  SymbolTable symbols;
  std::size_t i = 1;
  if (i < lines.size()) {
    Lexer lx(lines[i].text, lines[i].number);
    if (is_directive(lx, "signature")) {
      symbols.declare(parse_signature_line(lx));
      ++i;
    }
  }
  if (i + 1 != lines.size())
    throw ParseError(i < lines.size() ? lines[i].number : lines.back().number, 1,
                     "a term file holds exactly one term");
  Lexer lx(lines[i].text, lines[i].number);
  std::vector<std::string> variables;
  const auto sig = symbols.declared() ? std::optional<Signature>(symbols.signature()) : std::nullopt;
  auto term = parse_term_expr(lx, symbols, variables, sig ? &*sig : nullptr);
  lx.finish();
  return TermSpec{symbols.signature(), std::move(term), std::move(variables)};
}

}  // namespace

Document parse_document(std::string_view text, const Caps& caps) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty structure file");
  const auto header = parse_header(lines.front());
  try {
    switch (header.kind) {
      case Kind::multialgebra: return parse_set_valued(lines, false, caps);
      case Kind::partial: return parse_set_valued(lines, true, caps);
      case Kind::poset: return parse_poset(lines);
      case Kind::ordered_algebra: return parse_ordered(lines, caps);
      case Kind::morphism: return parse_morphism_body(lines);
      case Kind::term: return parse_term_file(lines);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const CapExceeded&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(header.line, 1, e.what());
  }
  throw ParseError(header.line, 1, "unknown structure kind");
}

Checked<OrderedAlgebra> build_ordered_algebra(const OrderedAlgebraSpec& spec, const Caps& caps) {
  auto poset = validate_poset(spec.carrier, spec.leq);
  if (!poset) return {std::nullopt, poset.verdict};
  auto cert = validate_cabl(*poset, caps);
  if (!cert) return {std::nullopt, cert.verdict};
  return validate_ordered_algebra(*poset.value, *cert.value, spec.signature, spec.tables, caps);
}

namespace {

std::size_t resolve_element(const Universe& u, const std::string& label, std::size_t line,
                            const char* side) {
  const auto e = u.find(label);
  if (!e) throw ParseError(line, 1, std::string("unknown ") + side + " element '" + label + "'");
  return *e;
}

template <class F>
void resolve_entries(const MorphismSpec& spec, const Universe& src, F&& f) {
  std::vector<bool> covered(src.size(), false);
  for (const auto& e : spec.entries) {
    const auto a = resolve_element(src, e.source, e.line, "source");
    covered[a] = true;
    f(a, e);
  }
  for (std::size_t a = 0; a < src.size(); ++a)
    if (!covered[a]) {
      const auto line = spec.entries.empty() ? 1 : spec.entries.back().line;
      throw ParseError(line, 1, "morphism is not total: no image for '" + src.label(a) + "'");
    }
}

}  // namespace

Morphism resolve_morphism(const MorphismSpec& spec, const Universe& src, const Universe& dst) {
  std::vector<std::size_t> map(src.size());
  resolve_entries(spec, src, [&](std::size_t a, const MorphismSpec::Entry& e) {
    if (e.braced)
      throw ParseError(e.line, 1, "set-valued image for '" + e.source + "' in an ordinary morphism");
    map[a] = resolve_element(dst, e.targets.front(), e.line, "target");
  });
  return Morphism(src.size(), dst.size(), std::move(map));
}

SetValuedMorphism resolve_set_morphism(const MorphismSpec& spec, const Universe& src,
                                       const Universe& dst) {
  std::vector<Subset> images(src.size(), Subset(dst.size()));
  resolve_entries(spec, src, [&](std::size_t a, const MorphismSpec::Entry& e) {
    if (e.targets.empty()) throw ParseError(e.line, 1, "empty value forbidden");
    for (const auto& t : e.targets) images[a].set(resolve_element(dst, t, e.line, "target"));
  });
  return SetValuedMorphism(dst.size(), std::move(images));
}

Signature parse_signature(std::string_view text) {
  const std::string line = "signature " + std::string(text);
  Lexer lx(line, 1);
  return parse_signature_line(lx);
}

TermSpec parse_term(std::string_view text, const Signature& sig) {
  if (text.find('\n') != std::string_view::npos) throw ParseError(1, 1, "a term fits on one line");
  Lexer lx(text, 1);
  SymbolTable symbols;
  symbols.declare(sig);
  std::vector<std::string> variables;
  auto term = parse_term_expr(lx, symbols, variables, &sig);
  lx.finish();
  return TermSpec{sig, std::move(term), std::move(variables)};
}

Valuation parse_valuation(std::string_view text, const std::vector<std::string>& variables,
                          const Universe& u) {
  std::vector<std::optional<std::size_t>> bound(variables.size());
  Lexer lx(text, 1);
  if (lx.peek().type != Tok::end) {
    do {
      const auto name = lx.expect(Tok::label);
      lx.expect(Tok::eq);
      const auto value = lx.expect(Tok::label);
      std::size_t v = variables.size();
      for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name.text) v = i;
      if (v == variables.size()) lx.fail(name, "'" + name.text + "' does not occur in the term");
      if (bound[v]) lx.fail(name, "variable '" + name.text + "' bound twice");
      bound[v] = element(lx, u, value);
    } while (lx.accept(Tok::comma));
  }
  lx.finish();
  Valuation out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (!bound[i]) throw ParseError(1, 1, "unbound variable '" + variables[i] + "'");
    out.push_back(*bound[i]);
  }
  return out;
}

// --- printing ----------------------------------------------------------------------------

std::string quote_label(const std::string& label) {
  bool bare = !label.empty();
  for (char c : label) bare = bare && bare_char(c);
  if (bare) return label;
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

namespace {

std::string braced(const Universe& u, const Subset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t e) {
    if (!first) out += ",";
    out += quote_label(u.label(e));
    first = false;
  });
  return out + "}";
}

std::string tuple_text(const Universe& u, std::span<const std::size_t> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += quote_label(u.label(t[i]));
  }
  return out + ")";
}

std::string signature_line(const Signature& sig) {
  std::string out = "signature";
  for (std::size_t s = 0; s < sig.size(); ++s)
    out += (s ? ", " : " ") + quote_label(sig[s].name) + "/" + std::to_string(sig[s].arity);
  return out + "\n";
}

std::string universe_line(const Universe& u) {
  return "universe " + braced(u, Subset::full(u.size())) + "\n";
}

std::string order_lines(const Universe& u, const OrderMatrix& leq) {
  std::string out;
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < u.size(); ++b)
      if (a != b && leq[a][b]) out += quote_label(u.label(a)) + " <= " + quote_label(u.label(b)) + "\n";
  return out;
}

template <class M>
std::string print_set_valued(const M& m, const char* kind) {
  std::string out = std::string(kind) + " v1\n" + signature_line(m.signature()) + universe_line(m.universe());
  const auto& sig = m.signature();
  for (std::size_t s = 0; s < sig.size(); ++s)
    for (const auto& t : Tuples(m.size(), sig[s].arity))
      out += quote_label(sig[s].name) + tuple_text(m.universe(), t) + " = " +
             braced(m.universe(), m.apply(s, t)) + "\n";
  return out;
}

std::string print_ordered(const Signature& sig, const Universe& u, const OrderMatrix& leq,
                          const std::vector<OrderedAlgebra::Table>& tables) {
  std::string out = "ordered-algebra v1\n" + signature_line(sig) + universe_line(u) + order_lines(u, leq);
  for (std::size_t s = 0; s < sig.size(); ++s) {
    std::size_t k = 0;
    for (const auto& t : Tuples(u.size(), sig[s].arity))
      out += quote_label(sig[s].name) + tuple_text(u, t) + " = " + quote_label(u.label(tables[s][k++])) + "\n";
  }
  return out;
}

}  // namespace

std::string print(const MultiAlgebra& m) { return print_set_valued(m, "multialgebra"); }
std::string print(const PartialMultiAlgebra& m) { return print_set_valued(m, "partial"); }

std::string print(const PosetSpec& p) {
  return "poset v1\n" + universe_line(p.carrier) + order_lines(p.carrier, p.leq);
}

std::string print(const FinitePoset& p) { return print(PosetSpec{p.carrier(), p.matrix()}); }

std::string print(const OrderedAlgebraSpec& a) {
  return print_ordered(a.signature, a.carrier, a.leq, a.tables);
}

std::string print(const OrderedAlgebra& a) {
  std::vector<OrderedAlgebra::Table> tables;
  for (std::size_t s = 0; s < a.signature().size(); ++s) tables.push_back(a.table(s));
  return print_ordered(a.signature(), a.carrier(), a.poset().matrix(), tables);
}

std::string print(const TermSpec& t) {
  std::vector<std::string> names;
  for (const auto& v : t.variables) names.push_back(quote_label(v));
  return "term v1\n" + signature_line(t.signature) + format_term(t.signature, t.term, names) + "\n";
}

std::string print_morphism(const Morphism& h, const Universe& src, const Universe& dst) {
  std::string out = "morphism v1\n";
  for (std::size_t a = 0; a < src.size(); ++a)
    out += quote_label(src.label(a)) + " -> " + quote_label(dst.label(h(a))) + "\n";
  return out;
}

std::string print_morphism(const SetValuedMorphism& h, const Universe& src, const Universe& dst) {
  std::string out = "morphism v1\n";
  for (std::size_t a = 0; a < src.size(); ++a)
    out += quote_label(src.label(a)) + " -> " + braced(dst, h(a)) + "\n";
  return out;
}

std::string print_document(const Document& d) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MorphismSpec>) {
          std::string out = "morphism v1\n";
          for (const auto& e : v.entries) {
            out += quote_label(e.source) + " -> ";
            if (e.braced) {
              out += "{";
              for (std::size_t i = 0; i < e.targets.size(); ++i)
                out += (i ? "," : "") + quote_label(e.targets[i]);
              out += "}";
            } else {
              out += quote_label(e.targets.front());
            }
            out += "\n";
          }
          return out;
        } else {
          return print(v);
        }
      },
      d);
}

}  // namespace malg
