#include "malg/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>

#include "malg/demo.hpp"
#include "malg/functors.hpp"
#include "malg/io.hpp"
#include "malg/monad.hpp"
#include "malg/random.hpp"
#include "malg/report.hpp"
#include "malg/variants.hpp"

namespace malg::cli {

namespace {

struct Context {
  Caps caps;
  std::uint64_t seed = 1;
  Report report;
};

std::string symbol_of(const Signature& sig, const Verdict& v) {
  if (v.witness.symbol && *v.witness.symbol < sig.size()) return sig[*v.witness.symbol].name;
  return {};
}

/// Input structure failed validation; the verdict is already in the report.
struct InvalidInput {};

Document load(const std::string& path, const Caps& caps) { return parse_document(read_file(path), caps); }

[[noreturn]] void wrong_kind(const std::string& path, Kind got, const std::string& want) {
  const auto name = to_string(got);
  const bool vowel = std::string("aeiou").find(name.front()) != std::string::npos;
  throw Error("'" + path + "' holds " + (vowel ? "an " : "a ") + name + ", expected " + want);
}

MultiAlgebra load_multi(const std::string& path, const Caps& caps) {
  auto d = load(path, caps);
  if (auto* m = std::get_if<MultiAlgebra>(&d)) return *m;
  wrong_kind(path, kind_of(d), "multialgebra");
}

PartialMultiAlgebra load_partial(const std::string& path, const Caps& caps) {
  auto d = load(path, caps);
  if (auto* m = std::get_if<MultiAlgebra>(&d)) return PartialMultiAlgebra(*m);
  if (auto* m = std::get_if<PartialMultiAlgebra>(&d)) return *m;
  wrong_kind(path, kind_of(d), "multialgebra or partial");
}

OrderedAlgebra load_ordered(const std::string& path, Context& ctx) {
  auto d = load(path, ctx.caps);
  auto* spec = std::get_if<OrderedAlgebraSpec>(&d);
  if (!spec) wrong_kind(path, kind_of(d), "ordered-algebra");
  auto built = build_ordered_algebra(*spec, ctx.caps);
  if (!built) {
    ctx.report.check("input " + path, built.verdict, symbol_of(spec->signature, built.verdict));
    throw InvalidInput{};
  }
  return *built.value;
}

MorphismSpec load_morphism(const std::string& path, const Caps& caps) {
  auto d = load(path, caps);
  if (auto* m = std::get_if<MorphismSpec>(&d)) return *m;
  wrong_kind(path, kind_of(d), "morphism");
}

std::string map_text(const Morphism& h, const Universe& src, const Universe& dst) {
  std::string out = "[";
  for (std::size_t a = 0; a < h.source_size(); ++a)
    out += (a ? ", " : "") + quote_label(src.label(a)) + " -> " + quote_label(dst.label(h(a)));
  return out + "]";
}

std::string list_text(const std::vector<Morphism>& ms, const Universe& src, const Universe& dst) {
  std::string out;
  for (const auto& m : ms) out += map_text(m, src, dst) + "\n";
  return out;
}

// --- commands ---------------------------------------------------------------------------

void cmd_validate(Context& ctx, const std::string& path) {
  auto d = load(path, ctx.caps);
  auto& r = ctx.report;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MultiAlgebra> || std::is_same_v<T, PartialMultiAlgebra>) {
          r.check("well-formed", Verdict::pass());
          r.count("elements", v.size());
          r.count("symbols", v.signature().size());
        } else if constexpr (std::is_same_v<T, PosetSpec>) {
          auto p = validate_poset(v.carrier, v.leq);
          r.check("poset", p.verdict);
          if (!p) return;
          auto c = validate_cabl(*p, ctx.caps);
          r.check("cabl", c.verdict);
          if (c) r.count("atoms", c->atoms.size());
        } else if constexpr (std::is_same_v<T, OrderedAlgebraSpec>) {
          auto p = validate_poset(v.carrier, v.leq);
          r.check("poset", p.verdict);
          if (!p) return;
          auto c = validate_cabl(*p, ctx.caps);
          r.check("cabl", c.verdict);
          if (!c) return;
          auto a = validate_ordered_algebra(*p.value, *c.value, v.signature, v.tables, ctx.caps);
          r.check("atom-generation", a.verdict, symbol_of(v.signature, a.verdict));
          if (!a) return;
          auto m = check_monotone(*a, ctx.caps);
          r.check("monotone", m, symbol_of(v.signature, m));
          r.count("atoms", a->atom_count());
        } else if constexpr (std::is_same_v<T, MorphismSpec>) {
          r.check("well-formed", Verdict::pass());
          r.count("entries", v.entries.size());
        } else {
          r.check("well-formed", Verdict::pass());
          r.count("depth", v.term.depth());
        }
      },
      d);
}

void cmd_functor(Context& ctx, const std::string& which, const std::string& path) {
  auto& r = ctx.report;
  if (which == "p") {
    const auto p = apply_P(load_multi(path, ctx.caps), ctx.caps);
    std::vector<OrderedAlgebra::Table> tables;
    for (std::size_t s = 0; s < p.signature().size(); ++s) tables.push_back(p.table(s));
    const auto v = validate_ordered_algebra(p.poset(), p.certificate(), p.signature(), tables, ctx.caps);
    r.check("ordered-algebra", v.verdict, symbol_of(p.signature(), v.verdict));
    r.count("elements", p.size());
    r.output("result", print(p));
  } else if (which == "a") {
    const auto b = load_ordered(path, ctx);
    const auto a = apply_A(b);
    r.check("multialgebra", Verdict::pass());
    r.count("elements", a.size());
    r.output("result", print(a));
  } else if (which == "ptilde") {
    const auto t = apply_Ptilde(load_multi(path, ctx.caps), ctx.caps);
    r.check("multialgebra", Verdict::pass());
    r.count("elements", t.size());
    r.output("result", print(t));
  } else {
    throw Error("unknown functor '" + which + "', expected p, a or ptilde");
  }
}

void cmd_check_hom(Context& ctx, const std::string& contract, bool relaxed, const std::string& map_path,
                   const std::string& src_path, const std::string& dst_path) {
  auto& r = ctx.report;
  const auto spec = load_morphism(map_path, ctx.caps);
  if (contract == "hom" || contract == "full") {
    const auto src = load_multi(src_path, ctx.caps);
    const auto dst = load_multi(dst_path, ctx.caps);
    const auto h = resolve_morphism(spec, src.universe(), dst.universe());
    const auto v = contract == "hom" ? check_hom(h, src, dst, ctx.caps) : check_full_hom(h, src, dst, ctx.caps);
    r.check(contract, v, symbol_of(src.signature(), v));
  } else if (contract == "ordered") {
    const auto src = load_ordered(src_path, ctx);
    const auto dst = load_ordered(dst_path, ctx);
    const auto h = resolve_morphism(spec, src.carrier(), dst.carrier());
    OrderedHomOptions opts;
    opts.require_atoms = !relaxed;
    const auto v = check_ordered_hom(h, src, dst, opts, ctx.caps);
    r.check(relaxed ? "ordered-relaxed" : "ordered", v, symbol_of(src.signature(), v));
  } else if (contract == "partial") {
    const auto src = load_partial(src_path, ctx.caps);
    const auto dst = load_partial(dst_path, ctx.caps);
    const auto h = resolve_morphism(spec, src.universe(), dst.universe());
    const auto v = check_partial_hom(h, src, dst, ctx.caps);
    r.check("partial", v, symbol_of(src.signature(), v));
  } else if (contract == "mm") {
    const auto src = load_multi(src_path, ctx.caps);
    const auto dst = load_multi(dst_path, ctx.caps);
    const auto h = resolve_set_morphism(spec, src.universe(), dst.universe());
    const auto v = check_mm_hom(h, src, dst, ctx.caps);
    r.check("mm", v, symbol_of(src.signature(), v));
  } else {
    throw Error("unknown contract '" + contract + "'");
  }
}

// a multialgebra stands for P=(m), an ordered algebra for itself without the order
PlainAlgebra load_plain(const std::string& path, Context& ctx) {
  auto d = load(path, ctx.caps);
  if (auto* m = std::get_if<MultiAlgebra>(&d)) return apply_P_eq(*m, ctx.caps);
  if (std::holds_alternative<OrderedAlgebraSpec>(d)) return forget_order(load_ordered(path, ctx));
  wrong_kind(path, kind_of(d), "multialgebra or ordered-algebra");
}

void cmd_enumerate(Context& ctx, const std::string& contract, const std::string& mode,
                   const std::string& src_path, const std::string& dst_path) {
  auto& r = ctx.report;
  if (mode != "hom" && mode != "full" && mode != "iso") throw Error("unknown mode '" + mode + "'");
  if (contract == "hom" || contract == "multi") {
    const auto src = load_multi(src_path, ctx.caps);
    const auto dst = load_multi(dst_path, ctx.caps);
    const auto m = mode == "hom" ? HomMode::hom : mode == "full" ? HomMode::full : HomMode::iso;
    const auto homs = enumerate_homs(src, dst, m, ctx.caps);
    r.check("enumerated", Verdict::pass());
    r.count("candidates", *checked_pow(dst.size(), src.size(), UINT64_MAX));
    r.count("members", homs.size());
    r.output("members", list_text(homs, src.universe(), dst.universe()));
  } else if (contract == "ordered") {
    if (mode == "full") throw Error("mode full applies to multialgebras only");
    const auto src = load_ordered(src_path, ctx);
    const auto dst = load_ordered(dst_path, ctx);
    const auto homs = enumerate_ordered_homs(src, dst, mode == "iso", OrderedSearch::atoms_first, {}, ctx.caps);
    r.check("enumerated", Verdict::pass());
    r.count("members", homs.size());
    r.output("members", list_text(homs.members, src.carrier(), dst.carrier()));
  } else if (contract == "plain") {
    if (mode != "iso") throw Error("contract plain supports mode iso only");
    const auto src = load_plain(src_path, ctx);
    const auto dst = load_plain(dst_path, ctx);
    const auto isos = enumerate_plain_isos(src, dst, ctx.caps);
    r.check("enumerated", Verdict::pass());
    r.count("members", isos.size());
    r.output("members", list_text(isos, src.universe, dst.universe));
  } else {
    throw Error("unknown contract '" + contract + "'");
  }
}

void cmd_roundtrip(Context& ctx, const std::string& path) {
  auto& r = ctx.report;
  auto d = load(path, ctx.caps);
  if (auto* m = std::get_if<MultiAlgebra>(&d)) {
    const auto unit = unit_iso(*m, ctx.caps);
    r.check("unit", unit.verdict, symbol_of(m->signature(), unit.verdict));
    const auto p = apply_P(*m, ctx.caps);
    const auto counit = counit_iso(p, ctx.caps);
    r.check("counit", counit.verdict, symbol_of(m->signature(), counit.verdict));
    r.output("unit", map_text(unit.morphism, m->universe(), apply_A(p).universe()));
  } else if (std::holds_alternative<OrderedAlgebraSpec>(d)) {
    const auto b = load_ordered(path, ctx);
    const auto counit = counit_iso(b, ctx.caps);
    r.check("counit", counit.verdict, symbol_of(b.signature(), counit.verdict));
    const auto unit = unit_iso(apply_A(b), ctx.caps);
    r.check("unit", unit.verdict, symbol_of(b.signature(), unit.verdict));
    r.output("counit", map_text(counit.morphism, b.carrier(), apply_P(apply_A(b), ctx.caps).carrier()));
  } else {
    wrong_kind(path, kind_of(d), "multialgebra or ordered-algebra");
  }
}

void cmd_adjunction(Context& ctx, const std::string& b_path, const std::string& a_path) {
  auto& r = ctx.report;
  const auto b = load_ordered(b_path, ctx);
  const auto a = load_multi(a_path, ctx.caps);
  const Adjunction adj(b, a, ctx.caps);
  const auto left = adj.left_homs();
  const auto right = adj.right_homs();
  r.count("hom-atoms-to-multi", left.size());
  r.count("hom-ordered-to-powerset", right.size());
  r.check("bijection", adj.check_bijection());

  const auto endo_a = enumerate_homs(a, a, HomMode::hom, ctx.caps);
  const auto endo_b = enumerate_ordered_homs(b, b, false, OrderedSearch::atoms_first, {}, ctx.caps);
  std::uint64_t squares = 0;
  Verdict nat;
  for (const auto& h : endo_a) {
    for (const auto& hp : endo_b.members) {
      ++squares;
      nat = check_naturality(adj, adj, h, hp, ctx.caps);
      if (!nat) break;
    }
    if (!nat) break;
  }
  r.check("naturality", nat);
  r.count("squares", squares);
}

void cmd_monad(Context& ctx, const std::string& path) {
  auto& r = ctx.report;
  const auto m = load_multi(path, ctx.caps);
  MonadLawOptions opts;
  opts.seed = ctx.seed;
  const auto laws = check_monad_laws(m, ctx.caps, opts);
  r.check("monad-laws", laws.verdict);
  r.count("associativity-points", laws.associativity_points);
  r.count("unit-points", laws.unit_points);
  const auto homs = enumerate_homs(m, m, HomMode::hom, ctx.caps);
  Verdict nat;
  for (const auto& h : homs) {
    nat = check_naturality_eta_eps(h, m, m, ctx.caps);
    if (!nat) break;
  }
  r.check("eta-eps-naturality", nat);
  r.count("endomorphisms", homs.size());
}

void cmd_demo(Context& ctx, const std::string& name) {
  if (name != "counterexample") throw Error("unknown demo '" + name + "'");
  auto& r = ctx.report;
  const auto res = analyse_counterexample(ctx.caps);
  const auto a = counterexample_A();
  const auto b = counterexample_B();
  r.output("A", print(a));
  r.output("B", print(b));
  r.count("maps-A-to-B", res.maps_examined);
  r.count("bijections-A-to-B", res.bijections_examined);
  r.count("multialgebra-isos", res.multialgebra_isos.size());
  r.check("no multialgebra isomorphism A -> B", res.no_multialgebra_iso());

  const auto pa = apply_P(a, ctx.caps);
  const auto pb = apply_P(b, ctx.caps);
  r.count("plain-isos", res.plain_isos.size());
  r.output("plain-isos", list_text(res.plain_isos, pa.carrier(), pb.carrier()));
  r.output("h", map_text(counterexample_h(), pa.carrier(), pb.carrier()));
  r.check("plain isomorphism P=(A) -> P=(B) exists, h among them", res.plain_iso_exists());

  r.count("maps-P(A)-to-P(B)", res.ordered_maps_examined);
  r.count("ordered-isos", res.ordered_isos.size());
  r.check("no (Sigma,<=)-isomorphism P(A) -> P(B)", res.no_ordered_iso());
  r.output("h-as-ordered-hom", res.h_ordered ? "PASS" : "FAIL [" + res.h_ordered.condition + "] " + res.h_ordered.detail);
}

void cmd_eval(Context& ctx, const std::string& term_text, const std::string& val_text,
              const std::string& path) {
  auto& r = ctx.report;
  auto d = load(path, ctx.caps);
  if (auto* m = std::get_if<MultiAlgebra>(&d)) {
    const auto t = parse_term(term_text, m->signature());
    const auto val = parse_valuation(val_text, t.variables, m->universe());
    const auto nd = eval_term_nd(*m, t.term, val);
    r.output("value", format_subset(m->universe(), nd));
    if (m->size() <= ctx.caps.max_powerset_universe) {
      const auto p = apply_P(*m, ctx.caps);
      Valuation lifted;
      for (auto e : val) lifted.push_back((std::size_t{1} << e) - 1);
      const auto ord = eval_term_ord(p, t.term, lifted);
      const auto expected = powerset_index(nd);
      r.check("agrees with P", ord == expected
                                   ? Verdict::pass()
                                   : Verdict::fail("bridge", "P gives " + p.carrier().label(ord)));
    }
  } else if (std::holds_alternative<OrderedAlgebraSpec>(d)) {
    const auto b = load_ordered(path, ctx);
    const auto t = parse_term(term_text, b.signature());
    const auto val = parse_valuation(val_text, t.variables, b.carrier());
    r.output("value", b.carrier().label(eval_term_ord(b, t.term, val)));
    r.check("evaluated", Verdict::pass());
  } else {
    wrong_kind(path, kind_of(d), "multialgebra or ordered-algebra");
  }
}

void cmd_generate(Context& ctx, const std::string& kind, std::size_t size, const std::string& sig_text) {
  auto& r = ctx.report;
  if (size == 0) throw Error("size must be at least 1");
  const auto sig = parse_signature(sig_text);
  Generator g(ctx.seed);
  if (kind == "multialgebra") {
    r.output("result", print(g.multialgebra(sig, size)));
  } else if (kind == "partial") {
    r.output("result", print(g.partial(sig, size)));
  } else if (kind == "ordered-algebra") {
    if (size > ctx.caps.max_powerset_universe) throw CapExceeded("too many atoms");
    r.output("result", print(g.ordered_algebra(sig, size)));
  } else {
    throw Error("unknown kind '" + kind + "'");
  }
  r.check("generated", Verdict::pass());
}

std::string echo(const std::vector<std::string>& args) {
  std::string out = "malg";
  for (const auto& a : args) out += " " + a;
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite multialgebras and their ordered counterparts", "malg"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx;
  if (const char* env = std::getenv("MALG_CAP")) {
    try {
      ctx.caps.max_maps = ctx.caps.max_tuples = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: MALG_CAP must be a number\n";
      return usage;
    }
  }
  std::optional<std::uint64_t> cap_flag;
  bool json = false;
  app.add_option("--cap", cap_flag, "limit on candidate maps and tuples (default MALG_CAP or 1000000)");
  app.add_option("--seed", ctx.seed, "seed for sampling and generation");
  app.add_flag("--json", json, "machine-readable report");

  std::function<void()> action;
  std::string s1, s2, s3, contract, mode = "hom", term, val, kind = "multialgebra", sig = "s/1";
  std::size_t size = 2;
  bool relaxed = false;

  auto* validate = app.add_subcommand("validate", "check a structure file");
  validate->add_option("file", s1)->required();
  validate->callback([&] { action = [&] { cmd_validate(ctx, s1); }; });

  auto* functor = app.add_subcommand("functor", "apply P, A or P~ to a structure");
  functor->add_option("which", s1, "p, a or ptilde")->required();
  functor->add_option("file", s2)->required();
  functor->callback([&] { action = [&] { cmd_functor(ctx, s1, s2); }; });

  auto* check = app.add_subcommand("check-hom", "check one map against a contract");
  check->add_option("--contract", contract, "hom, full, ordered, partial or mm")->required();
  check->add_flag("--relaxed", relaxed, "ordered: do not require atoms to map to atoms");
  check->add_option("map", s1)->required();
  check->add_option("src", s2)->required();
  check->add_option("dst", s3)->required();
  check->callback([&] { action = [&] { cmd_check_hom(ctx, contract, relaxed, s1, s2, s3); }; });

  auto* enumerate = app.add_subcommand("enumerate", "list all morphisms under a contract");
  enumerate->add_option("--contract", contract, "hom (multialgebra), ordered or plain")->default_val("hom");
  enumerate->add_option("--mode", mode, "hom, full or iso")->default_val("hom");
  enumerate->add_option("src", s1)->required();
  enumerate->add_option("dst", s2)->required();
  enumerate->callback([&] { action = [&] { cmd_enumerate(ctx, contract, mode, s1, s2); }; });

  auto* roundtrip = app.add_subcommand("roundtrip", "unit and counit isomorphisms");
  roundtrip->add_option("file", s1)->required();
  roundtrip->callback([&] { action = [&] { cmd_roundtrip(ctx, s1); }; });

  auto* adjunction = app.add_subcommand("adjunction", "hom-set bijection and naturality");
  adjunction->add_option("ordered", s1, "ordered algebra B")->required();
  adjunction->add_option("multi", s2, "multialgebra A")->required();
  adjunction->callback([&] { action = [&] { cmd_adjunction(ctx, s1, s2); }; });

  auto* monad = app.add_subcommand("monad", "monad laws for P~");
  monad->add_option("file", s1)->required();
  monad->callback([&] { action = [&] { cmd_monad(ctx, s1); }; });

  auto* demo = app.add_subcommand("demo", "packaged demonstrations");
  demo->add_option("name", s1, "counterexample")->required();
  demo->callback([&] { action = [&] { cmd_demo(ctx, s1); }; });

  auto* eval = app.add_subcommand("eval", "evaluate a term");
  eval->add_option("--term", term)->required();
  eval->add_option("--val", val, "bindings such as x=0,y=1");
  eval->add_option("file", s1)->required();
  eval->callback([&] { action = [&] { cmd_eval(ctx, term, val, s1); }; });

  auto* generate = app.add_subcommand("generate", "print a random structure");
  generate->add_option("--kind", kind, "multialgebra, partial or ordered-algebra")->default_val("multialgebra");
  generate->add_option("--size", size, "elements, or atoms for ordered algebras")->default_val(2);
  generate->add_option("--signature", sig, "such as \"s/1, f/2\"")->default_val("s/1");
  generate->callback([&] { action = [&] { cmd_generate(ctx, kind, size, sig); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, err, err);
    return code == 0 ? pass : usage;
  }
  if (cap_flag) ctx.caps.max_maps = ctx.caps.max_tuples = *cap_flag;

  auto& report = ctx.report;
  report.command = echo(args);
  const auto start = std::chrono::steady_clock::now();
  try {
    action();
    report.exit_code = report.ok() ? pass : fail;
  } catch (const InvalidInput&) {
    report.exit_code = fail;
  } catch (const CapExceeded& e) {
    report.error = std::string("cap exceeded: ") + e.what();
    report.exit_code = cap;
  } catch (const std::exception& e) {
    report.error = e.what();
    report.exit_code = usage;
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (json)
    out << render_json(report).dump(2) << "\n";
  else
    out << render_text(report);
  return report.exit_code;
}

}  // namespace malg::cli
