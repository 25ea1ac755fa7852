#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "malg/cli.hpp"
#include "malg/io.hpp"
#include "malg/monad.hpp"
#include "malg/random.hpp"

using namespace malg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ex(const std::string& name) { return std::string(MALG_EXAMPLES_DIR) + "/" + name; }

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("malg-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

bool has_line(const std::string& out, const std::string& line) {
  std::istringstream in(out);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("counterexample demo") {
    const auto r = run({"demo", "counterexample"});
    CHECK(r.code == cli::pass);
    CHECK(has_line(r.out, "PASS no multialgebra isomorphism A -> B"));
    CHECK(has_line(r.out, "verdict: PASS"));
  }

  TEST_CASE("validate verdicts") {
    CHECK(run({"validate", ex("P2.poset")}).code == cli::pass);
    const auto r = run({"validate", ex("antichain.poset")});
    CHECK(r.code == cli::fail);
    CHECK(r.out.find("FAIL cabl [suprema]") != std::string::npos);
    CHECK(run({"validate", ex("PA.oalg")}).code == cli::pass);
    CHECK(run({"validate", ex("A.malg")}).code == cli::pass);
  }

  TEST_CASE("usage errors and caps") {
    CHECK(run({}).code == cli::usage);
    CHECK(run({"bogus"}).code == cli::usage);
    CHECK(run({"validate", ex("missing.malg")}).code == cli::usage);
    CHECK(run({"check-hom", "--contract", "nonsense", ex("id2.map"), ex("A.malg"), ex("B.malg")}).code == cli::usage);
    Scratch s;
    const auto bad = s.write("bad.malg", "multialgebra v1\nuniverse {0,1}\ns(0) = {}\ns(1) = {1}\n");
    const auto r = run({"validate", bad});
    CHECK(r.code == cli::usage);
    CHECK(r.out.find("error: line 3, column 8: empty value forbidden") != std::string::npos);
    CHECK(run({"--cap", "3", "enumerate", ex("A.malg"), ex("B.malg")}).code == cli::cap);
  }

  TEST_CASE("json reports") {
    const auto r = run({"--json", "validate", ex("antichain.poset")});
    CHECK(r.code == cli::fail);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "FAIL");
    CHECK(j["exit_code"] == 1);
    CHECK(j["checks"][1]["condition"] == "suprema");
    CHECK(j["checks"][1]["witness"]["elements"] == nlohmann::json::array({0, 1}));
    const auto d = nlohmann::json::parse(run({"--json", "demo", "counterexample"}).out);
    CHECK(d["verdict"] == "PASS");
    CHECK(d["checks"].size() == 3);
  }

  TEST_CASE("check-hom agrees with the library") {
    Scratch s;
    Generator g(137);
    for (int round = 0; round < 40; ++round) {
      const auto sig = fixtures::unary_binary();
      const auto a = g.multialgebra(sig, 1 + g.below(3));
      const auto b = g.multialgebra(sig, 1 + g.below(3));
      const auto h = g.morphism(a.size(), b.size());
      const auto fa = s.write("a.malg", print(a));
      const auto fb = s.write("b.malg", print(b));
      const auto fh = s.write("h.map", print_morphism(h, a.universe(), b.universe()));
      CHECK((run({"check-hom", "--contract", "hom", fh, fa, fb}).code == cli::pass) == check_hom(h, a, b).ok);
      CHECK((run({"check-hom", "--contract", "full", fh, fa, fb}).code == cli::pass) ==
            check_full_hom(h, a, b).ok);
      const auto e = nlohmann::json::parse(run({"--json", "enumerate", "--mode", "hom", fa, fb}).out);
      CHECK(e["counts"]["members"] == hom_set(a, b, HomMode::hom).size());
    }
  }

  TEST_CASE("ordered contract on the counterexample map") {
    Scratch s;
    const auto pa = s.write("pa.oalg", print(apply_P(counterexample_A())));
    const auto pb = s.write("pb.oalg", print(apply_P(counterexample_B())));
    const auto u = apply_P(counterexample_A()).carrier();
    const auto fh = s.write("h.map", print_morphism(counterexample_h(), u, u));
    const auto r = run({"check-hom", "--contract", "ordered", fh, pa, pb});
    CHECK(r.code == cli::fail);
    CHECK(r.out.find("[atoms]") != std::string::npos);
    const auto e = run({"enumerate", "--contract", "plain", "--mode", "iso", pa, pb});
    CHECK(e.code == cli::pass);
    CHECK(has_line(e.out, "count members = 2"));
    CHECK(has_line(run({"enumerate", "--contract", "plain", "--mode", "iso", ex("A.malg"), ex("B.malg")}).out,
                   "count members = 2"));
    CHECK(has_line(run({"enumerate", "--contract", "ordered", "--mode", "iso", pa, pb}).out, "count members = 0"));
  }

  TEST_CASE("functor, roundtrip, adjunction and monad commands") {
    Scratch s;
    const auto r = run({"functor", "p", ex("A.malg")});
    REQUIRE(r.code == cli::pass);
    const auto start = r.out.find("ordered-algebra v1");
    const auto stop = r.out.find("verdict:");
    REQUIRE(start != std::string::npos);
    const auto produced = s.write("p.oalg", r.out.substr(start, stop - start));
    CHECK(read_file(produced) == read_file(ex("PA.oalg")));
    CHECK(run({"functor", "ptilde", ex("A.malg")}).code == cli::pass);
    CHECK(run({"functor", "a", ex("PA.oalg")}).code == cli::pass);
    CHECK(run({"roundtrip", ex("A.malg")}).code == cli::pass);
    CHECK(run({"roundtrip", ex("PA.oalg")}).code == cli::pass);
    CHECK(run({"adjunction", ex("PA.oalg"), ex("B.malg")}).code == cli::pass);
    const auto m = run({"monad", ex("B.malg")});
    CHECK(m.code == (check_monad_laws(counterexample_B()).verdict ? cli::pass : cli::fail));
  }

  TEST_CASE("eval") {
    const auto r = run({"eval", "--term", "s(s(x))", "--val", "x=0", ex("B.malg")});
    CHECK(r.code == cli::pass);
    CHECK(r.out.find("{0,1}") != std::string::npos);
    CHECK(run({"eval", "--term", "s(y)", "--val", "x=0", ex("B.malg")}).code == cli::usage);
  }

  TEST_CASE("generate emits parseable structures") {
    Scratch s;
    for (const std::string kind : {"multialgebra", "partial", "ordered-algebra"}) {
      const auto r = run({"--seed", "9", "generate", "--kind", kind, "--size", "2", "--signature", "s/1, f/2"});
      REQUIRE(r.code == cli::pass);
      const auto start = r.out.find(kind + " v1");
      REQUIRE(start != std::string::npos);
      const auto f = s.write("g.txt", r.out.substr(start, r.out.find("verdict:") - start));
      CHECK(run({"validate", f}).code == cli::pass);
      CHECK(run({"--seed", "9", "generate", "--kind", kind, "--size", "2", "--signature", "s/1, f/2"}).out.substr(start, 40) ==
            r.out.substr(start, 40));
    }
  }
}
