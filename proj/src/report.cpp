#include "malg/report.hpp"

#include <cstdio>

namespace malg {

bool Report::ok() const {
  if (!error.empty()) return false;
  for (const auto& c : checks)
    if (!c.verdict) return false;
  return true;
}

void Report::check(std::string name, Verdict v, std::string witness_symbol) {
  checks.push_back({std::move(name), std::move(v), std::move(witness_symbol)});
}

void Report::count(std::string name, std::uint64_t value) { counts.push_back({std::move(name), value}); }

void Report::output(std::string name, std::string text) {
  outputs.push_back({std::move(name), std::move(text)});
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out = "command: " + r.command + "\n";
  for (const auto& c : r.checks) {
    const auto& v = c.verdict;
    out += (v ? "PASS " : "FAIL ") + c.name;
    if (!v) out += " [" + v.condition + "]";
    if (!v.exhaustive) out += " (sampled)";
    if (!v.detail.empty()) out += ": " + v.detail;
    out += "\n";
    const auto& w = v.witness;
    if (!v && (w.symbol || !w.tuple.empty() || !w.elements.empty())) {
      out += "  witness:";
      if (!c.witness_symbol.empty()) out += " symbol " + c.witness_symbol;
      if (!w.tuple.empty()) out += " tuple " + join(w.tuple);
      if (!w.elements.empty()) out += " elements " + join(w.elements);
      out += "\n";
    }
  }
  for (const auto& c : r.counts) out += "count " + c.name + " = " + std::to_string(c.value) + "\n";
  for (const auto& o : r.outputs) {
    out += o.name + ":\n" + o.text;
    if (!o.text.empty() && o.text.back() != '\n') out += "\n";
  }
  if (!r.error.empty()) out += "error: " + r.error + "\n";
  out += std::string("verdict: ") + (r.ok() ? "PASS" : "FAIL") + "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "time: %.3f ms\n", r.elapsed_ms);
  return out + buf;
}

nlohmann::ordered_json render_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = r.command;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    const auto& v = c.verdict;
    ordered_json w;
    w["symbol"] = c.witness_symbol.empty() ? ordered_json(nullptr) : ordered_json(c.witness_symbol);
    w["tuple"] = v.witness.tuple;
    w["elements"] = v.witness.elements;
    j["checks"].push_back({{"name", c.name},
                           {"ok", v.ok},
                           {"condition", v.condition},
                           {"detail", v.detail},
                           {"exhaustive", v.exhaustive},
                           {"witness", w}});
  }
  j["counts"] = ordered_json::object();
  for (const auto& c : r.counts) j["counts"][c.name] = c.value;
  j["outputs"] = ordered_json::object();
  for (const auto& o : r.outputs) j["outputs"][o.name] = o.text;
  j["error"] = r.error.empty() ? ordered_json(nullptr) : ordered_json(r.error);
  j["verdict"] = r.ok() ? "PASS" : "FAIL";
  j["exit_code"] = r.exit_code;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace malg
