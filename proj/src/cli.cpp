#include "wbk/cli.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "wbk/ideals.hpp"
#include "wbk/io.hpp"
#include "wbk/nilpotency.hpp"

namespace wbk {

using nlohmann::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "info";
}

int Report::exit_code() const {
  if (usage_error) return 2;
  return status == Status::Fail ? 1 : 0;
}

namespace {

[[noreturn]] void usage(const std::string& what) { fail(ViolationKind::UsageError, {}, what); }

bool is_usage_kind(ViolationKind k) {
  return k == ViolationKind::ParseError || k == ViolationKind::UnknownName || k == ViolationKind::UsageError;
}

std::string join(const std::vector<Element>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string map_string(const ElementMap& f) { return "[" + join(f, ",") + "]"; }

std::string index_string(const std::optional<std::size_t>& i) { return i ? std::to_string(*i) : "none"; }

std::string digits(std::size_t n, const char* const glyphs[10]) {
  std::string raw = std::to_string(n), out;
  for (char c : raw) out += glyphs[c - '0'];
  return out;
}

std::string superscript(std::size_t n) {
  static const char* const g[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  return digits(n, g);
}

std::string subscript(std::size_t n) {
  static const char* const g[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  return digits(n, g);
}

std::string series_line(const SeriesReport& r) {
  std::string out = std::string(to_string(r.kind)) + ": ";
  for (std::size_t i = 0; i < r.chain.size(); ++i) {
    if (i) out += " → ";
    std::string symbol;
    switch (r.kind) {
      case SeriesKind::Right: symbol = "S⁽" + superscript(i + 1) + "⁾"; break;
      case SeriesKind::Socle: symbol = "Soc" + subscript(i); break;
      case SeriesKind::Annihilator: symbol = "Ann" + subscript(i); break;
      case SeriesKind::Gamma: symbol = "Γ" + subscript(i); break;
    }
    out += "|" + symbol + "|=" + std::to_string(r.chain[i].size());
  }
  if (r.terminated)
    out += " (terminated, index " + index_string(r.index) + ")";
  else
    out += " (stalled)";
  return out;
}

json series_json(const SeriesReport& r) {
  json chain = json::array();
  for (const auto& c : r.chain) chain.push_back(c.elements());
  json out{{"kind", to_string(r.kind)}, {"chain", chain}, {"terminated", r.terminated}};
  out["index"] = r.index ? json(*r.index) : json(nullptr);
  if (r.quotient_agrees) out["quotient_agrees"] = *r.quotient_agrees;
  return out;
}

const std::string& single_source(const Invocation& inv) {
  if (inv.sources.size() != 1) usage(inv.command + " takes exactly one --input or --catalog");
  return inv.sources.front();
}

DualWeakBrace brace_input(const Invocation& inv) { return as_dual_weak_brace(load(single_source(inv))); }

Subset subset_option(const Invocation& inv, std::size_t universe) {
  if (inv.subset.empty()) usage(inv.command + " needs --subset");
  return parse_subset(universe, inv.subset);
}

Report make(const Invocation& inv, Status status) {
  Report r;
  r.command = inv.command;
  r.status = status;
  return r;
}

Report cmd_validate(const Invocation& inv) {
  const auto s = load(single_source(inv));
  Report r = make(inv, Status::Pass);
  std::size_t order = std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SemilatticeTable>)
          return x.size();
        else if constexpr (std::is_same_v<T, StrongSemilatticeSpec>)
          return compose(x).order();
        else
          return x.order();
      },
      s);
  r.lines.push_back("valid " + std::string(kind_name(s)) + " of order " + std::to_string(order));
  return r;
}

Report cmd_compose(const Invocation& inv) {
  const auto s = load(single_source(inv));
  if (!std::holds_alternative<StrongSemilatticeSpec>(s)) usage("compose needs a strong_semilattice spec");
  const auto d = compose(std::get<StrongSemilatticeSpec>(s));
  Report r = make(inv, Status::Pass);
  r.lines.push_back("order " + std::to_string(d.order()) + ", idempotents " +
                    Subset(d.order(), d.idempotents()).to_string());
  r.lines.push_back(serialize(d));
  return r;
}

Report cmd_decompose(const Invocation& inv) {
  const auto dec = decompose(brace_input(inv));
  Report r = make(inv, Status::Info);
  json components = json::array();
  for (std::size_t a = 0; a < dec.members.size(); ++a) {
    r.lines.push_back("B" + std::to_string(a) + ": order " + std::to_string(dec.members[a].size()) + ", elements {" +
                      join(dec.members[a], ",") + "}");
    components.push_back(dec.members[a]);
  }
  json homs = json::object();
  for (const auto& [pair, map] : dec.spec.homs) {
    const auto key = std::to_string(pair.first) + ">" + std::to_string(pair.second);
    r.lines.push_back("phi " + key + " = " + map_string(map));
    homs[key] = map;
  }
  r.witnesses = {{"components", components}, {"homs", homs}, {"spec", to_json(dec.spec)}};
  return r;
}

Report cmd_solve(const Invocation& inv) {
  const auto sol = solution_of(brace_input(inv));
  Report r = make(inv, Status::Info);
  r.lines.push_back(serialize(sol));
  return r;
}

SolutionTable solution_input(const Invocation& inv) {
  const auto s = load(single_source(inv));
  if (const auto* sol = std::get_if<SolutionTable>(&s)) return *sol;
  return solution_of(as_dual_weak_brace(s));
}

Report cmd_braid(const Invocation& inv) {
  const auto report = check_braid(solution_input(inv));
  if (report.holds()) {
    Report r = make(inv, Status::Pass);
    r.lines.push_back("pass, " + std::to_string(report.triples_checked) + " triples checked");
    return r;
  }
  Report r = make(inv, Status::Fail);
  r.lines.push_back("BRAID-FAIL " + join(*report.witness));
  r.witnesses = {{"triple", *report.witness}};
  return r;
}

Report cmd_period(const Invocation& inv) {
  const auto p = period(solution_input(inv));
  Report r = make(inv, Status::Info);
  r.lines.push_back("period " + std::to_string(p));
  r.witnesses = {{"period", p}};
  return r;
}

Report cmd_regularity(const Invocation& inv) {
  const auto s = brace_input(inv);
  const auto reg = check_regularity(s);
  const auto weak = check_weak_inverses(s);
  Report r = make(inv, reg.holds() && weak.holds() ? Status::Pass : Status::Fail);
  if (reg.failure)
    r.lines.push_back("identity " + reg.failure->second + " fails at " + std::to_string(reg.failure->first));
  else
    r.lines.push_back("all six identities hold");
  r.lines.push_back(std::string("r r' r = r: ") + (weak.r_rop_r ? "yes" : "no"));
  r.lines.push_back(std::string("r' r r' = r': ") + (weak.rop_r_rop ? "yes" : "no"));
  r.lines.push_back(std::string("r r' = r' r: ") + (weak.commute ? "yes" : "no"));
  if (weak.rop_is_inverse) r.lines.push_back(std::string("r' = r^-1: ") + (*weak.rop_is_inverse ? "yes" : "no"));
  r.lines.push_back("r bijective: " + std::string(weak.r_bijective ? "yes" : "no") + ", image size " +
                    std::to_string(weak.image_size));
  const auto count = [](const std::vector<bool>& v) { return std::count(v.begin(), v.end(), true); };
  r.lines.push_back("bijective lambda maps: " + std::to_string(count(reg.lambda_bijective)) + "/" +
                    std::to_string(s.order()) + ", bijective rho maps: " + std::to_string(count(reg.rho_bijective)) +
                    "/" + std::to_string(s.order()));
  if (reg.failure) r.witnesses = {{"element", reg.failure->first}, {"identity", reg.failure->second}};
  return r;
}

Report cmd_ideals(const Invocation& inv) {
  const auto s = brace_input(inv);
  const auto found = enumerate_ideals(s);
  Report r = make(inv, Status::Info);
  r.lines.push_back(std::to_string(found.ideals.size()) + " ideals (" + std::string(to_string(found.mode)) + ")");
  json list = json::array();
  for (const auto& i : found.ideals) {
    r.lines.push_back(i.to_string() + " I");
    list.push_back(i.elements());
  }
  r.witnesses = {{"mode", to_string(found.mode)}, {"ideals", list}};
  return r;
}

Report special_subset(const Invocation& inv, const std::function<Subset(const DualWeakBrace&)>& f) {
  const auto s = brace_input(inv);
  const auto x = f(s);
  const auto tier = ideal_tier(s, x);
  Report r = make(inv, Status::Info);
  r.lines.push_back(x.to_string() + " " + std::string(tier_tag(tier)));
  r.witnesses = {{"subset", x.elements()}, {"tier", tier_tag(tier)}};
  return r;
}

Report cmd_quotient(const Invocation& inv) {
  const auto s = brace_input(inv);
  const auto q = quotient(s, subset_option(inv, s.order()));
  Report r = make(inv, Status::Info);
  r.lines.push_back("order " + std::to_string(q.quotient.order()) + ", representatives {" + join(q.class_rep, ",") +
                    "}");
  r.lines.push_back("projection " + map_string(q.projection));
  r.lines.push_back(serialize(q.quotient));
  r.witnesses = {{"projection", q.projection}, {"representatives", q.class_rep}};
  return r;
}

Report cmd_homs(const Invocation& inv) {
  if (inv.sources.size() != 2) usage("homs takes two structures");
  const auto a = load(inv.sources[0]);
  const auto b = load(inv.sources[1]);
  std::vector<ElementMap> homs;
  if (std::holds_alternative<FiniteGroupTable>(a) && std::holds_alternative<FiniteGroupTable>(b))
    homs = enumerate_group_homs(std::get<FiniteGroupTable>(a), std::get<FiniteGroupTable>(b));
  else if (std::holds_alternative<SkewBrace>(a) && std::holds_alternative<SkewBrace>(b))
    homs = enumerate_skew_brace_homs(std::get<SkewBrace>(a), std::get<SkewBrace>(b));
  else
    usage("homs needs two groups or two skew braces");
  Report r = make(inv, Status::Info);
  r.lines.push_back(std::to_string(homs.size()) + " homomorphisms");
  const std::size_t shown = std::min(homs.size(), inv.limit.value_or(homs.size()));
  json list = json::array();
  for (std::size_t i = 0; i < shown; ++i) {
    r.lines.push_back(map_string(homs[i]));
    list.push_back(homs[i]);
  }
  r.witnesses = {{"count", homs.size()}, {"homs", list}};
  return r;
}

Report cmd_iso(const Invocation& inv) {
  if (inv.sources.size() != 2) usage("iso takes two structures");
  const auto s = as_dual_weak_brace(load(inv.sources[0]));
  const auto t = as_dual_weak_brace(load(inv.sources[1]));
  const auto w = are_isomorphic(s, t);
  if (!w) {
    Report r = make(inv, Status::Fail);
    r.lines.push_back("not isomorphic");
    return r;
  }
  Report r = make(inv, Status::Pass);
  r.lines.push_back("isomorphic");
  r.lines.push_back("eta " + map_string(w->eta));
  for (std::size_t a = 0; a < w->thetas.size(); ++a)
    r.lines.push_back("theta" + std::to_string(a) + " " + map_string(w->thetas[a]));
  const auto map = global_map(decompose(s), decompose(t), *w);
  r.lines.push_back("global " + map_string(map));
  r.witnesses = {{"eta", w->eta}, {"thetas", w->thetas}, {"map", map}};
  return r;
}

Report cmd_series(const Invocation& inv) {
  const auto s = brace_input(inv);
  SeriesReport series;
  if (inv.argument == "right")
    series = right_series(s);
  else if (inv.argument == "socle")
    series = socle_series(s);
  else if (inv.argument == "ann")
    series = annihilator_series(s);
  else if (inv.argument == "gamma")
    series = gamma_series(s, inv.subset.empty() ? Subset::full(s.order()) : parse_subset(s.order(), inv.subset));
  else
    usage("series kind must be right, socle, ann or gamma");
  Report r = make(inv, Status::Info);
  r.lines.push_back(series_line(series));
  if (series.quotient_agrees)
    r.lines.push_back(std::string("quotient cross-check: ") + (*series.quotient_agrees ? "agrees" : "DISAGREES"));
  if (series.quotient_agrees && !*series.quotient_agrees) r.status = Status::Fail;
  r.witnesses = series_json(series);
  return r;
}

std::vector<Subset> parse_chain(std::size_t universe, const std::string& text) {
  std::vector<Subset> chain;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, '|');) chain.push_back(parse_subset(universe, part));
  return chain;
}

Report cmd_sandwich(const Invocation& inv) {
  const auto s = brace_input(inv);
  std::vector<Subset> chain;
  if (!inv.chain.empty()) {
    chain = parse_chain(s.order(), inv.chain);
  } else {
    const auto ann = annihilator_series(s);
    if (!ann.terminated) {
      Report r = make(inv, Status::Fail);
      r.lines.push_back("annihilator series stalls; no annihilator series to test");
      r.witnesses = series_json(ann);
      return r;
    }
    chain = ann.chain;
  }
  const auto rep = verify_sandwich(s, chain);
  Report r = make(inv, rep.holds() ? Status::Pass : Status::Fail);
  const std::size_t k = chain.size() - 1;
  for (std::size_t j = 0; j < rep.lower_inclusion.size(); ++j)
    r.lines.push_back("j=" + std::to_string(j) + ": Γ" + subscript(k - j) + "(S) ⊆ I" + subscript(j) + " " +
                      (rep.lower_inclusion[j] ? "yes" : "no") + ", I" + subscript(j) + " ⊆ Ann" + subscript(j) +
                      "(S) " + (rep.upper_inclusion[j] ? "yes" : "no"));
  r.lines.push_back(std::string("quotient criterion: ") + (rep.lemma_mn ? "holds" : "fails"));
  r.lines.push_back(std::string("Γ additivity: ") + (rep.lemma_gamma_sum ? "holds" : "fails"));
  r.witnesses = {{"lower", rep.lower_inclusion},
                 {"upper", rep.upper_inclusion},
                 {"lemma_mn", rep.lemma_mn},
                 {"gamma_sum", rep.lemma_gamma_sum}};
  return r;
}

json indices_json(const NilpotencyIndices& n) {
  const auto opt = [](const std::optional<std::size_t>& i) { return i ? json(*i) : json(nullptr); };
  return {{"right", opt(n.right)}, {"socle", opt(n.socle)}, {"annihilator", opt(n.annihilator)}};
}

std::string indices_line(const std::string& who, const NilpotencyIndices& n) {
  return who + ": right " + index_string(n.right) + ", socle " + index_string(n.socle) + ", annihilator " +
         index_string(n.annihilator);
}

Report cmd_classify(const Invocation& inv) {
  const auto rep = classify(brace_input(inv));
  Report r = make(inv, rep.consistent() ? Status::Pass : Status::Fail);
  r.lines.push_back(indices_line("S", rep.whole));
  json comps = json::array();
  for (std::size_t a = 0; a < rep.components.size(); ++a) {
    r.lines.push_back(indices_line("B" + std::to_string(a), rep.components[a]));
    comps.push_back(indices_json(rep.components[a]));
  }
  json checks = json::array();
  for (const auto& [what, ok] : rep.checks) {
    r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    checks.push_back({{"check", what}, {"holds", ok}});
  }
  r.witnesses = {{"whole", indices_json(rep.whole)}, {"components", comps}, {"checks", checks}};
  return r;
}

Report cmd_catalog(const Invocation& inv) {
  Report r = make(inv, Status::Info);
  r.lines.push_back("convention: " + catalog_convention());
  json list = json::array();
  for (const auto& e : catalog()) {
    r.lines.push_back(e.name + " " + e.kind + " " + e.provenance);
    list.push_back({{"name", e.name}, {"kind", e.kind}, {"provenance", e.provenance}});
  }
  r.witnesses = {{"entries", list}};
  return r;
}

Report cmd_random(const Invocation& inv) {
  const auto spec = random_spec(inv.seed);
  Report r = make(inv, Status::Info);
  r.lines.push_back("seed " + std::to_string(inv.seed));
  r.lines.push_back(serialize(spec));
  return r;
}

using Handler = std::function<Report(const Invocation&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate", cmd_validate},
      {"compose", cmd_compose},
      {"decompose", cmd_decompose},
      {"solve", cmd_solve},
      {"braid", cmd_braid},
      {"period", cmd_period},
      {"regularity", cmd_regularity},
      {"ideals", cmd_ideals},
      {"soc", [](const Invocation& i) { return special_subset(i, socle); }},
      {"fix", [](const Invocation& i) { return special_subset(i, fix); }},
      {"zl", [](const Invocation& i) { return special_subset(i, left_center); }},
      {"ann", [](const Invocation& i) { return special_subset(i, annihilator); }},
      {"quotient", cmd_quotient},
      {"homs", cmd_homs},
      {"iso", cmd_iso},
      {"series", cmd_series},
      {"sandwich", cmd_sandwich},
      {"classify", cmd_classify},
      {"catalog", cmd_catalog},
      {"random", cmd_random},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run(const Invocation& inv) {
  try {
    const auto it = handlers().find(inv.command);
    if (it == handlers().end()) usage("unknown command \"" + inv.command + "\"");
    return it->second(inv);
  } catch (const ViolationError& e) {
    const auto& v = e.violation();
    Report r = make(inv, Status::Fail);
    r.usage_error = is_usage_kind(v.kind);
    r.lines.push_back(v.describe());
    r.witnesses = {{"kind", to_string(v.kind)}, {"witness", v.witness}, {"context", v.context}};
    if (v.cause) r.witnesses["cause"] = to_string(*v.cause);
    return r;
  }
}

std::string render(const Report& report, std::string_view format) {
  if (format == "json") {
    const json j{{"command", report.command},
                 {"status", to_string(report.status)},
                 {"lines", report.lines},
                 {"witnesses", report.witnesses}};
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& line : report.lines) out += line + "\n";
  out += std::string(to_string(report.status)) + "\n";
  return out;
}

}  // namespace wbk
