#include "wbk/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "catalog_data.hpp"

namespace wbk {

using nlohmann::json;

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void parse_fail(const std::string& what) { fail(ViolationKind::ParseError, {}, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

RawTable table_field(const json& j, const char* key, std::size_t expected) {
  const json& t = field(j, key);
  RawTable raw;
  try {
    raw = t.get<RawTable>();
  } catch (const json::exception&) {
    parse_fail(std::string("field \"") + key + "\" is not an integer table");
  }
  if (raw.size() != expected)
    parse_fail(std::string("field \"") + key + "\" has " + std::to_string(raw.size()) +
               " rows, expected " + std::to_string(expected));
  return raw;
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0)
    parse_fail(std::string("field \"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

Element parse_index(std::string_view text) {
  Element v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    parse_fail("bad index \"" + std::string(text) + "\"");
  return v;
}

json table_json(const OpTable& t) { return t.to_raw(); }

json brace_json(const char* kind, const OpTable& add, const OpTable& mul) {
  return json{{"kind", kind}, {"order", add.size()}, {"add", table_json(add)}, {"mul", table_json(mul)}};
}

}  // namespace

std::string_view kind_name(const Structure& s) {
  return std::visit(Overloaded{
                        [](const FiniteGroupTable&) { return "group"; },
                        [](const SemilatticeTable&) { return "semilattice"; },
                        [](const SkewBrace&) { return "skew_brace"; },
                        [](const DualWeakBrace&) { return "dual_weak_brace"; },
                        [](const StrongSemilatticeSpec&) { return "strong_semilattice"; },
                        [](const SolutionTable&) { return "solution"; },
                    },
                    s);
}

Structure structure_from_json(const json& j) {
  const json& kind_j = field(j, "kind");
  if (!kind_j.is_string()) parse_fail("field \"kind\" must be a string");
  const auto kind = kind_j.get<std::string>();

  if (kind == "group") {
    const auto n = size_field(j, "order");
    return validate_group(table_field(j, "op", n));
  }
  if (kind == "semilattice") {
    const auto n = size_field(j, "size");
    return validate_semilattice(table_field(j, "meet", n));
  }
  if (kind == "skew_brace" || kind == "dual_weak_brace") {
    const auto n = size_field(j, "order");
    auto add = table_field(j, "add", n);
    auto mul = table_field(j, "mul", n);
    if (kind == "skew_brace") return validate_skew_brace(add, mul);
    return validate_dual_weak_brace(add, mul);
  }
  if (kind == "strong_semilattice") {
    auto y = std::get<SemilatticeTable>(structure_from_json(field(j, "semilattice")));
    const json& braces = field(j, "braces");
    if (!braces.is_object() || braces.size() != y.size())
      parse_fail("\"braces\" must map every semilattice index to a skew brace");
    std::vector<SkewBrace> list;
    for (Element alpha = 0; alpha < y.size(); ++alpha) {
      auto b = structure_from_json(field(braces, std::to_string(alpha).c_str()));
      if (!std::holds_alternative<SkewBrace>(b))
        parse_fail("brace " + std::to_string(alpha) + " is not a skew_brace");
      list.push_back(std::get<SkewBrace>(std::move(b)));
    }
    std::map<ComponentPair, ElementMap> homs;
    const json& homs_j = j.contains("homs") ? j.at("homs") : json::object();
    if (!homs_j.is_object()) parse_fail("\"homs\" must be an object");
    for (const auto& [key, value] : homs_j.items()) {
      const auto sep = key.find('>');
      if (sep == std::string::npos) parse_fail("hom key \"" + key + "\" is not of the form a>b");
      const ComponentPair pair{parse_index(std::string_view(key).substr(0, sep)),
                               parse_index(std::string_view(key).substr(sep + 1))};
      ElementMap map;
      try {
        map = value.get<ElementMap>();
      } catch (const json::exception&) {
        parse_fail("hom \"" + key + "\" is not an index list");
      }
      homs.emplace(pair, std::move(map));
    }
    StrongSemilatticeSpec spec{std::move(y), std::move(list), std::move(homs)};
    validate_spec(spec);
    return spec;
  }
  if (kind == "solution") {
    const auto n = size_field(j, "order");
    const json& rows = field(j, "map");
    if (!rows.is_array() || rows.size() != n) parse_fail("\"map\" must have one row per element");
    std::vector<ElementPair> map;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) parse_fail("\"map\" rows must have one pair per element");
      for (const auto& p : row) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
          parse_fail("\"map\" entries must be index pairs");
        map.emplace_back(p[0].get<Element>(), p[1].get<Element>());
      }
    }
    return SolutionTable(n, std::move(map));
  }
  parse_fail("unknown kind \"" + kind + "\"");
}

Structure parse_structure(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ViolationKind::ParseError, {}, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  return structure_from_json(j);
}

json to_json(const Structure& s) {
  return std::visit(
      Overloaded{
          [](const FiniteGroupTable& g) -> json {
            return {{"kind", "group"}, {"order", g.order()}, {"op", table_json(g.table())}};
          },
          [](const SemilatticeTable& y) -> json {
            return {{"kind", "semilattice"}, {"size", y.size()}, {"meet", table_json(y.table())}};
          },
          [](const SkewBrace& b) -> json {
            return brace_json("skew_brace", b.additive().table(), b.multiplicative().table());
          },
          [](const DualWeakBrace& d) -> json {
            return brace_json("dual_weak_brace", d.additive().table(), d.multiplicative().table());
          },
          [](const StrongSemilatticeSpec& spec) -> json {
            json braces = json::object();
            for (std::size_t a = 0; a < spec.braces.size(); ++a) braces[std::to_string(a)] = to_json(spec.braces[a]);
            json homs = json::object();
            for (const auto& [pair, map] : spec.homs)
              homs[std::to_string(pair.first) + ">" + std::to_string(pair.second)] = map;
            return {{"kind", "strong_semilattice"},
                    {"semilattice", to_json(spec.y)},
                    {"braces", braces},
                    {"homs", homs}};
          },
          [](const SolutionTable& r) -> json {
            json rows = json::array();
            for (Element a = 0; a < r.order(); ++a) {
              json row = json::array();
              for (Element b = 0; b < r.order(); ++b) row.push_back({r(a, b).first, r(a, b).second});
              rows.push_back(row);
            }
            return {{"kind", "solution"}, {"order", r.order()}, {"map", rows}};
          },
      },
      s);
}

std::string serialize(const Structure& s) { return to_json(s).dump(); }

namespace {

struct LoadedCatalog {
  std::string convention;
  std::vector<CatalogEntry> entries;
};

const LoadedCatalog& loaded_catalog() {
  static const LoadedCatalog cat = [] {
    LoadedCatalog out;
    const json doc = json::parse(kCatalogJson);
    out.convention = doc.at("convention").get<std::string>();
    for (const auto& e : doc.at("entries")) {
      auto payload = structure_from_json(e.at("structure"));
      out.entries.push_back(CatalogEntry{e.at("name").get<std::string>(),
                                         std::string(kind_name(payload)),
                                         e.at("provenance").get<std::string>(), std::move(payload)});
    }
    return out;
  }();
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() { return loaded_catalog().entries; }

const std::string& catalog_convention() { return loaded_catalog().convention; }

std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.name);
  return names;
}

Structure load(std::string_view source) {
  constexpr std::string_view prefix = "catalog:";
  std::string_view name = source;
  const bool explicit_catalog = source.starts_with(prefix);
  if (explicit_catalog) name.remove_prefix(prefix.size());
  for (const auto& e : catalog())
    if (e.name == name) return e.payload;
  if (explicit_catalog) fail(ViolationKind::UnknownName, {}, std::string(name));

  std::ifstream in{std::string(source), std::ios::binary};
  if (!in) fail(ViolationKind::UnknownName, {}, "no catalog entry or readable file \"" + std::string(source) + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_structure(buffer.str());
}

DualWeakBrace as_dual_weak_brace(const Structure& s) {
  return std::visit(Overloaded{
                        [](const FiniteGroupTable& g) { return trivial_weak_brace(as_clifford(g)); },
                        [](const SemilatticeTable& y) { return trivial_weak_brace(as_clifford(y)); },
                        [](const SkewBrace& b) { return wbk::as_dual_weak_brace(b); },
                        [](const DualWeakBrace& d) { return d; },
                        [](const StrongSemilatticeSpec& spec) { return compose(spec); },
                        [](const SolutionTable&) -> DualWeakBrace {
                          fail(ViolationKind::UsageError, {}, "a solution is not a weak brace");
                        },
                    },
                    s);
}

StrongSemilatticeSpec random_spec(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto pick = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  std::vector<SemilatticeTable> lattices;
  std::vector<SkewBrace> braces;
  for (const auto& e : catalog()) {
    if (const auto* y = std::get_if<SemilatticeTable>(&e.payload)) lattices.push_back(*y);
    if (const auto* b = std::get_if<SkewBrace>(&e.payload); b && b->order() <= 6) braces.push_back(*b);
  }
  // Keep semilattices in which every element has at most one lower cover, so
  // maps chosen on covering pairs compose without further constraints.
  std::vector<std::vector<std::optional<Element>>> covers;
  std::erase_if(lattices, [&covers](const SemilatticeTable& y) {
    std::vector<std::optional<Element>> lower(y.size());
    for (Element a = 0; a < y.size(); ++a)
      for (Element b = 0; b < y.size(); ++b) {
        if (a == b || !y.geq(a, b)) continue;
        bool covering = true;
        for (Element c = 0; c < y.size(); ++c)
          if (c != a && c != b && y.geq(a, c) && y.geq(c, b)) covering = false;
        if (!covering) continue;
        if (lower[a]) return true;
        lower[a] = b;
      }
    covers.push_back(std::move(lower));
    return false;
  });

  const std::size_t which = pick(lattices.size());
  const SemilatticeTable& y = lattices[which];
  const auto& lower = covers[which];

  std::vector<SkewBrace> chosen;
  for (Element a = 0; a < y.size(); ++a) chosen.push_back(braces[pick(braces.size())]);

  std::map<ComponentPair, ElementMap> homs;
  std::vector<ElementMap> to_cover(y.size());
  for (Element a = 0; a < y.size(); ++a) {
    if (!lower[a]) continue;
    const auto options = enumerate_skew_brace_homs(chosen[a], chosen[*lower[a]]);
    to_cover[a] = options[pick(options.size())];
  }
  for (Element a = 0; a < y.size(); ++a) {
    ElementMap current(chosen[a].order());
    for (Element x = 0; x < current.size(); ++x) current[x] = x;
    for (std::optional<Element> step = a; lower[*step];) {
      for (auto& x : current) x = to_cover[*step][x];
      step = lower[*step];
      homs.emplace(ComponentPair{a, *step}, current);
    }
  }
  StrongSemilatticeSpec spec{y, std::move(chosen), std::move(homs)};
  validate_spec(spec);
  return spec;
}

Subset parse_subset(std::size_t universe, std::string_view text) {
  Subset out(universe);
  std::string_view rest = text;
  if (!rest.empty() && rest.front() == '{') rest.remove_prefix(1);
  if (!rest.empty() && rest.back() == '}') rest.remove_suffix(1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    auto token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      const Element x = parse_index(token);
      if (x >= universe) fail(ViolationKind::ParseError, {x}, "subset element out of range");
      out.insert(x);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace wbk
