#include "cosetconn/spec_document.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "cosetconn/error.hpp"

namespace cosetconn {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key)
{
  if (!obj.contains(key))
    throw InputError(std::string("spec is missing '") + key + "'");
  return obj.at(key);
}

std::size_t positive(const json& v, const char* what)
{
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw InputError(std::string(what) + " must be a positive integer");
  return v.get<std::size_t>();
}

std::string text(const json& v, const char* what)
{
  if (!v.is_string())
    throw InputError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

std::vector<Permutation> perm_list(const json& v, std::size_t degree, const char* what)
{
  if (!v.is_array())
    throw InputError(std::string(what) + " must be an array of cycle strings");
  std::vector<Permutation> out;
  for (const auto& e : v)
    out.push_back(parse_cycles(text(e, what), degree));
  return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const char* where)
{
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key))
      throw InputError(std::string("unknown key '") + key + "' in " + where);
  }
}

} // namespace

SpecDocument parse_spec_document(std::string_view input)
{
  json doc;
  try {
    doc = json::parse(input);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw InputError("spec must be a JSON object");

  SpecDocument out;
  std::size_t cap = GroupContext::default_cap;
  if (doc.contains("settings")) {
    const auto& s = doc.at("settings");
    if (!s.is_object())
      throw InputError("settings must be an object");
    reject_unknown(s, {"enumeration_cap", "bruteforce_cap"}, "settings");
    if (s.contains("enumeration_cap"))
      cap = positive(s.at("enumeration_cap"), "settings.enumeration_cap");
    if (s.contains("bruteforce_cap")) {
      out.bruteforce_cap = positive(s.at("bruteforce_cap"), "settings.bruteforce_cap");
      if (out.bruteforce_cap > max_bruteforce_cap)
        throw InputError("settings.bruteforce_cap may not exceed " + std::to_string(max_bruteforce_cap));
    }
  }

  if (doc.contains("family")) {
    reject_unknown(doc, {"family", "n", "k", "settings"}, "family spec");
    if (text(doc.at("family"), "family") != "cp")
      throw InputError("unknown family '" + doc.at("family").get<std::string>() + "'");
    const auto n = positive(field(doc, "n"), "n");
    const auto k = positive(field(doc, "k"), "k");
    out.family = CPParams{static_cast<unsigned>(std::min<std::size_t>(n, 1000)),
                          static_cast<unsigned>(std::min<std::size_t>(k, 1000))};
    out.spec = cp_spec(*out.family, cap);
    return out;
  }

  reject_unknown(doc, {"degree", "group_generators", "subgroup_generators", "connection_set", "settings"},
                 "spec");
  const auto degree = positive(field(doc, "degree"), "degree");
  if (degree > Permutation::max_degree)
    throw InputError("degree may not exceed " + std::to_string(Permutation::max_degree));
  out.spec.degree = degree;
  out.spec.enumeration_cap = cap;
  out.spec.group_generators = perm_list(field(doc, "group_generators"), degree, "group_generators");
  if (doc.contains("subgroup_generators"))
    out.spec.subgroup_generators = perm_list(doc.at("subgroup_generators"), degree, "subgroup_generators");
  const auto& cs = field(doc, "connection_set");
  if (!cs.is_array())
    throw InputError("connection_set must be an array");
  for (const auto& e : cs) {
    if (!e.is_object())
      throw InputError("connection_set entries must be objects {label, perm}");
    reject_unknown(e, {"label", "perm"}, "connection_set entry");
    auto p = parse_cycles(text(field(e, "perm"), "perm"), degree);
    std::string label = e.contains("label") ? text(e.at("label"), "label") : print_cycles(p);
    out.spec.connection_set.push_back({std::move(label), std::move(p)});
  }
  return out;
}

SpecDocument load_spec_document(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot read spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_document(buf.str());
}

std::optional<std::size_t> enumeration_cap_from_env()
{
  const char* v = std::getenv("COSET_ENUM_CAP");
  if (v == nullptr || *v == '\0')
    return std::nullopt;
  char* end = nullptr;
  const auto value = std::strtoull(v, &end, 10);
  if (*end != '\0' || value == 0)
    throw InputError(std::string("COSET_ENUM_CAP must be a positive integer, got '") + v + "'");
  return static_cast<std::size_t>(value);
}

nlohmann::ordered_json spec_to_json(const CosetDigraphSpec& spec)
{
  nlohmann::ordered_json j;
  j["degree"] = spec.degree;
  auto list = [](const std::vector<Permutation>& ps) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& p : ps)
      a.push_back(print_cycles(p));
    return a;
  };
  j["group_generators"] = list(spec.group_generators);
  j["subgroup_generators"] = list(spec.subgroup_generators);
  auto cs = nlohmann::ordered_json::array();
  for (const auto& lp : spec.connection_set)
    cs.push_back({{"label", lp.label}, {"perm", print_cycles(lp.perm)}});
  j["connection_set"] = std::move(cs);
  if (spec.enumeration_cap != GroupContext::default_cap)
    j["settings"] = {{"enumeration_cap", spec.enumeration_cap}};
  return j;
}

CosetDigraph build_document(const SpecDocument& doc)
{
  if (doc.family)
    return cp_build(*doc.family, doc.spec.enumeration_cap);
  return build(doc.spec);
}

} // namespace cosetconn
