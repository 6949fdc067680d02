#include "cosetconn/report.hpp"

#include <chrono>
#include <sstream>

#include "cosetconn/atom_analysis.hpp"
#include "cosetconn/error.hpp"

namespace cosetconn {

namespace {

using ojson = nlohmann::ordered_json;

ojson vertex_list(const std::vector<Vertex>& vs)
{
  auto a = ojson::array();
  for (auto v : vs)
    a.push_back(v);
  return a;
}

ojson side_json(const AtomAnalysis& a)
{
  ojson j;
  j["kappa_group"] = a.kappa_group;
  j["size_assumption_ok"] = a.size_assumption_ok;
  auto cands = ojson::array();
  for (const auto& c : a.candidates) {
    ojson cj;
    cj["s0"] = c.s0_labels;
    cj["subgroup_order"] = c.subgroup.order();
    cj["vertex_count"] = c.vertex_set.size();
    cj["is_part"] = c.is_part;
    cj["neighbor_count"] = c.neighbor_count;
    cands.push_back(std::move(cj));
  }
  j["candidates"] = std::move(cands);
  j["winning"] = a.winning;
  return j;
}

ojson atom_set_json(const AtomSet& s)
{
  ojson j;
  j["kappa"] = s.boundary;
  j["size"] = s.members.front().size();
  j["count"] = s.members.size();
  auto members = ojson::array();
  for (const auto& m : s.members)
    members.push_back(vertex_list(m.to_vector()));
  j["members"] = std::move(members);
  return j;
}

class Stopwatch {
public:
  explicit Stopwatch(bool on) : on_(on), last_(std::chrono::steady_clock::now()) {}
  void lap(ojson& timings, const char* stage)
  {
    if (!on_)
      return;
    const auto now = std::chrono::steady_clock::now();
    timings[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

private:
  bool on_;
  std::chrono::steady_clock::time_point last_;
};

} // namespace

AnalysisOutcome analyze(const SpecDocument& doc, bool timings)
{
  Stopwatch clock(timings);
  ojson times = ojson::object();
  AnalysisOutcome out{ojson::object(), {}, true};
  auto& rep = out.report;
  std::ostringstream summary;

  const auto cd = build_document(doc);
  clock.lap(times, "build_ms");
  const auto gen = generation_connectivity(cd);
  clock.lap(times, "components_ms");
  const std::size_t n = cd.vertices().size();

  ojson inst;
  inst["degree_n"] = cd.spec().degree;
  inst["group_order"] = cd.group()->order();
  inst["subgroup_order"] = cd.subgroup().order();
  inst["vertex_count"] = n;
  inst["degree"] = cd.degree();
  auto table = ojson::array();
  for (const auto& c : cd.classes())
    table.push_back({{"label", c.label}, {"generator", print_cycles(c.generator)}, {"d_s", c.degree}});
  inst["degree_table"] = std::move(table);
  inst["dropped_labels"] = cd.dropped_labels();
  inst["connected"] = gen.connected;
  inst["generated_order"] = gen.generated.order();
  inst["component_count"] = gen.components.size();
  if (!gen.connected) {
    auto comps = ojson::array();
    for (const auto& c : gen.components)
      comps.push_back(vertex_list(c));
    inst["components"] = std::move(comps);
  }
  rep["instance"] = std::move(inst);

  summary << "|G| = " << cd.group()->order() << ", |H| = " << cd.subgroup().order() << ", |V| = " << n
          << ", degree " << cd.degree() << (gen.connected ? ", connected" : ", disconnected") << "\n";

  if (!gen.connected) {
    summary << gen.components.size() << " components (cosets of <H,S>, order " << gen.generated.order()
            << ")\n";
    if (timings)
      rep["timings"] = std::move(times);
    out.summary = summary.str();
    return out;
  }

  const auto oracle = vertex_connectivity(cd.graph());
  clock.lap(times, "kappa_flow_ms");
  const auto gk = kappa_group_theoretic(cd, false);
  clock.lap(times, "kappa_group_ms");
  const bool agree = gk.kappa == oracle.value;
  out.consistent = out.consistent && agree;

  ojson kappa;
  kappa["oracle"] = oracle.value;
  kappa["group_theoretic"] = gk.kappa;
  kappa["agree"] = agree;
  if (oracle.certificate) {
    kappa["separator"] = vertex_list(oracle.certificate->separator_vertices);
    kappa["separated_pair"] = {oracle.certificate->source, oracle.certificate->sink};
  }
  kappa["forward"] = side_json(gk.forward);
  kappa["transpose"] = side_json(gk.transpose);
  rep["kappa"] = std::move(kappa);

  const auto lambda = edge_connectivity(cd.graph());
  clock.lap(times, "lambda_ms");
  rep["lambda"] = lambda.value;
  summary << "kappa = " << oracle.value << " (flow), " << gk.kappa << " (group)"
          << (agree ? "" : "  DISAGREE") << "; lambda = " << lambda.value << "\n";

  ojson atoms;
  if (cd.graph().is_complete()) {
    atoms["skipped"] = "complete digraph has no atoms";
  } else if (n > doc.bruteforce_cap) {
    atoms["skipped"] = "vertex count " + std::to_string(n) + " exceeds brute-force cap " +
                       std::to_string(doc.bruteforce_cap);
  } else {
    const auto fwd = atoms_bruteforce(cd.graph(), Side::forward, doc.bruteforce_cap);
    const auto bwd = atoms_bruteforce(transpose(cd.graph()), Side::transpose, doc.bruteforce_cap);
    const auto theory = verify_atom_theory(cd, doc.bruteforce_cap);
    atoms["forward"] = atom_set_json(fwd);
    atoms["transpose"] = atom_set_json(bwd);
    atoms["analysed_side"] = theory.side == Side::forward ? "forward" : "transpose";
    atoms["partition_ok"] = theory.partition_ok;
    atoms["structure_ok"] = theory.all_ok();
    atoms["s0"] = theory.s0_labels;
    const bool ok = theory.all_ok() && fwd.boundary == oracle.value && bwd.boundary == oracle.value;
    out.consistent = out.consistent && ok;
    summary << "atoms: forward " << fwd.members.size() << " of size " << fwd.members.front().size()
            << ", transpose " << bwd.members.size() << " of size " << bwd.members.front().size()
            << (ok ? "" : "  STRUCTURE CHECK FAILED") << "\n";
    clock.lap(times, "atoms_ms");
  }
  rep["atoms"] = std::move(atoms);
  if (timings)
    rep["timings"] = std::move(times);
  out.summary = summary.str();
  return out;
}

nlohmann::ordered_json to_json(const HypothesisReport& r)
{
  ojson j;
  j["theorem_id"] = std::string(theorem_name(r.theorem_id));
  auto hs = ojson::array();
  for (const auto& h : r.hypotheses) {
    ojson hj;
    hj["description"] = h.description;
    hj["holds"] = h.holds;
    hj["witness"] = h.witness ? ojson(*h.witness) : ojson(nullptr);
    hs.push_back(std::move(hj));
  }
  j["hypotheses"] = std::move(hs);
  j["applicable"] = r.applicable;
  auto opt = [](const std::optional<std::size_t>& v) { return v ? ojson(*v) : ojson(nullptr); };
  j["implied_bound"] = opt(r.implied_bound);
  j["computed_kappa"] = opt(r.computed_kappa);
  j["computed_lambda"] = opt(r.computed_lambda);
  j["consistent"] = r.consistent;
  ojson details = ojson::object();
  for (const auto& [k, v] : r.details)
    details[k] = v;
  j["details"] = std::move(details);
  return j;
}

std::string summarize(const HypothesisReport& r)
{
  std::ostringstream s;
  s << theorem_name(r.theorem_id) << ": " << (r.applicable ? "hypotheses hold" : "hypotheses fail");
  for (const auto& h : r.hypotheses) {
    if (!h.holds)
      s << "\n  failed: " << h.description << (h.witness ? " [" + *h.witness + "]" : "");
  }
  if (r.implied_bound)
    s << "\n  implied bound " << *r.implied_bound;
  if (r.computed_kappa)
    s << "\n  kappa (flow) " << *r.computed_kappa;
  if (r.computed_lambda)
    s << "\n  lambda (flow) " << *r.computed_lambda;
  if (!r.consistent)
    s << "\n  CONCLUSION CONTRADICTED BY THE ORACLE";
  s << "\n";
  return s.str();
}

namespace {

std::string dot_escape(const std::string& s)
{
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string export_dot(const CosetDigraph& cd)
{
  std::ostringstream s;
  s << "digraph coset {\n";
  for (Vertex v = 0; v < cd.vertices().size(); ++v)
    s << "  " << v << " [label=\"" << dot_escape(print_cycles(cd.vertices()[v])) << "\"];\n";
  for (Vertex u = 0; u < cd.vertices().size(); ++u) {
    const auto& outs = cd.graph().out(u);
    for (std::size_t i = 0; i < outs.size(); ++i)
      s << "  " << u << " -> " << outs[i] << " [label=\""
        << dot_escape(cd.classes()[cd.out_labels()[u][i]].label) << "\"];\n";
  }
  s << "}\n";
  return s.str();
}

std::string export_edges(const CosetDigraph& cd)
{
  std::ostringstream s;
  for (Vertex u = 0; u < cd.vertices().size(); ++u) {
    const auto& outs = cd.graph().out(u);
    for (std::size_t i = 0; i < outs.size(); ++i)
      s << u << ' ' << outs[i] << ' ' << cd.classes()[cd.out_labels()[u][i]].label << '\n';
  }
  return s.str();
}

} // namespace cosetconn
