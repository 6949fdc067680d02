// cosetconn: build Cayley coset digraphs, measure their connectivity and
// check the connectivity theorems against a flow oracle.
//
// Exit codes: 0 success, 1 input error, 2 internal inconsistency,
// 3 theorem hypotheses not satisfied.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosetconn/error.hpp"
#include "cosetconn/report.hpp"
#include "cosetconn/spec_document.hpp"
#include "cosetconn/theorem_suite.hpp"

namespace {

using namespace cosetconn;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_inconsistent = 2;
constexpr int exit_hypotheses = 3;

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

LabelSet label_list(const std::string& s)
{
  LabelSet out;
  for (auto& l : split(s, ',')) {
    if (!l.empty())
      out.push_back(l);
  }
  return out;
}

std::vector<LabelSet> block_list(const std::string& s)
{
  std::vector<LabelSet> out;
  for (const auto& b : split(s, '|'))
    out.push_back(label_list(b));
  return out;
}

SpecDocument load(const std::string& path)
{
  auto doc = load_spec_document(path);
  if (auto cap = enumeration_cap_from_env())
    doc.spec.enumeration_cap = *cap;
  return doc;
}

void emit(const nlohmann::ordered_json& j)
{
  std::cout << j.dump(2) << '\n';
}

int run_analysis(const SpecDocument& doc, bool timings)
{
  const auto outcome = analyze(doc, timings);
  emit(outcome.report);
  std::cerr << outcome.summary;
  return outcome.consistent ? exit_ok : exit_inconsistent;
}

LabelSet all_labels(const CosetDigraph& cd)
{
  LabelSet out;
  for (const auto& c : cd.classes())
    out.push_back(c.label);
  return out;
}

struct CheckArgs {
  std::string theorem;
  std::string spec;
  std::string partition;
  std::string order;
  std::string sprime;
};

HypothesisReport run_check(TheoremId id, const CosetDigraph& cd, const CheckArgs& a)
{
  const auto labels = all_labels(cd);
  switch (id) {
  case TheoremId::decomposition: {
    std::vector<LabelSet> blocks;
    if (!a.partition.empty()) {
      blocks = block_list(a.partition);
      if (blocks.size() != 2)
        throw InputError("decomposition needs --partition R1|R2");
    } else {
      blocks = {LabelSet(labels.begin(), labels.end() - (labels.empty() ? 0 : 1)), {}};
      if (!labels.empty())
        blocks[1].push_back(labels.back());
    }
    return check_decomposition(cd, blocks[0], blocks[1]);
  }
  case TheoremId::corollary1:
  case TheoremId::corollary1_1: {
    std::vector<LabelSet> blocks;
    if (!a.partition.empty()) {
      blocks = block_list(a.partition);
    } else {
      for (const auto& l : labels)
        blocks.push_back({l});
    }
    return check_tower(cd, blocks,
                       id == TheoremId::corollary1 ? TowerVariant::corollary1 : TowerVariant::corollary1_1);
  }
  case TheoremId::hierarchical_gen:
  case TheoremId::hier1: {
    LabelSet order;
    if (!a.order.empty()) {
      order = label_list(a.order);
    } else if (auto found = hierarchical_order_search(cd)) {
      for (auto i : *found)
        order.push_back(cd.classes()[i].label);
    } else {
      order = labels;
    }
    return check_hierarchical_gen(cd, order,
                                  id == TheoremId::hierarchical_gen ? HierarchicalVariant::standard
                                                                    : HierarchicalVariant::hier1);
  }
  case TheoremId::hierarchical_cayley:
    return verify_hierarchical_cayley(cd);
  case TheoremId::hierarchical_gen_c: {
    const LabelSet sp = label_list(a.sprime);
    LabelSet s;
    if (!a.order.empty()) {
      s = label_list(a.order);
    } else {
      for (const auto& l : labels) {
        if (std::find(sp.begin(), sp.end(), l) == sp.end())
          s.push_back(l);
      }
    }
    return check_hierarchical_gen_c(cd, s, sp);
  }
  case TheoremId::edgec:
    return verify_edge_connectivity(cd);
  }
  throw InputError("unhandled theorem");
}

int run_check_command(const CheckArgs& a)
{
  const auto id = parse_theorem_id(a.theorem);
  if (!id)
    throw InputError("unknown theorem '" + a.theorem +
                     "' (decomposition, corollary1, corollary1_1, hierarchical_gen, hier1, "
                     "hierarchical_cayley, hierarchical_gen_c, edgec)");
  const auto doc = load(a.spec);
  const auto cd = build_document(doc);
  const auto report = run_check(*id, cd, a);
  emit(to_json(report));
  std::cerr << summarize(report);
  if (!report.consistent)
    return exit_inconsistent;
  return report.applicable ? exit_ok : exit_hypotheses;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Cayley coset digraph connectivity analysis"};
  app.require_subcommand(1);

  std::string spec_path;
  bool timings = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Full connectivity report for a spec (JSON on stdout)");
  analyze_cmd->add_option("spec", spec_path, "Spec file")->required();
  analyze_cmd->add_flag("--timings", timings, "Include per-stage wall-clock timings");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check one theorem's hypotheses and conclusion");
  check_cmd->add_option("theorem", check.theorem, "Theorem id")->required();
  check_cmd->add_option("spec", check.spec, "Spec file")->required();
  check_cmd->add_option("--partition", check.partition, "Label blocks, e.g. \"a|b,c\"");
  check_cmd->add_option("--order", check.order, "Generator ordering (or S for hierarchical_gen_c)");
  check_cmd->add_option("--sprime", check.sprime, "S' labels for hierarchical_gen_c");

  std::string format;
  auto* export_cmd = app.add_subcommand("export", "Write the digraph as DOT or an edge list");
  export_cmd->add_option("spec", spec_path, "Spec file")->required();
  export_cmd->add_option("--format", format, "dot or edges")->required();

  unsigned cp_n = 0;
  unsigned cp_k = 0;
  bool emit_spec = false;
  auto* cp_cmd = app.add_subcommand("cp", "Cycle-prefix digraph CP(n,k)");
  cp_cmd->add_option("--n", cp_n, "n")->required();
  cp_cmd->add_option("--k", cp_k, "k")->required();
  cp_cmd->add_flag("--emit-spec", emit_spec, "Print the explicit spec instead of analysing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_input;
  }

  try {
    if (*analyze_cmd)
      return run_analysis(load(spec_path), timings);
    if (*check_cmd)
      return run_check_command(check);
    if (*export_cmd) {
      if (format != "dot" && format != "edges")
        throw InputError("--format must be dot or edges");
      const auto cd = build_document(load(spec_path));
      std::cout << (format == "dot" ? export_dot(cd) : export_edges(cd));
      return exit_ok;
    }
    if (*cp_cmd) {
      SpecDocument doc;
      doc.family = CPParams{cp_n, cp_k};
      std::size_t cap = GroupContext::default_cap;
      if (auto env = enumeration_cap_from_env())
        cap = *env;
      doc.spec = cp_spec(*doc.family, cap);
      if (emit_spec) {
        emit(spec_to_json(doc.spec));
        return exit_ok;
      }
      return run_analysis(doc, false);
    }
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return exit_inconsistent;
  } catch (const CapExceeded& e) {
    std::cerr << "limit: " << e.what() << '\n';
    return exit_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}
