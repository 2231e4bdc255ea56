#include "axial/analysis.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "axial/error.hpp"
#include "axial/oracle.hpp"

namespace axial {

using nlohmann::json;

namespace {

// Caps on the sampled axis products used by the orthogonal-to-ideal check.
constexpr std::size_t kProductFactors = 4;
constexpr std::size_t kProductSample = 48;

json ideal_list(const std::vector<Ideal>& ideals) {
  json out = json::array();
  for (const auto& i : ideals)
    out.push_back(subspace_to_json(i.space()));
  return out;
}

json index_sets(const std::vector<std::vector<std::size_t>>& sets, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& s : sets) {
    json members = json::array();
    for (auto i : s)
      members.push_back(names[i]);
    out.push_back(members);
  }
  return out;
}

json arc_list(const AxisDigraph& g, bool undirected) {
  json out = json::array();
  for (const auto& [a, b] : g.arcs)
    if (!undirected || a < b)
      out.push_back({g.labels[a], g.labels[b]});
  return out;
}

std::string describe(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

std::vector<Vector> first_n(std::vector<Vector> v, std::size_t n) {
  if (v.size() > n)
    v.resize(n);
  return v;
}

class CheckList {
public:
  void pass(const std::string& name, std::string detail = {}) { add(name, Verdict::Pass, std::move(detail)); }
  void fail(const std::string& name, std::string detail) { add(name, Verdict::Fail, std::move(detail)); }
  void skip(const std::string& name, std::string reason) { add(name, Verdict::Skipped, std::move(reason)); }
  void expect(const std::string& name, bool ok, std::string failure, std::string detail = {}) {
    ok ? pass(name, std::move(detail)) : fail(name, std::move(failure));
  }
  std::vector<TheoremCheck> take() { return std::move(checks_); }

private:
  void add(const std::string& name, Verdict v, std::string detail) { checks_.push_back({name, v, std::move(detail)}); }
  std::vector<TheoremCheck> checks_;
};

} // namespace

FormPolicy parse_form_policy(const std::string& text) {
  if (text == "solve")
    return FormPolicy::Solve;
  if (text == "given")
    return FormPolicy::Given;
  if (text == "zero")
    return FormPolicy::Zero;
  throw InvalidParameter("unknown form policy \"" + text + "\" (expected solve, given or zero)");
}

std::string to_string(FormPolicy policy) {
  switch (policy) {
  case FormPolicy::Solve:
    return "solve";
  case FormPolicy::Given:
    return "given";
  case FormPolicy::Zero:
    return "zero";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
  case Verdict::Pass:
    return "pass";
  case Verdict::Fail:
    return "fail";
  case Verdict::Skipped:
    return "skipped";
  }
  return "unknown";
}

const TheoremCheck* AnalysisReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

std::string render(const json& document) { return document.dump(2) + "\n"; }

AnalysisReport analyze(const AxialAlgebra& algebra, const std::optional<FrobeniusForm>& given,
                       const AnalyzeOptions& options) {
  const AlgebraTable& table = algebra.table();
  const auto& axes = algebra.axes();
  const auto& names = algebra.axis_names();
  const FusionLaw& law = algebra.law();
  const std::size_t n = algebra.dimension();
  const std::size_t m = axes.size();
  AnalysisReport report;
  std::vector<std::string> notes;
  json doc;

  doc["algebra"] = {{"field", field_to_json(algebra.field())},
                    {"dimension", n},
                    {"basis_names", table.basis_names()},
                    {"fusion_law", fusion_law_to_json(law)},
                    {"admits_direct_sums", admits_direct_sums(law)}};
  json axes_doc = json::array();
  for (std::size_t k = 0; k < m; ++k) {
    json dims = json::array();
    for (std::size_t v = 0; v < law.size(); ++v)
      dims.push_back({{"value", law.values()[v].to_string()}, {"dimension", axes[k].eigenspaces[v].dimension()}});
    axes_doc.push_back({{"name", names[k]}, {"vector", vector_to_json(axes[k].vector)}, {"verified", true},
                        {"eigenspaces", dims}});
  }
  doc["axes"] = axes_doc;

  // Frobenius form.
  FormSpace space = solve_frobenius_space(table);
  json form_doc{{"policy", to_string(options.policy)}, {"space_dimension", space.dimension()}};
  FrobeniusForm form = FrobeniusForm::zero(table);
  switch (options.policy) {
  case FormPolicy::Solve: {
    Normalization norm = normalize_on_axes(table, space, algebra.axis_vectors());
    form = norm.form;
    json unsatisfied = json::array();
    for (auto k : norm.unsatisfied_axes)
      unsatisfied.push_back(names[k]);
    form_doc["normalization"] = {{"status", to_string(norm.status)},
                                 {"ambiguity_dimension", norm.ambiguity_dimension},
                                 {"unsatisfied_axes", unsatisfied},
                                 {"message", norm.message}};
    if (norm.status != NormalizationStatus::Unique)
      notes.push_back("form normalization is " + to_string(norm.status) + ": " + norm.message +
                      "; radical comparisons use the chosen representative");
    break;
  }
  case FormPolicy::Given:
    if (!given)
      throw PreconditionError("form policy \"given\" needs a form in the input");
    form = *given;
    break;
  case FormPolicy::Zero:
    break;
  }
  json norms = json::array();
  std::vector<Scalar> axis_norm;
  for (std::size_t k = 0; k < m; ++k) {
    axis_norm.push_back(axis_singularity(form, axes[k]));
    norms.push_back({{"axis", names[k]}, {"value", axis_norm.back().to_string()}});
  }
  const bool all_nonsingular =
      std::none_of(axis_norm.begin(), axis_norm.end(), [](const Scalar& s) { return s.is_zero(); });
  form_doc["gram"] = matrix_to_json(form.gram());
  form_doc["axis_norms"] = norms;
  form_doc["all_axes_nonsingular"] = all_nonsingular;
  doc["form"] = form_doc;

  // Radicals.
  RadicalReport rr = radical_report(algebra, form);
  std::vector<Ideal> avoiding;
  for (std::size_t b = 0; b < m; ++b)
    avoiding.push_back(largest_ideal_avoiding_axis(algebra, b));
  const bool nondegenerate = rr.form_radical.is_zero();
  doc["radicals"] = {{"axial", subspace_to_json(rr.axial_radical.space())},
                     {"jacobson", subspace_to_json(rr.jacobson_radical.space())},
                     {"form", subspace_to_json(rr.form_radical.space())},
                     {"maximal_ideals", ideal_list(rr.maximal_ideals)},
                     {"axis_avoiding_ideals", ideal_list(avoiding)},
                     {"chain_ok", rr.chain_ok},
                     {"simple", is_simple(algebra)}};

  // Structure.
  Domination dom = domination(algebra);
  AxisDigraph projection = projection_digraph(algebra);
  AxisDigraph annihilation = non_annihilation_graph(algebra);
  Subspace block_sum(algebra.field(), n);
  json blocks_doc = json::array();
  for (std::size_t a = 0; a < m; ++a) {
    block_sum = subspace_sum(block_sum, dom.blocks[a].space());
    blocks_doc.push_back({{"axis", names[a]}, {"dimension", dom.blocks[a].dimension()}});
  }
  json classes_doc = json::array();
  for (const auto& c : dom.classes) {
    const Subspace& b = dom.blocks[c.front()].space();
    std::vector<std::size_t> inside;
    for (std::size_t a = 0; a < m; ++a)
      if (b.contains(axes[a].vector))
        inside.push_back(a);
    bool generated = subalgebra_closure(table, [&] {
                       Matrix v;
                       for (auto a : inside)
                         v.push_back(axes[a].vector);
                       return v;
                     }()) == b;
    json members = json::array();
    for (auto a : c)
      members.push_back(names[a]);
    classes_doc.push_back({{"axes", members}, {"block_dimension", b.dimension()}, {"generated_by_its_axes", generated}});
    if (!generated)
      notes.push_back("the block of " + names[c.front()] + " is not generated by the axes it contains");
  }
  auto annihilation_components = annihilation.components();
  const bool components_match_classes = annihilation_components == dom.classes;
  if (!components_match_classes)
    report.findings.push_back("non-annihilation components differ from the domination classes");
  if (!dom.symmetric)
    report.findings.push_back("domination is not symmetric");

  Semisimplification ss = semisimplify(algebra);
  json ss_doc{{"quotient_dimension", ss.quotient.algebra.dimension()},
              {"is_direct", ss.decomposition.is_direct},
              {"all_simple", ss.decomposition.all_simple},
              {"block_dimensions", [&] {
                 json d = json::array();
                 for (const auto& b : ss.decomposition.blocks)
                   d.push_back(b.dimension());
                 return d;
               }()},
              {"classes", index_sets(ss.decomposition.classes, ss.quotient.algebra.axis_names())},
              {"deficiencies", ss.decomposition.deficiencies}};
  DiscretenessCheck discrete = check_hull_kernel_discrete(rr.maximal_ideals);

  doc["structure"] = {
      {"blocks", blocks_doc},
      {"domination", {{"classes", classes_doc}, {"symmetric", dom.symmetric}}},
      {"projection_digraph", {{"arcs", arc_list(projection, false)}, {"symmetric", projection.is_symmetric()}}},
      {"non_annihilation_graph",
       {{"edges", arc_list(annihilation, true)},
        {"components", index_sets(annihilation_components, names)},
        {"matches_domination_classes", components_match_classes}}},
      {"semisimplification", ss_doc},
      {"hull_kernel",
       {{"mode", discrete.mode}, {"subsets_checked", discrete.subsets_checked}, {"discrete", discrete.discrete}}}};
  report.graphs = {{"projection", to_dot(projection, "projection")},
                   {"non_annihilation", to_dot(annihilation, "non_annihilation")}};

  // Theorem checks.
  CheckList checks;
  checks.expect("main-theorem-chain", rr.chain_ok,
                "R(A) ⊆ J(A) ⊆ A⊥ fails (dims " + std::to_string(rr.axial_radical.dimension()) + ", " +
                    std::to_string(rr.jacobson_radical.dimension()) + ", " +
                    std::to_string(rr.form_radical.dimension()) + ")");
  if (rr.chain_ok && rr.jacobson_radical.dimension() < rr.form_radical.dimension())
    notes.push_back("strict inclusion J(A) ⊊ A⊥ (dims " + std::to_string(rr.jacobson_radical.dimension()) + " < " +
                    std::to_string(rr.form_radical.dimension()) + ")");
  if (rr.jacobson_radical.space().contains(rr.axial_radical.space()) && !(rr.axial_radical == rr.jacobson_radical))
    report.findings.push_back("R(A) is strictly smaller than J(A) (dims " +
                              std::to_string(rr.axial_radical.dimension()) + " < " +
                              std::to_string(rr.jacobson_radical.dimension()) + ")");

  checks.expect("radical-contains-no-axis",
                std::none_of(axes.begin(), axes.end(),
                             [&](const Axis& a) { return rr.axial_radical.space().contains(a.vector); }),
                "the axial radical contains an axis");

  {
    bool ok = true;
    std::string detail;
    for (std::size_t b = 0; b < m && ok; ++b)
      if (avoiding[b].space().is_full() || avoiding[b].space().contains(axes[b].vector)) {
        ok = false;
        detail = "P_" + names[b] + " contains its axis";
      }
    checks.expect("axis-avoiding-ideals", ok, detail);
  }

  if (all_nonsingular)
    checks.expect("lemma-perp", rr.axial_radical == rr.form_radical && rr.jacobson_radical == rr.form_radical,
                  "axes are nonsingular but R(A), J(A), A⊥ differ");
  else
    checks.skip("lemma-perp", "some axis is singular for the form");

  {
    bool ok = true;
    std::string detail;
    for (std::size_t k = 0; k < m; ++k)
      if (rr.form_radical.space().contains(axes[k].vector) != axis_norm[k].is_zero()) {
        ok = false;
        detail = "axis " + names[k] + ": membership in A⊥ disagrees with (a,a) = " + axis_norm[k].to_string();
      }
    checks.expect("lemma-axis", ok, detail);
  }

  {
    std::string detail;
    for (std::size_t k = 0; k < m && detail.empty(); ++k) {
      OrthogonalityCheck oc = check_eigenspace_orthogonality(form, axes[k]);
      if (!oc.ok)
        detail = "axis " + names[k] + ": " + describe(oc.witness->first.second) + " in A_" +
                 law.values()[oc.witness->first.first].to_string() + " pairs nontrivially with " +
                 describe(oc.witness->second.second) + " in A_" + law.values()[oc.witness->second.first].to_string();
    }
    checks.expect("orthogonality", detail.empty(), detail);
  }

  std::vector<Ideal> known{rr.axial_radical, rr.jacobson_radical, rr.form_radical};
  known.insert(known.end(), rr.maximal_ideals.begin(), rr.maximal_ideals.end());
  known.insert(known.end(), dom.blocks.begin(), dom.blocks.end());
  known.insert(known.end(), avoiding.begin(), avoiding.end());
  std::sort(known.begin(), known.end());
  known.erase(std::unique(known.begin(), known.end()), known.end());

  {
    std::string detail;
    for (const auto& ideal : known) {
      for (const auto& u : ideal.space().basis()) {
        for (std::size_t k = 0; k < m && detail.empty(); ++k)
          for (const auto& part : components(table, axes[k], u))
            if (!ideal.space().contains(part)) {
              detail = "component of " + describe(u) + " with respect to " + names[k] + " leaves the ideal";
              break;
            }
      }
    }
    checks.expect("lemma-component", detail.empty(), detail);
  }

  checks.expect("block-decomposition", block_sum.is_full(), "the blocks sum to a proper subspace");

  {
    std::string detail;
    for (std::size_t i = 0; i < known.size() && detail.empty(); ++i)
      for (std::size_t j = i; j < known.size() && detail.empty(); ++j) {
        if (!subspace_sum(known[i].space(), known[j].space()).is_full())
          continue;
        for (std::size_t k = 0; k < m; ++k)
          if (!known[i].space().contains(axes[k].vector) && !known[j].space().contains(axes[k].vector)) {
            detail = "axis " + names[k] + " lies in neither summand of an ideal sum equal to A";
            break;
          }
      }
    checks.expect("lemma-sum", detail.empty(), detail);
  }

  std::vector<Subspace> test_ideals;
  for (const auto& i : known)
    if (!i.is_zero())
      test_ideals.push_back(i.space());
  json oracle_doc = nullptr;
  if (options.oracle_bound > 0 && !algebra.field().is_rational() &&
      oracle_work_estimate(algebra.field().characteristic(), n, OracleMethod::PrincipalIdeals) <= options.oracle_bound) {
    IdealLattice lattice = brute_force_ideal_lattice(table, algebra.axis_vectors(), {options.oracle_bound});
    oracle_doc = {{"ideals", lattice.ideals.size()}, {"maximal", lattice.maximal.size()}};
    for (const auto& s : lattice.ideals)
      if (!s.is_zero())
        test_ideals.push_back(s);
    std::sort(test_ideals.begin(), test_ideals.end());
    test_ideals.erase(std::unique(test_ideals.begin(), test_ideals.end()), test_ideals.end());
  }
  doc["oracle"] = oracle_doc;

  if (nondegenerate) {
    std::string detail;
    for (const auto& u : test_ideals) {
      IdealDecompositionCheck c = check_ideal_decomposition(algebra, u);
      if (!c.ok) {
        detail = c.detail;
        break;
      }
    }
    checks.expect("decomposition-U-equals-A1", detail.empty(), detail,
                  "checked " + std::to_string(test_ideals.size()) + " nonzero ideals");

    detail.clear();
    std::vector<Ideal> distinct_blocks = dom.blocks;
    std::sort(distinct_blocks.begin(), distinct_blocks.end());
    distinct_blocks.erase(std::unique(distinct_blocks.begin(), distinct_blocks.end()), distinct_blocks.end());
    for (const auto& u : distinct_blocks) {
      Matrix in, out;
      for (const auto& a : axes)
        (u.space().contains(a.vector) ? in : out).push_back(a.vector);
      auto m1 = first_n(axis_products(table, in, kProductFactors), kProductSample);
      auto m2 = first_n(axis_products(table, out, kProductFactors), kProductSample);
      for (const auto& x : u.space().basis())
        for (const auto& y : m2)
          if (!form(x, y).is_zero() && detail.empty())
            detail = "(U, m) != 0 for m = " + describe(y);
      for (const auto& x : m1)
        for (const auto& y : m2)
          if (detail.empty() && !is_zero(table.multiply(x, y)))
            detail = "m1 m2 != 0 for m1 = " + describe(x) + ", m2 = " + describe(y);
    }
    checks.expect("orthogonal-to-ideal", detail.empty(), detail);

    detail.clear();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (dom.blocks[a].space().contains(axes[b].vector) && !(dom.blocks[a] == dom.blocks[b]) && detail.empty())
          detail = names[b] + " lies in I_" + names[a] + " but I_" + names[b] + " != I_" + names[a];
    checks.expect("lemma-equal", detail.empty(), detail);
  } else {
    const std::string reason = "the form is degenerate (A⊥ has dimension " +
                               std::to_string(rr.form_radical.dimension()) + ")";
    checks.skip("decomposition-U-equals-A1", reason);
    checks.skip("orthogonal-to-ideal", reason);
    checks.skip("lemma-equal", reason);
  }

  if (all_nonsingular) {
    std::string detail;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (a != b && projection.has_arc(a, b) == form(axes[a].vector, axes[b].vector).is_zero() && detail.empty())
          detail = "arc " + names[a] + " -> " + names[b] + " disagrees with (a,b) = " +
                   form(axes[a].vector, axes[b].vector).to_string();
    if (detail.empty() && !projection.is_symmetric())
      detail = "projection digraph is not symmetric";
    checks.expect("projection-vs-form", detail.empty(), detail);
  } else {
    checks.skip("projection-vs-form", "some axis is singular for the form");
  }

  checks.expect("domination-reachability", dom.reachability_consistent,
                "an axis reachable in the projection digraph is not dominated");

  json quotient_doc = nullptr;
  if (!rr.form_radical.space().is_full()) {
    AxialQuotient q = axial_quotient(algebra, rr.form_radical);
    Ideal jq = jacobson_radical(q.algebra);
    bool ok = jq.is_zero();
    std::string detail = ok ? "" : "J(A/A⊥) has dimension " + std::to_string(jq.dimension());
    if (ok) {
      BlockDecomposition d = semisimple_decomposition(q.algebra);
      ok = d.is_direct && d.all_simple;
      if (!ok)
        detail = "A/A⊥ is not a direct sum of simple blocks";
      quotient_doc = {{"dimension", q.algebra.dimension()}, {"blocks", d.blocks.size()}};
    }
    checks.expect("semisimple-quotient", ok, detail);
    if (!admits_direct_sums(law))
      checks.expect("no-direct-sums-simple-quotient", is_simple(q.algebra), "A/A⊥ is not simple");
    else
      checks.skip("no-direct-sums-simple-quotient", "the fusion law admits direct sums");
  } else {
    checks.skip("semisimple-quotient", "A⊥ = A");
    checks.skip("no-direct-sums-simple-quotient", "A⊥ = A");
  }
  doc["form_quotient"] = quotient_doc;

  checks.expect("modulo-jacobson", ss.decomposition.is_direct && ss.decomposition.all_simple,
                "A/J(A) is not a direct sum of simple blocks");
  checks.expect("hull-kernel-discrete", discrete.discrete, "a set of maximal ideals is not closed",
                discrete.mode + ", " + std::to_string(discrete.subsets_checked) + " subsets");

  report.checks = checks.take();
  json verdicts = json::array();
  for (const auto& c : report.checks) {
    verdicts.push_back({{"name", c.name}, {"result", to_string(c.verdict)}, {"detail", c.detail}});
    if (c.verdict == Verdict::Fail) {
      report.findings.push_back("check " + c.name + " failed: " + c.detail);
      report.exit_code = kExitFinding;
    }
  }
  doc["verdicts"] = verdicts;
  doc["findings"] = report.findings;
  doc["notes"] = notes;
  doc["status"] = report.exit_code == kExitOk ? "ok" : "finding";
  report.document = std::move(doc);
  return report;
}

namespace {

AnalysisReport input_error(const std::string& message, json violations = json::array()) {
  AnalysisReport r;
  r.exit_code = kExitInputError;
  r.document = {{"status", "input-error"}, {"error", message}, {"violations", std::move(violations)}};
  return r;
}

} // namespace

AnalysisReport analyze_text(const std::string& text, const AnalyzeOptions& options) {
  AlgebraFile file;
  try {
    file = parse_algebra_text(text);
  } catch (const Error& e) {
    return input_error(e.what());
  }
  try {
    AxialAlgebra algebra(file.table, file.law, file.axes, file.axis_names);
    std::optional<FrobeniusForm> given;
    if (file.form)
      given = FrobeniusForm(algebra.table(), *file.form);
    if (options.policy == FormPolicy::Given && !given)
      return input_error("form policy \"given\" needs a \"form\" entry in the input");
    return analyze(algebra, given, options);
  } catch (const AxisVerificationError& e) {
    json violations = json::array();
    for (const auto& v : e.violations)
      violations.push_back({{"axis", e.name}, {"index", e.index}, {"condition", to_string(v.condition)},
                            {"detail", v.detail}});
    return input_error(e.what(), std::move(violations));
  } catch (const Error& e) {
    return input_error(e.what());
  }
}

AnalysisReport analyze_file(const std::filesystem::path& path, const AnalyzeOptions& options) {
  std::ifstream in(path);
  if (!in)
    return input_error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return analyze_text(buffer.str(), options);
}

OracleComparison oracle_compare(const AxialAlgebra& algebra, std::uint64_t bound) {
  const AlgebraTable& table = algebra.table();
  IdealLattice lattice = brute_force_ideal_lattice(table, algebra.axis_vectors(), {bound});
  std::vector<Subspace> structural;
  for (const auto& i : maximal_ideals(algebra))
    structural.push_back(i.space());
  Ideal radical = axial_radical(algebra);
  Ideal jacobson = jacobson_radical(algebra);
  Subspace oracle_jacobson = Subspace::full(algebra.field(), algebra.dimension());
  for (const auto& s : lattice.maximal)
    oracle_jacobson = subspace_intersect(oracle_jacobson, s);

  json mismatches = json::array();
  if (structural != lattice.maximal)
    mismatches.push_back("maximal ideals differ (" + std::to_string(structural.size()) + " structural, " +
                         std::to_string(lattice.maximal.size()) + " enumerated)");
  if (!lattice.largest_axis_free || !(*lattice.largest_axis_free == radical.space()))
    mismatches.push_back("largest axis-free ideal differs from the axial radical");
  if (!(oracle_jacobson == jacobson.space()))
    mismatches.push_back("intersection of enumerated maximal ideals differs from J(A)");
  for (std::size_t b = 0; b < algebra.axes().size(); ++b) {
    const Vector& axis = algebra.axes()[b].vector;
    std::vector<const Subspace*> avoiding;
    for (const auto& s : lattice.ideals)
      if (!s.contains(axis))
        avoiding.push_back(&s);
    const Subspace* largest = nullptr;
    for (const Subspace* s : avoiding)
      if (std::all_of(avoiding.begin(), avoiding.end(), [&](const Subspace* o) { return s->contains(*o); }))
        largest = s;
    if (!largest || !(*largest == largest_ideal_avoiding_axis(algebra, b).space()))
      mismatches.push_back("largest ideal avoiding " + algebra.axis_names()[b] + " differs");
  }

  OracleComparison out;
  out.agree = mismatches.empty();
  out.exit_code = out.agree ? kExitOk : kExitFinding;
  json enumerated = json::array();
  for (const auto& s : lattice.maximal)
    enumerated.push_back(subspace_to_json(s));
  out.document = {{"status", out.agree ? "agree" : "mismatch"},
                  {"field", field_to_json(algebra.field())},
                  {"dimension", algebra.dimension()},
                  {"work", lattice.work},
                  {"ideal_count", lattice.ideals.size()},
                  {"maximal_ideals", enumerated},
                  {"axial_radical", subspace_to_json(radical.space())},
                  {"jacobson_radical", subspace_to_json(jacobson.space())},
                  {"mismatches", mismatches}};
  return out;
}

OracleComparison oracle_compare_file(const std::filesystem::path& path, std::uint64_t bound) {
  AlgebraFile file = load_algebra_file(path);
  AxialAlgebra algebra(file.table, file.law, file.axes, file.axis_names);
  return oracle_compare(algebra, bound);
}

} // namespace axial
