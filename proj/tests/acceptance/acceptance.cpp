// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "axial/analysis.hpp"
#include "axial/error.hpp"
#include "axial/oracle.hpp"

using namespace axial;

namespace {

const std::vector<Field>& fields() {
  static const std::vector<Field> f{Field::rationals(), Field::prime(3), Field::prime(5)};
  return f;
}

const std::vector<CorpusMember>& full_corpus() {
  static const std::vector<CorpusMember> all = [] {
    std::vector<CorpusMember> out;
    for (const auto& f : fields())
      for (auto& m : corpus(f))
        out.push_back(std::move(m));
    return out;
  }();
  return all;
}

FrobeniusForm normalized_form(const AxialAlgebra& x) {
  return normalize_on_axes(x.table(), solve_frobenius_space(x.table()), x.axis_vectors()).form;
}

struct Outcome {
  std::size_t failures = 0;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (failures++ < 3)
      detail << (failures > 1 ? "; " : "") << what;
  }
};

// 1. R(A) ⊆ J(A) ⊆ A⊥ for the solved, zero and (when present) prescribed forms.
Outcome theorem_chain() {
  Outcome o;
  for (const auto& m : full_corpus()) {
    std::vector<FrobeniusForm> forms{normalized_form(m.algebra), FrobeniusForm::zero(m.algebra.table())};
    if (m.form)
      forms.push_back(*m.form);
    for (const auto& f : forms)
      if (!radical_report(m.algebra, f).chain_ok)
        o.fail(m.name);
  }
  o.detail << (o.failures ? "" : std::to_string(full_corpus().size()) + " members");
  return o;
}

// 2. R = J = A⊥ and A/A⊥ semisimple on every Matsuo member, normalized form.
Outcome jordan_equality() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& m : full_corpus()) {
    if (!m.matsuo)
      continue;
    ++checked;
    RadicalReport r = radical_report(m.algebra, normalized_form(m.algebra));
    if (!(r.axial_radical == r.jacobson_radical && r.jacobson_radical == r.form_radical)) {
      o.fail(m.name + ": radicals differ");
      continue;
    }
    if (r.form_radical.space().is_full())
      continue;
    BlockDecomposition d = semisimple_decomposition(axial_quotient(m.algebra, r.form_radical).algebra);
    if (!d.is_direct || !d.all_simple)
      o.fail(m.name + ": A/A⊥ not semisimple");
  }
  o.detail << (o.failures ? "" : std::to_string(checked) + " Matsuo members");
  return o;
}

// 3. The inflated form: J(A) = 0 and dim A⊥ = 3.
Outcome strictness() {
  Outcome o;
  AlgebraWithForm x = inflated_form_example();
  RadicalReport r = radical_report(x.algebra, x.form);
  if (r.jacobson_radical.dimension() != 0)
    o.fail("dim J = " + std::to_string(r.jacobson_radical.dimension()));
  if (r.form_radical.dimension() != 3)
    o.fail("dim A⊥ = " + std::to_string(r.form_radical.dimension()));
  if (!o.failures)
    o.detail << "dim J = 0, dim A⊥ = 3";
  return o;
}

// 4. Radical values of 3C(η).
Outcome concrete_values() {
  Outcome o;
  const Field q = Field::rationals();
  auto three_c = [&](const char* eta) { return named_algebra("3C", q.parse(eta)); };
  auto radicals = [&](const AxialAlgebra& x) { return radical_report(x, normalized_form(x)); };

  AxialAlgebra minus_one = three_c("-1");
  RadicalReport r = radicals(minus_one);
  Subspace ones = rref(q, 3, {{q.one(), q.one(), q.one()}});
  for (const Ideal* i : {&r.axial_radical, &r.jacobson_radical, &r.form_radical})
    if (!(i->space() == ones))
      o.fail("3C(-1) radical is not span{(1,1,1)}");
  AxialQuotient quo = axial_quotient(minus_one, r.axial_radical);
  if (quo.algebra.dimension() != 2 || !is_simple(quo.algebra))
    o.fail("3C(-1)/R is not a 2-dimensional simple algebra");

  RadicalReport two = radicals(three_c("2"));
  if (two.axial_radical.dimension() != 2 || two.jacobson_radical.dimension() != 2 || two.form_radical.dimension() != 2)
    o.fail("3C(2) radicals are not 2-dimensional");
  RadicalReport half = radicals(three_c("1/2"));
  if (!half.axial_radical.is_zero() || !half.jacobson_radical.is_zero() || !half.form_radical.is_zero())
    o.fail("3C(1/2) radicals are nonzero");
  if (!o.failures)
    o.detail << "3C(-1): 1, 3C(2): 2, 3C(1/2): 0, 3C(-1)/R simple of dim 2";
  return o;
}

// 5. Brute-force lattice against maximal_ideals and axial_radical.
Outcome oracle_equivalence() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::size_t compared = 0;
  for (const auto& m : full_corpus()) {
    Field f = m.algebra.field();
    if (f.is_rational() || oracle_work_estimate(f.characteristic(), m.algebra.dimension(),
                                                OracleMethod::PrincipalIdeals) > 1'000'000)
      continue;
    ++compared;
    IdealLattice lattice = brute_force_ideal_lattice(m.algebra.table(), m.algebra.axis_vectors());
    std::vector<Subspace> structural;
    for (const auto& i : maximal_ideals(m.algebra))
      structural.push_back(i.space());
    if (structural != lattice.maximal)
      o.fail(m.name + ": maximal ideals");
    if (!lattice.largest_axis_free || !(*lattice.largest_axis_free == axial_radical(m.algebra).space()))
      o.fail(m.name + ": axial radical");
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 30)
    o.fail("took " + std::to_string(seconds) + " s");
  if (!o.failures)
    o.detail << compared << " members, " << static_cast<int>(seconds * 1000) << " ms";
  return o;
}

// 6. verify_axis accepts the corpus axes and rejects corrupted tables.
Outcome fusion_verification() {
  Outcome o;
  std::size_t axes = 0;
  for (const auto& m : full_corpus())
    for (const auto& a : m.algebra.axis_vectors()) {
      ++axes;
      if (!verify_axis(m.algebra.table(), m.algebra.law(), a).ok())
        o.fail(m.name + ": axis rejected");
    }

  const Field q = Field::rationals();
  auto s = [&](const char* t) { return q.parse(t); };
  AxialAlgebra base = named_algebra("3C", s("1/2"));
  struct Corruption {
    std::string what;
    std::function<void(AlgebraTable&)> apply;
    std::size_t axis;
    AxisCondition expected;
  };
  const std::vector<Corruption> corruptions{
      {"a.a = 2a", [&](AlgebraTable& t) { t.set_product(0, 0, {s("2"), s("0"), s("0")}); }, 0,
       AxisCondition::NonzeroIdempotent},
      {"a.a = a + b", [&](AlgebraTable& t) { t.set_product(0, 0, {s("1"), s("1"), s("0")}); }, 0,
       AxisCondition::NonzeroIdempotent},
      {"a.b with eta 1/3", [&](AlgebraTable& t) { t.set_product(0, 1, {s("1/6"), s("1/6"), s("-1/6")}); }, 0,
       AxisCondition::Semisimplicity},
      {"a.b = a.c = 0 breaks b", [&](AlgebraTable& t) { t.set_product(0, 1, {s("0"), s("0"), s("0")}); }, 1,
       AxisCondition::Semisimplicity},
      {"b.c = 0", [&](AlgebraTable& t) { t.set_product(1, 2, {s("0"), s("0"), s("0")}); }, 0,
       AxisCondition::Fusion},
      {"a.b = b", [&](AlgebraTable& t) { t.set_product(0, 1, {s("0"), s("1"), s("0")}); }, 0,
       AxisCondition::Semisimplicity},
  };
  std::size_t rejected = 0;
  for (const auto& c : corruptions) {
    AlgebraTable t = base.table();
    c.apply(t);
    AxisCheck check = verify_axis(t, base.law(), t.basis_vector(c.axis));
    bool named = false;
    for (const auto& v : check.violations)
      named = named || v.condition == c.expected;
    if (check.ok() || !named)
      o.fail(c.what + " not rejected as " + to_string(c.expected));
    else
      ++rejected;
  }
  if (!o.failures)
    o.detail << axes << " axes accepted, " << rejected << " corruptions rejected";
  return o;
}

// 7. Frobenius space dimension equals the number of summands.
Outcome frobenius_uniqueness() {
  Outcome o;
  for (const auto& m : full_corpus()) {
    if (!m.matsuo && m.name.rfind("1A", 0) != 0 && m.name.rfind("2B", 0) != 0)
      continue;
    std::size_t dim = solve_frobenius_space(m.algebra.table()).dimension();
    if (dim != m.blocks)
      o.fail(m.name + ": dimension " + std::to_string(dim) + ", expected " + std::to_string(m.blocks));
  }
  if (!o.failures)
    o.detail << full_corpus().size() << " members";
  return o;
}

// 8. Structure lemmas from the analysis pipeline, oracle ideals included.
Outcome structure_suite() {
  Outcome o;
  AnalyzeOptions options;
  options.oracle_bound = 1'000'000;
  const char* names[] = {"block-decomposition", "decomposition-U-equals-A1", "lemma-equal", "projection-vs-form",
                         "hull-kernel-discrete"};
  for (const auto& m : full_corpus()) {
    AnalysisReport r = analyze(m.algebra, m.form, options);
    for (const char* n : names) {
      const TheoremCheck* c = r.check(n);
      if (!c || c->verdict == Verdict::Fail)
        o.fail(m.name + ": " + n);
    }
    if (maximal_ideals(m.algebra).size() <= 12 && check_hull_kernel_discrete(m.algebra).mode != "exhaustive")
      o.fail(m.name + ": hull-kernel not exhaustive");
  }
  if (!o.failures)
    o.detail << full_corpus().size() << " members";
  return o;
}

// 9. Two runs of analyze give byte-identical reports.
Outcome determinism() {
  Outcome o;
  auto run = [] {
    std::string all;
    for (const auto& m : full_corpus())
      all += render(analyze(m.algebra, m.form).document);
    return all;
  };
  std::string first = run(), second = run();
  if (first != second)
    o.fail("reports differ");
  else
    o.detail << first.size() << " bytes identical";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 theorem-chain", theorem_chain},           {"2 jordan-type-equality", jordan_equality},
      {"3 strictness-witness", strictness},         {"4 concrete-radical-values", concrete_values},
      {"5 oracle-equivalence", oracle_equivalence}, {"6 fusion-verification", fusion_verification},
      {"7 frobenius-uniqueness", frobenius_uniqueness}, {"8 structure-suite", structure_suite},
      {"9 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.failures > 0;
    std::cout << (o.failures ? "FAIL " : "PASS ") << name << " (" << o.detail.str() << ")" << std::endl;
  }
  return failed ? 1 : 0;
}
