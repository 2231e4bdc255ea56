#include "axial/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "axial/error.hpp"

namespace axial {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || hit[x])
      throw InvalidParameter("image list is not a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > degree || to == 0 || to > degree)
        throw InvalidParameter("cycle point out of range 1.." + std::to_string(degree));
      images[from - 1] = to - 1;
    }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    throw DimensionMismatch("permutations of different degree");
  std::vector<std::size_t> out(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    out[x] = images_[rhs.images_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> out(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    out[images_[x]] = x;
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t order = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    if (len > 0)
      order = std::lcm(order, len);
  }
  return order;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x)
      continue;
    out += "(";
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      out += (y == x ? "" : ",") + std::to_string(y + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

TranspositionGroup::TranspositionGroup(std::vector<Permutation> generators, std::vector<Permutation> involutions)
    : generators_(std::move(generators)) {
  std::set<Permutation> found(involutions.begin(), involutions.end());
  std::vector<Permutation> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& d : frontier)
      for (const auto& g : generators_) {
        Permutation c = g * d * g.inverse();
        if (found.insert(c).second)
          next.push_back(std::move(c));
      }
    if (found.size() > kMaxClassSize)
      throw InvalidParameter("transposition class exceeds " + std::to_string(kMaxClassSize) + " elements");
    frontier = std::move(next);
  }
  class_.assign(found.begin(), found.end());
  for (const auto& d : class_)
    if (d.order() != 2)
      throw InvalidParameter(d.to_string() + " is not an involution");
  for (std::size_t i = 0; i < class_.size(); ++i)
    for (std::size_t j = i + 1; j < class_.size(); ++j) {
      std::size_t o = (class_[i] * class_[j]).order();
      if (o > 3)
        throw InvalidParameter("not a 3-transposition class: " + class_[i].to_string() + " * " + class_[j].to_string() +
                               " has order " + std::to_string(o));
    }
}

TranspositionGroup TranspositionGroup::symmetric(std::size_t m) {
  if (m < 2)
    throw InvalidParameter("symmetric group needs at least 2 points");
  std::vector<std::size_t> cycle(m);
  std::iota(cycle.begin(), cycle.end(), 1);
  Permutation swap = Permutation::from_cycles(m, {{1, 2}});
  return TranspositionGroup({swap, Permutation::from_cycles(m, {cycle})}, {swap});
}

AxialAlgebra matsuo_algebra(const TranspositionGroup& group, const Scalar& eta) {
  const Field f = eta.field();
  if (f.characteristic() == 2)
    throw InvalidParameter("Matsuo algebras need a field of characteristic other than 2");
  FusionLaw law = jordan_law(eta);
  const auto& d = group.transpositions();
  std::vector<std::string> names;
  for (const auto& x : d)
    names.push_back(x.to_string());
  AlgebraTable table(f, names);
  const std::size_t n = d.size();
  const Scalar half_eta = eta / f.from_int(2);
  for (std::size_t i = 0; i < n; ++i) {
    table.set_product(i, i, table.basis_vector(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if ((d[i] * d[j]).order() != 3)
        continue;
      Permutation third = d[i] * d[j] * d[i];
      auto k = static_cast<std::size_t>(std::lower_bound(d.begin(), d.end(), third) - d.begin());
      if (k == n || !(d[k] == third))
        throw InvalidParameter("class is not closed under conjugation: " + third.to_string());
      Vector v = table.zero();
      v[i] += half_eta;
      v[j] += half_eta;
      v[k] -= half_eta;
      table.set_product(i, j, std::move(v));
    }
  }
  Matrix axes;
  for (std::size_t i = 0; i < n; ++i)
    axes.push_back(table.basis_vector(i));
  return AxialAlgebra(std::move(table), std::move(law), axes, names);
}

AxialAlgebra named_algebra(const std::string& name, const Scalar& eta) {
  const Field f = eta.field();
  if (name == "1A") {
    AlgebraTable t(f, {"a"});
    t.set_product(0, 0, t.basis_vector(0));
    return AxialAlgebra(t, jordan_law(eta), {t.basis_vector(0)}, {"a"});
  }
  if (name == "2B") {
    AlgebraTable t(f, {"a", "b"});
    t.set_product(0, 0, t.basis_vector(0));
    t.set_product(1, 1, t.basis_vector(1));
    return AxialAlgebra(t, jordan_law(eta), {t.basis_vector(0), t.basis_vector(1)}, {"a", "b"});
  }
  if (name == "3C") {
    AxialAlgebra m = matsuo_algebra(TranspositionGroup::symmetric(3), eta);
    AlgebraTable t(f, {"a", "b", "c"});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i; j < 3; ++j)
        t.set_product(i, j, m.table().product(i, j));
    return AxialAlgebra(t, m.law(), m.axis_vectors(), {"a", "b", "c"});
  }
  throw InvalidParameter("unknown named algebra \"" + name + "\" (expected 1A, 2B or 3C)");
}

AlgebraWithForm inflated_form_example(Field field) {
  AxialAlgebra three = named_algebra("3C", field.from_rational(mpq_class(1, 2)));
  AxialAlgebra sum = direct_sum(std::vector<AxialAlgebra>{three, three});
  Normalization single = normalize_on_axes(three.table(), solve_frobenius_space(three.table()), three.axis_vectors());
  Matrix gram = zero_matrix(field, 6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      gram[i][j] = single.form.gram()[i][j];
  FrobeniusForm form(sum.table(), std::move(gram));
  return AlgebraWithForm{std::move(sum), std::move(form)};
}

std::vector<CorpusMember> corpus(Field field) {
  struct Base {
    std::string name;
    AxialAlgebra algebra;
    bool matsuo;
    std::size_t blocks;
  };
  std::vector<Base> base;
  auto add = [&](const std::string& name, const mpq_class& eta, auto build, bool matsuo, std::size_t blocks = 1) {
    Scalar e;
    try {
      e = field.from_rational(eta);
      jordan_law(e);
    } catch (const InvalidParameter&) {
      return; // eta undefined or degenerate in this field
    }
    base.push_back({name, build(e), matsuo, blocks});
  };
  const mpq_class half(1, 2), third(1, 3), minus_one(-1), two(2);
  add("1A(1/2)", half, [](const Scalar& e) { return named_algebra("1A", e); }, false);
  add("2B(1/2)", half, [](const Scalar& e) { return named_algebra("2B", e); }, false, 2);
  for (const auto& eta : {half, third, minus_one, two})
    add("3C(" + eta.get_str() + ")", eta, [](const Scalar& e) { return named_algebra("3C", e); }, true);
  add("Matsuo(S4,1/2)", half, [](const Scalar& e) { return matsuo_algebra(TranspositionGroup::symmetric(4), e); },
      true);

  const std::string suffix = field.is_rational() ? "" : " over " + field.name();
  std::vector<CorpusMember> out;
  for (const auto& b : base)
    out.push_back({b.name + suffix, b.algebra, std::nullopt, b.matsuo, b.blocks});
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      if (!(base[i].algebra.law() == base[j].algebra.law()))
        continue;
      out.push_back({base[i].name + "+" + base[j].name + suffix,
                     direct_sum(std::vector<AxialAlgebra>{base[i].algebra, base[j].algebra}), std::nullopt,
                     base[i].matsuo && base[j].matsuo, base[i].blocks + base[j].blocks});
    }
  try {
    AlgebraWithForm inflated = inflated_form_example(field);
    out.push_back({"inflated-form" + suffix, std::move(inflated.algebra), std::move(inflated.form), true, 2});
  } catch (const InvalidParameter&) {
  }
  return out;
}

} // namespace axial
