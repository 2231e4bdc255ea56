#include "axial/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "axial/error.hpp"

namespace axial {

namespace {

std::vector<std::vector<std::size_t>> group_by_root(std::vector<std::size_t> root) {
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < root.size(); ++i)
    groups[root[i]].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, members] : groups)
    out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool products_vanish(const AlgebraTable& table, const Subspace& u, const Subspace& v) {
  for (const auto& x : u.basis())
    for (const auto& y : v.basis())
      if (!is_zero(table.multiply(x, y)))
        return false;
  return true;
}

} // namespace

bool AxisDigraph::is_symmetric() const {
  return std::all_of(arcs.begin(), arcs.end(), [&](const auto& arc) { return has_arc(arc.second, arc.first); });
}

std::vector<std::vector<std::size_t>> AxisDigraph::components() const {
  const std::size_t n = labels.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : arcs) {
    std::size_t ra = find(a), rb = find(b);
    if (ra != rb)
      parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> root(n);
  for (std::size_t i = 0; i < n; ++i)
    root[i] = find(i);
  return group_by_root(root);
}

std::vector<std::vector<bool>> AxisDigraph::reachability() const {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    reach[i][i] = true;
  for (const auto& [a, b] : arcs)
    reach[a][b] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j])
            reach[i][j] = true;
  return reach;
}

std::string to_dot(const AxisDigraph& graph, const std::string& name) {
  const bool directed = graph.kind == GraphKind::Projection;
  std::string out = std::string(directed ? "digraph" : "graph") + " \"" + name + "\" {\n";
  for (std::size_t i = 0; i < graph.labels.size(); ++i)
    out += "  " + std::to_string(i) + " [label=\"" + graph.labels[i] + "\"];\n";
  for (const auto& [a, b] : graph.arcs) {
    const bool mutual = graph.has_arc(b, a);
    if (mutual && b < a)
      continue;
    if (!directed)
      out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    else if (mutual)
      out += "  " + std::to_string(a) + " -> " + std::to_string(b) + " [dir=both];\n";
    else
      out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
  }
  return out + "}\n";
}

Ideal block(const AxialAlgebra& algebra, std::size_t axis_index) {
  return ideal_closure(algebra.table(), {algebra.axes().at(axis_index).vector});
}

AxisDigraph projection_digraph(const AxialAlgebra& algebra) {
  AxisDigraph g{GraphKind::Projection, algebra.axis_names(), {}};
  const auto& axes = algebra.axes();
  const std::size_t one = algebra.law().one_index();
  for (std::size_t b = 0; b < axes.size(); ++b)
    for (std::size_t a = 0; a < axes.size(); ++a) {
      if (a == b)
        continue;
      if (!is_zero(components(algebra.table(), axes[b], axes[a].vector)[one]))
        g.arcs.insert({a, b});
    }
  return g;
}

AxisDigraph non_annihilation_graph(const AxialAlgebra& algebra) {
  AxisDigraph g{GraphKind::NonAnnihilation, algebra.axis_names(), {}};
  const auto& axes = algebra.axes();
  for (std::size_t a = 0; a < axes.size(); ++a)
    for (std::size_t b = a + 1; b < axes.size(); ++b)
      if (!is_zero(algebra.table().multiply(axes[a].vector, axes[b].vector))) {
        g.arcs.insert({a, b});
        g.arcs.insert({b, a});
      }
  return g;
}

Domination domination(const AxialAlgebra& algebra) {
  const std::size_t m = algebra.axes().size();
  Domination d;
  for (std::size_t a = 0; a < m; ++a)
    d.blocks.push_back(block(algebra, a));
  d.dominates.assign(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      d.dominates[a][b] = d.blocks[a].space().contains(d.blocks[b].space());
  std::vector<std::size_t> root(m);
  for (std::size_t a = 0; a < m; ++a) {
    root[a] = a;
    for (std::size_t b = 0; b < a; ++b)
      if (d.blocks[a] == d.blocks[b]) {
        root[a] = root[b];
        break;
      }
    for (std::size_t b = 0; b < m; ++b)
      if (d.dominates[a][b] != d.dominates[b][a])
        d.symmetric = false;
  }
  d.classes = group_by_root(root);
  auto reach = projection_digraph(algebra).reachability();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (reach[a][b] && !d.dominates[a][b])
        d.reachability_consistent = false;
  return d;
}

AxialAlgebra restrict_to(const AxialAlgebra& algebra, const Subspace& sub, const std::vector<std::size_t>& axes) {
  const AlgebraTable& table = algebra.table();
  const std::size_t k = sub.dimension();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    std::string name = "w" + std::to_string(i);
    for (std::size_t j = 0; j < table.dimension(); ++j)
      if (sub.basis()[i] == table.basis_vector(j))
        name = table.basis_names()[j];
    names.push_back(name);
  }
  AlgebraTable restricted(table.field(), std::move(names));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Vector p = table.multiply(sub.basis()[i], sub.basis()[j]);
      if (!sub.contains(p))
        throw PreconditionError("subspace is not closed under products");
      restricted.set_product(i, j, sub.coordinates(p));
    }
  Matrix vectors;
  std::vector<std::string> axis_names;
  for (auto a : axes) {
    const Vector& v = algebra.axes().at(a).vector;
    if (!sub.contains(v))
      throw PreconditionError("axis " + algebra.axis_names()[a] + " lies outside the subalgebra");
    vectors.push_back(sub.coordinates(v));
    axis_names.push_back(algebra.axis_names()[a]);
  }
  return AxialAlgebra(std::move(restricted), algebra.law(), vectors, std::move(axis_names));
}

BlockDecomposition semisimple_decomposition(const AxialAlgebra& algebra) {
  if (!jacobson_radical(algebra).is_zero())
    throw PreconditionError("semisimple_decomposition needs J(A) = 0; quotient by the Jacobson radical first");
  Domination d = domination(algebra);
  BlockDecomposition out;
  out.classes = d.classes;
  const AlgebraTable& table = algebra.table();
  Subspace total(algebra.field(), algebra.dimension());
  std::size_t dims = 0;
  for (const auto& c : d.classes) {
    out.blocks.push_back(d.blocks[c.front()]);
    total = subspace_sum(total, out.blocks.back().space());
    dims += out.blocks.back().dimension();
  }
  out.is_direct = total.is_full() && dims == algebra.dimension();
  for (std::size_t i = 0; i < out.blocks.size() && out.is_direct; ++i)
    for (std::size_t j = i + 1; j < out.blocks.size(); ++j)
      if (!products_vanish(table, out.blocks[i].space(), out.blocks[j].space())) {
        out.is_direct = false;
        break;
      }
  out.all_simple = true;
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    try {
      AxialAlgebra piece = restrict_to(algebra, out.blocks[i].space(), out.classes[i]);
      if (!is_simple(piece))
        out.all_simple = false;
    } catch (const std::exception& e) {
      out.all_simple = false;
      std::string members;
      for (auto a : out.classes[i])
        members += (members.empty() ? "" : ",") + algebra.axis_names()[a];
      out.deficiencies.push_back("block of {" + members + "}: " + e.what());
    }
  }
  return out;
}

Semisimplification semisimplify(const AxialAlgebra& algebra) {
  Ideal j = jacobson_radical(algebra);
  AxialQuotient q = axial_quotient(algebra, j);
  BlockDecomposition d = semisimple_decomposition(q.algebra);
  return Semisimplification{std::move(j), std::move(q), std::move(d)};
}

std::vector<Ideal> hull_kernel_closure(const std::vector<Ideal>& maximal, const std::vector<Ideal>& subset) {
  for (const auto& s : subset)
    if (std::find(maximal.begin(), maximal.end(), s) == maximal.end())
      throw InvalidParameter("hull-kernel closure of a set containing a non-member ideal");
  if (subset.empty())
    return {};
  Subspace kernel = subset.front().space();
  for (const auto& s : subset)
    kernel = subspace_intersect(kernel, s.space());
  std::vector<Ideal> closure;
  for (const auto& m : maximal)
    if (m.space().contains(kernel))
      closure.push_back(m);
  return closure;
}

DiscretenessCheck check_hull_kernel_discrete(const std::vector<Ideal>& maximal, std::size_t exhaustive_limit,
                                             std::size_t samples) {
  DiscretenessCheck out;
  const std::size_t m = maximal.size();
  auto check = [&](const std::vector<std::size_t>& idx) {
    std::vector<Ideal> subset;
    for (auto i : idx)
      subset.push_back(maximal[i]);
    ++out.subsets_checked;
    std::vector<Ideal> closure = hull_kernel_closure(maximal, subset);
    std::sort(subset.begin(), subset.end());
    std::sort(closure.begin(), closure.end());
    if (closure != subset && out.discrete) {
      out.discrete = false;
      out.counterexample = idx;
    }
  };
  if (m <= exhaustive_limit) {
    out.mode = "exhaustive";
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1U)
          idx.push_back(i);
      check(idx);
    }
    return out;
  }
  out.mode = "sampled";
  check({});
  for (std::size_t i = 0; i < m; ++i)
    check({i});
  std::mt19937_64 rng(0x5eed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i)
      if (coin(rng))
        idx.push_back(i);
    check(idx);
  }
  return out;
}

DiscretenessCheck check_hull_kernel_discrete(const AxialAlgebra& algebra) {
  return check_hull_kernel_discrete(maximal_ideals(algebra));
}

std::vector<Vector> axis_products(const AlgebraTable& table, const Matrix& axes, std::size_t max_factors) {
  // by_length[k]: distinct nonzero products with k+1 factors.
  std::vector<std::vector<Vector>> by_length(max_factors);
  std::set<Vector> seen;
  auto keep = [&](std::size_t len, Vector v) {
    if (!is_zero(v) && seen.insert(v).second)
      by_length[len].push_back(std::move(v));
  };
  if (max_factors == 0)
    return {};
  for (const auto& a : axes)
    keep(0, a);
  for (std::size_t len = 1; len < max_factors; ++len)
    for (std::size_t left = 0; left <= (len - 1) / 2; ++left) {
      std::size_t right = len - 1 - left;
      for (std::size_t i = 0; i < by_length[left].size(); ++i)
        for (std::size_t j = (left == right ? i : 0); j < by_length[right].size(); ++j)
          keep(len, table.multiply(by_length[left][i], by_length[right][j]));
    }
  std::vector<Vector> out;
  for (auto& level : by_length)
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

IdealDecompositionCheck check_ideal_decomposition(const AxialAlgebra& algebra, const Subspace& ideal) {
  const AlgebraTable& table = algebra.table();
  Matrix inside, outside;
  for (const auto& a : algebra.axes())
    (ideal.contains(a.vector) ? inside : outside).push_back(a.vector);
  Subspace a1 = subalgebra_closure(table, inside);
  Subspace a2 = subalgebra_closure(table, outside);
  IdealDecompositionCheck out;
  if (!subspace_sum(a1, a2).is_full())
    out.detail = "A1 + A2 is a proper subspace";
  else if (!subspace_intersect(a1, a2).is_zero())
    out.detail = "A1 and A2 intersect nontrivially";
  else if (!products_vanish(table, a1, a2))
    out.detail = "A1 A2 is nonzero";
  else if (!(a1 == ideal))
    out.detail = "U differs from A1 (dim U = " + std::to_string(ideal.dimension()) +
                 ", dim A1 = " + std::to_string(a1.dimension()) + ")";
  else
    out.ok = true;
  return out;
}

} // namespace axial
