#include "axial/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "axial/error.hpp"

namespace axial {

namespace {

using Residues = std::vector<std::uint32_t>;
using Basis = std::vector<Residues>;

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a)
    return kSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i)
    r = saturating_mul(r, base);
  return r;
}

/// Arithmetic over GF(p) on plain residues.
class ModArith {
public:
  explicit ModArith(std::uint32_t p) : p_(p) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_); }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const {
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1U)
        r = r * b % p_;
      b = b * b % p_;
      e >>= 1U;
    }
    return static_cast<std::uint32_t>(r);
  }

  /// Canonical echelon form (pivots 1, cleared columns).
  Basis echelon(Basis rows, std::size_t n) const {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][col] == 0)
        ++piv;
      if (piv == rows.size())
        continue;
      std::swap(rows[rank], rows[piv]);
      std::uint32_t iv = inv(rows[rank][col]);
      for (auto& x : rows[rank])
        x = mul(x, iv);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col] == 0)
          continue;
        std::uint32_t c = neg(rows[r][col]);
        for (std::size_t k = 0; k < n; ++k)
          rows[r][k] = add(rows[r][k], mul(c, rows[rank][k]));
      }
      ++rank;
    }
    rows.resize(rank);
    return rows;
  }

  std::uint32_t p() const { return p_; }

private:
  std::uint32_t p_;
};

class ModAlgebra {
public:
  ModAlgebra(const AlgebraTable& algebra, ModArith arith) : n_(algebra.dimension()), arith_(arith) {
    table_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Residues r;
        for (const auto& x : algebra.product(i, j))
          r.push_back(x.as_residue());
        table_[i * n_ + j] = std::move(r);
      }
  }

  Residues times_basis(const Residues& v, std::size_t i) const {
    Residues out(n_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j] == 0)
        continue;
      const Residues& c = table_[j * n_ + i];
      for (std::size_t k = 0; k < n_; ++k)
        out[k] = arith_.add(out[k], arith_.mul(v[j], c[k]));
    }
    return out;
  }

  bool in_span(const Basis& echelon, const Residues& v) const {
    Residues r = v;
    for (const auto& b : echelon) {
      std::size_t piv = 0;
      while (b[piv] == 0)
        ++piv;
      if (r[piv] == 0)
        continue;
      std::uint32_t c = arith_.neg(r[piv]);
      for (std::size_t k = 0; k < n_; ++k)
        r[k] = arith_.add(r[k], arith_.mul(c, b[k]));
    }
    return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
  }

  bool is_ideal(const Basis& echelon) const {
    for (const auto& v : echelon)
      for (std::size_t i = 0; i < n_; ++i)
        if (!in_span(echelon, times_basis(v, i)))
          return false;
    return true;
  }

  Basis principal_ideal(const Residues& v) const {
    Basis w = arith_.echelon({v}, n_);
    while (true) {
      Basis rows = w;
      for (const auto& x : w)
        for (std::size_t i = 0; i < n_; ++i)
          rows.push_back(times_basis(x, i));
      Basis next = arith_.echelon(std::move(rows), n_);
      if (next == w)
        return w;
      w = std::move(next);
    }
  }

  Basis sum(const Basis& a, const Basis& b) const {
    Basis rows = a;
    rows.insert(rows.end(), b.begin(), b.end());
    return arith_.echelon(std::move(rows), n_);
  }

  bool contains(const Basis& big, const Basis& small) const {
    return std::all_of(small.begin(), small.end(), [&](const Residues& v) { return in_span(big, v); });
  }

  std::size_t dimension() const { return n_; }

private:
  std::size_t n_;
  ModArith arith_;
  std::vector<Residues> table_;
};

std::set<Basis> lattice_by_principal_ideals(const ModAlgebra& alg, std::uint32_t p) {
  const std::size_t n = alg.dimension();
  std::set<Basis> principal;
  Residues v(n, 0);
  // Walk all nonzero vectors whose leading nonzero coordinate is 1.
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    while (true) {
      principal.insert(alg.principal_ideal(v));
      std::size_t k = lead + 1;
      while (k < n && ++v[k] == p)
        v[k++] = 0;
      if (k == n)
        break;
    }
  }
  std::set<Basis> ideals{Basis{}};
  std::vector<Basis> frontier{Basis{}};
  while (!frontier.empty()) {
    std::vector<Basis> next;
    for (const auto& i : frontier)
      for (const auto& q : principal) {
        Basis s = alg.sum(i, q);
        if (ideals.insert(s).second)
          next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return ideals;
}

std::set<Basis> lattice_by_subspaces(const ModAlgebra& alg, std::uint32_t p) {
  const std::size_t n = alg.dimension();
  std::set<Basis> ideals;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> pivots;
      for (std::size_t c = 0; c < n; ++c)
        if (mask[c])
          pivots.push_back(c);
      // Free slots: row r, column c > pivot r, c not a pivot.
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!mask[c])
            slots.emplace_back(r, c);
      Basis b(k, Residues(n, 0));
      for (std::size_t r = 0; r < k; ++r)
        b[r][pivots[r]] = 1;
      std::vector<std::uint32_t> digits(slots.size(), 0);
      while (true) {
        for (std::size_t s = 0; s < slots.size(); ++s)
          b[slots[s].first][slots[s].second] = digits[s];
        if (alg.is_ideal(b))
          ideals.insert(b);
        std::size_t s = 0;
        while (s < digits.size() && ++digits[s] == p)
          digits[s++] = 0;
        if (s == digits.size())
          break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return ideals;
}

Subspace to_subspace(const Basis& b, Field field, std::size_t n) {
  Matrix rows;
  for (const auto& v : b) {
    Vector row;
    for (auto x : v)
      row.push_back(Scalar::residue(x, field.characteristic()));
    rows.push_back(std::move(row));
  }
  return rref(field, n, std::move(rows));
}

} // namespace

std::uint64_t oracle_work_estimate(std::uint32_t p, std::size_t n, OracleMethod method) {
  if (method == OracleMethod::PrincipalIdeals)
    return saturating_pow(p, n);
  // Sum of Gaussian binomials [n, k]_p via the recurrence G(m+1) = 2 G(m) + (p^m - 1) G(m-1).
  std::uint64_t prev = 1, cur = 2;
  if (n == 0)
    return 1;
  for (std::size_t m = 1; m < n; ++m) {
    std::uint64_t term = saturating_mul(saturating_pow(p, m) - 1, prev);
    std::uint64_t next = saturating_mul(2, cur);
    next = next > kSaturated - term ? kSaturated : next + term;
    prev = cur;
    cur = next;
  }
  return cur;
}

IdealLattice brute_force_ideal_lattice(const AlgebraTable& algebra, const Matrix& axes, const OracleOptions& options) {
  const Field field = algebra.field();
  if (field.is_rational())
    throw InvalidParameter("the brute-force oracle needs a finite field");
  const std::uint32_t p = field.characteristic();
  const std::size_t n = algebra.dimension();
  const std::uint64_t work = oracle_work_estimate(p, n, options.method);
  if (work > options.bound)
    throw BoundExceeded("brute-force enumeration over GF(" + std::to_string(p) + ")^" + std::to_string(n) + " needs " +
                        (work == kSaturated ? std::string("more than 2^64") : std::to_string(work)) +
                        " candidates, above the bound " + std::to_string(options.bound));
  ModArith arith(p);
  ModAlgebra alg(algebra, arith);
  std::set<Basis> found = options.method == OracleMethod::PrincipalIdeals ? lattice_by_principal_ideals(alg, p)
                                                                          : lattice_by_subspaces(alg, p);
  std::vector<Basis> all(found.begin(), found.end());

  IdealLattice lattice;
  lattice.work = work;
  std::vector<Basis> maximal;
  for (const auto& i : all) {
    if (i.size() == n)
      continue;
    bool is_max = std::none_of(all.begin(), all.end(), [&](const Basis& j) {
      return j.size() > i.size() && j.size() < n && alg.contains(j, i);
    });
    if (is_max)
      maximal.push_back(i);
  }

  std::vector<Residues> axis_residues;
  for (const auto& a : axes) {
    Residues r;
    for (const auto& x : a)
      r.push_back(x.as_residue());
    axis_residues.push_back(std::move(r));
  }
  std::vector<const Basis*> axis_free;
  for (const auto& i : all)
    if (std::none_of(axis_residues.begin(), axis_residues.end(),
                     [&](const Residues& a) { return alg.in_span(i, a); }))
      axis_free.push_back(&i);
  for (const Basis* cand : axis_free)
    if (std::all_of(axis_free.begin(), axis_free.end(), [&](const Basis* other) { return alg.contains(*cand, *other); })) {
      lattice.largest_axis_free = to_subspace(*cand, field, n);
      break;
    }

  for (const auto& i : all)
    lattice.ideals.push_back(to_subspace(i, field, n));
  for (const auto& i : maximal)
    lattice.maximal.push_back(to_subspace(i, field, n));
  std::sort(lattice.ideals.begin(), lattice.ideals.end());
  std::sort(lattice.maximal.begin(), lattice.maximal.end());
  return lattice;
}

} // namespace axial
