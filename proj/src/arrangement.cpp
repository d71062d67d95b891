#include "parhyp/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace parhyp {

namespace {

using i128 = __int128;

std::string subset_str(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << (i ? "," : "") << s[i] + 1;
  os << "}";
  return os.str();
}

// Next size-r combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  int r = static_cast<int>(c.size());
  for (int i = r - 1; i >= 0; --i) {
    if (c[i] < n - r + i) {
      ++c[i];
      for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::int64_t Circuit::lambda_of(int hyperplane) const {
  for (std::size_t i = 0; i < indices.size(); ++i)
    if (indices[i] == hyperplane) return lambdas[i];
  return 0;
}

int rank_over_q(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  std::size_t nr = rows.size(), nc = rows[0].size();
  std::vector<std::vector<i128>> m(nr, std::vector<i128>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m[i][j] = rows[i][j];
  // Bareiss fraction-free elimination.
  i128 prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = rank;
    while (piv < nr && m[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t i = rank + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j)
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_mod_p(const std::vector<std::vector<std::int64_t>>& rows,
               const PrimeField& field) {
  if (rows.empty()) return 0;
  std::size_t nr = rows.size(), nc = rows[0].size();
  std::vector<std::vector<fp_t>> m(nr, std::vector<fp_t>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m[i][j] = field.reduce(rows[i][j]);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nc && rank < nr; ++col) {
    std::size_t piv = rank;
    while (piv < nr && m[piv][col] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(m[rank], m[piv]);
    fp_t inv = field.inv(m[rank][col]);
    for (std::size_t i = rank + 1; i < nr; ++i) {
      if (m[i][col] == 0) continue;
      fp_t f = field.mul(m[i][col], inv);
      for (std::size_t j = col; j < nc; ++j)
        m[i][j] = field.sub(m[i][j], field.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::int64_t det_int(std::vector<std::vector<std::int64_t>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  i128 prev = 1;
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[col], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = col + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a[i][j] = (a[col][col] * a[i][j] - a[i][col] * a[col][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[col][col];
  }
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

void validate_family(const ArrangementFamily& fam) {
  if (fam.k < 1 || fam.n <= fam.k)
    throw Error("require 1 <= k < n");
  if (static_cast<int>(fam.b.size()) != fam.n ||
      static_cast<int>(fam.weights.size()) != fam.n)
    throw Error("b must have n rows and a must have n entries");
  for (int j = 0; j < fam.n; ++j) {
    if (static_cast<int>(fam.b[j].size()) != fam.k)
      throw Error("row " + std::to_string(j + 1) + " of b has wrong length");
    bool nonzero = false;
    for (auto v : fam.b[j]) nonzero = nonzero || v != 0;
    if (!nonzero)
      throw ZeroLinearForm("g_" + std::to_string(j + 1) + " is the zero form");
    if (fam.weights[j] == 0)
      throw ZeroWeight("a_" + std::to_string(j + 1) + " is zero");
  }
  if (fam.kappa == 0) throw ZeroKappa("kappa is zero");
  if (rank_over_q(fam.b) != fam.k)
    throw RankDeficient("span of the linear forms is not k-dimensional");
}

std::vector<Circuit> circuits(const ArrangementFamily& fam) {
  std::vector<Circuit> out;
  for (int r = 2; r <= fam.k + 1 && r <= fam.n; ++r) {
    std::vector<int> c(r);
    std::iota(c.begin(), c.end(), 0);
    do {
      // Minimality: no smaller circuit inside this subset.
      bool contains_smaller = false;
      for (const Circuit& prev : out) {
        if (std::includes(c.begin(), c.end(), prev.indices.begin(),
                          prev.indices.end())) {
          contains_smaller = true;
          break;
        }
      }
      if (contains_smaller) continue;
      std::vector<std::vector<std::int64_t>> rows;
      for (int i : c) rows.push_back(fam.b[i]);
      if (rank_over_q(rows) != r - 1) continue;
      // All proper subsets of a minimal dependency are independent; with no
      // smaller circuit inside and rank r-1 that is automatic, so this
      // subset is a circuit.  Compute the dependency via Cramer cofactors:
      // lambda_m = (-1)^m det(rows minus m, restricted to r-1 columns).
      Circuit circ;
      circ.indices = c;
      circ.lambdas.assign(r, 0);
      std::vector<int> cols(r - 1);
      std::iota(cols.begin(), cols.end(), 0);
      do {
        std::vector<std::int64_t> cand(r, 0);
        bool any = false;
        for (int m = 0; m < r; ++m) {
          std::vector<std::vector<std::int64_t>> sub;
          for (int i = 0; i < r; ++i) {
            if (i == m) continue;
            std::vector<std::int64_t> row;
            for (int col : cols) row.push_back(fam.b[c[i]][col]);
            sub.push_back(row);
          }
          cand[m] = (m % 2 ? -1 : 1) * det_int(sub);
          any = any || cand[m] != 0;
        }
        if (any) {
          circ.lambdas = cand;
          break;
        }
      } while (next_combination(cols, fam.k));
      // Primitive, first nonzero positive.
      std::int64_t g = 0;
      for (auto v : circ.lambdas) g = std::gcd(g, std::abs(v));
      for (auto& v : circ.lambdas) v /= g;
      for (auto v : circ.lambdas) {
        if (v == 0) continue;
        if (v < 0)
          for (auto& w : circ.lambdas) w = -w;
        break;
      }
      out.push_back(std::move(circ));
    } while (next_combination(c, fam.n));
  }
  return out;
}

GoodPrimeResult is_good_prime(const ArrangementFamily& fam, std::uint64_t p) {
  PrimeField field(p);  // throws NotPrime for composite p
  for (int j = 0; j < fam.n; ++j) {
    bool nonzero = false;
    for (auto v : fam.b[j]) nonzero = nonzero || field.reduce(v) != 0;
    if (!nonzero)
      return {false, "row " + std::to_string(j + 1) + " reduces to zero mod " +
                         std::to_string(p)};
  }
  // The matroid has rank <= k, so comparing independence of subsets of size
  // <= k pins both structures.
  for (int r = 1; r <= fam.k; ++r) {
    std::vector<int> c(r);
    std::iota(c.begin(), c.end(), 0);
    do {
      std::vector<std::vector<std::int64_t>> rows;
      for (int i : c) rows.push_back(fam.b[i]);
      bool indep_q = rank_over_q(rows) == r;
      bool indep_p = rank_mod_p(rows, field) == r;
      if (indep_q != indep_p)
        return {false, "subset " + subset_str(c) +
                           (indep_q ? " loses" : " gains") +
                           " independence mod " + std::to_string(p)};
    } while (next_combination(c, fam.n));
  }
  return {true, ""};
}

fp_t circuit_form_at(const Circuit& c, const std::vector<fp_t>& x,
                     const PrimeField& field) {
  fp_t v = 0;
  for (std::size_t i = 0; i < c.indices.size(); ++i)
    v = field.add(v, field.mul(field.reduce(c.lambdas[i]),
                               x[c.indices[i]] % field.p()));
  return v;
}

bool off_discriminant(const ArrangementFamily& fam,
                      const std::vector<Circuit>& circs,
                      const std::vector<fp_t>& x, const PrimeField& field) {
  (void)fam;
  for (const Circuit& c : circs)
    if (circuit_form_at(c, x, field) == 0) return false;
  return true;
}

}  // namespace parhyp
