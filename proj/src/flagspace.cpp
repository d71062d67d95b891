#include "parhyp/flagspace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace parhyp {

namespace {

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

int inversion_parity(const std::vector<int>& t) {
  int inv = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] > t[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

FlagSpace::FlagSpace(const ArrangementFamily& fam, const PrimeField& field)
    : fam_(fam), field_(field) {
  std::vector<int> c(fam.k);
  std::iota(c.begin(), c.end(), 0);
  do {
    std::vector<std::vector<std::int64_t>> rows;
    for (int i : c) rows.push_back(fam.b[i]);
    if (rank_over_q(rows) == fam.k) {
      lookup_[c] = static_cast<int>(basis_.size());
      basis_.push_back(BasisIndex{c});
    }
  } while (next_combination(c, fam.n));
}

std::optional<SignedIndex> FlagSpace::normalize(
    const std::vector<int>& tuple) const {
  std::vector<int> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::nullopt;  // repeated index, F = 0 by skew-symmetry
  auto it = lookup_.find(sorted);
  if (it == lookup_.end()) return std::nullopt;  // dependent subset
  return SignedIndex{it->second, inversion_parity(tuple)};
}

fp_t FlagSpace::form_diagonal(int basis_idx) const {
  fp_t d = 1;
  for (int j : basis_[basis_idx].subset) d = field_.mul(d, weight(j));
  return d;
}

fp_t FlagSpace::contravariant(const FlagVec<fp_t>& u,
                              const FlagVec<fp_t>& v) const {
  fp_t s = 0;
  for (int i = 0; i < dim(); ++i)
    s = field_.add(s, field_.mul(form_diagonal(i), field_.mul(u[i], v[i])));
  return s;
}

FlagVec<fp_t> FlagSpace::apply_LC(const Circuit& c, int basis_idx) const {
  FlagVec<fp_t> out(dim(), 0);
  const std::vector<int>& e = basis_[basis_idx].subset;
  const int r = static_cast<int>(c.indices.size());
  std::vector<int> inter;
  std::set_intersection(e.begin(), e.end(), c.indices.begin(), c.indices.end(),
                        std::back_inserter(inter));
  if (static_cast<int>(inter.size()) < r - 1) return out;
  // inter == C - {i_m}; find the missing element's 1-based position m.
  int m = 0, missing = -1;
  for (int l = 0; l < r; ++l)
    if (!std::binary_search(inter.begin(), inter.end(), c.indices[l])) {
      m = l + 1;
      missing = c.indices[l];
      break;
    }
  std::vector<int> s;
  std::set_difference(e.begin(), e.end(), inter.begin(), inter.end(),
                      std::back_inserter(s));
  // F(e) = eps * F(i_1,..,^i_m,..,i_r, s_1,..,s_{k-r+1})
  std::vector<int> tuple;
  for (int i : c.indices)
    if (i != missing) tuple.push_back(i);
  tuple.insert(tuple.end(), s.begin(), s.end());
  int eps = inversion_parity(tuple);
  for (int l = 1; l <= r; ++l) {
    std::vector<int> term;
    for (int i : c.indices)
      if (i != c.indices[l - 1]) term.push_back(i);
    term.insert(term.end(), s.begin(), s.end());
    auto nrm = normalize(term);
    if (!nrm) continue;  // cannot happen for circuits of a good prime
    int sign = eps * (m % 2 ? -1 : 1) * (l % 2 ? -1 : 1) * nrm->sign;
    fp_t coef = weight(c.indices[l - 1]);
    if (sign < 0) coef = field_.neg(coef);
    out[nrm->index] = field_.add(out[nrm->index], coef);
  }
  return out;
}

FpMatrix FlagSpace::lc_matrix(const Circuit& c) const {
  FpMatrix m(dim());
  for (int col = 0; col < dim(); ++col) {
    FlagVec<fp_t> image = apply_LC(c, col);
    for (int row = 0; row < dim(); ++row) m.at(row, col) = image[row];
  }
  return m;
}

FpMatrix FlagSpace::hamiltonian_from(const std::vector<Circuit>& circs,
                                     const std::vector<FpMatrix>& lc, int i,
                                     const std::vector<fp_t>& x) const {
  FpMatrix m(dim());
  for (std::size_t ci = 0; ci < circs.size(); ++ci) {
    std::int64_t lam = circs[ci].lambda_of(i);
    if (lam == 0) continue;
    fp_t fc = circuit_form_at(circs[ci], x, field_);
    if (fc == 0)
      throw OnDiscriminant("f_C(x) = 0 for a circuit containing " +
                           std::to_string(i + 1));
    fp_t scale = field_.mul(field_.reduce(lam), field_.inv(fc));
    for (std::size_t idx = 0; idx < m.a.size(); ++idx)
      m.a[idx] = field_.add(m.a[idx], field_.mul(scale, lc[ci].a[idx]));
  }
  return m;
}

FpMatrix FlagSpace::hamiltonian(const std::vector<Circuit>& circs, int i,
                                const std::vector<fp_t>& x) const {
  std::vector<FpMatrix> lc;
  lc.reserve(circs.size());
  for (const Circuit& c : circs) lc.push_back(lc_matrix(c));
  return hamiltonian_from(circs, lc, i, x);
}

FlagVec<fp_t> FlagSpace::matvec(const FpMatrix& m,
                                const FlagVec<fp_t>& v) const {
  FlagVec<fp_t> out(dim(), 0);
  for (int r = 0; r < dim(); ++r)
    for (int c = 0; c < dim(); ++c)
      out[r] = field_.add(out[r], field_.mul(m.at(r, c), v[c]));
  return out;
}

FlagVec<MultiPoly> FlagSpace::matvec(const FpMatrix& m,
                                     const FlagVec<MultiPoly>& v) const {
  FlagVec<MultiPoly> out;
  out.reserve(dim());
  for (int r = 0; r < dim(); ++r) {
    MultiPoly acc(v[0].field(), v[0].nvars());
    for (int c = 0; c < dim(); ++c)
      if (m.at(r, c)) acc = acc + v[c].scaled(m.at(r, c));
    out.push_back(std::move(acc));
  }
  return out;
}

bool FlagSpace::is_singular(const FlagVec<fp_t>& v) const {
  std::vector<int> tail(fam_.k - 1);
  std::iota(tail.begin(), tail.end(), 0);
  bool more = true;
  while (more) {
    fp_t sum = 0;
    for (int j = 0; j < fam_.n; ++j) {
      std::vector<int> tuple{j};
      tuple.insert(tuple.end(), tail.begin(), tail.end());
      auto nrm = normalize(tuple);
      if (!nrm) continue;
      fp_t w = weight(j);
      if (nrm->sign < 0) w = field_.neg(w);
      sum = field_.add(sum, field_.mul(w, v[nrm->index]));
    }
    if (sum != 0) return false;
    more = fam_.k > 1 && next_combination(tail, fam_.n);
    if (fam_.k == 1) break;
  }
  return true;
}

bool FlagSpace::is_singular(const FlagVec<MultiPoly>& v) const {
  const PrimeField& F = v.empty() ? field_ : v[0].field();
  int nv = v.empty() ? 0 : v[0].nvars();
  std::vector<int> tail(fam_.k - 1);
  std::iota(tail.begin(), tail.end(), 0);
  bool more = true;
  while (more) {
    MultiPoly sum(F, nv);
    for (int j = 0; j < fam_.n; ++j) {
      std::vector<int> tuple{j};
      tuple.insert(tuple.end(), tail.begin(), tail.end());
      auto nrm = normalize(tuple);
      if (!nrm) continue;
      fp_t w = weight(j);
      if (nrm->sign < 0) w = field_.neg(w);
      sum = sum + v[nrm->index].scaled(w);
    }
    if (!sum.is_zero()) return false;
    more = fam_.k > 1 && next_combination(tail, fam_.n);
    if (fam_.k == 1) break;
  }
  return true;
}

}  // namespace parhyp
