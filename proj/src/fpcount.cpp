#include "parhyp/fpcount.hpp"

#include <algorithm>
#include <string>

namespace parhyp {

namespace {

// Lexicographic scan over F_p^k.
bool next_point(std::vector<fp_t>& t, std::uint64_t p) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < p) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

fp_t monomial_sum_fpk(const PrimeField& field, int n_skip,
                      const MultiPoly::Exp& e) {
  // sum over F_p^k factorizes; sum_{t in F_p} t^i is p (= 0) for i = 0,
  // -1 when i > 0 and (p-1) | i, and 0 otherwise.
  fp_t v = 1;
  for (std::size_t i = n_skip; i < e.size(); ++i) {
    if (e[i] == 0) return 0;
    if (e[i] % (field.p() - 1) != 0) return 0;
    v = field.neg(v);
  }
  return v;
}

FlagVec<fp_t> integral_fpk(const FlagSpace& space, const FlagVec<MultiPoly>& f) {
  const PrimeField& field = space.field();
  int n = space.family().n;
  FlagVec<fp_t> out(space.dim(), 0);
  for (int e = 0; e < space.dim(); ++e)
    for (const auto& [mon, c] : f[e].terms())
      out[e] = field.add(out[e],
                         field.mul(c, monomial_sum_fpk(field, n, mon)));
  return out;
}

FlagVec<MultiPoly> build_F_vector(const ArrangementFamily& fam,
                                  const FlagSpace& space,
                                  const std::vector<std::uint32_t>& A,
                                  const std::vector<fp_t>& x) {
  const PrimeField& field = space.field();
  std::vector<std::optional<fp_t>> zvals(fam.n + fam.k);
  for (int i = 0; i < fam.n; ++i) zvals[i] = x[i];
  std::vector<MultiPoly> forms;
  forms.reserve(fam.n);
  for (int j = 0; j < fam.n; ++j)
    forms.push_back(hyperplane_form(fam, field, j).eval_partial(zvals));
  FlagVec<MultiPoly> out;
  out.reserve(space.dim());
  for (const BasisIndex& bi : space.basis()) {
    MultiPoly f = MultiPoly::constant(field, fam.n + fam.k,
                                      basis_det(fam, bi.subset));
    for (int j = 0; j < fam.n; ++j) {
      bool in_denominator =
          std::binary_search(bi.subset.begin(), bi.subset.end(), j);
      std::uint32_t e = A[j];
      if (in_denominator) {
        if (e == 0)
          throw ExponentUnderflow("A_" + std::to_string(j + 1) + " = 0");
        e -= 1;
      }
      f = f * forms[j].pow(e);
    }
    out.push_back(std::move(f));
  }
  return out;
}

ThmTwoIntReport check_thm_2int(const ArrangementFamily& fam,
                               const FlagSpace& space, const SolutionVector& sol,
                               const std::vector<fp_t>& x) {
  const PrimeField& field = space.field();
  FlagVec<MultiPoly> f = build_F_vector(fam, space, sol.choice.A, x);
  ThmTwoIntReport rep;
  rep.degree_hypothesis = true;
  for (int e = 0; e < space.dim(); ++e)
    for (int i = 0; i < fam.k; ++i)
      if (f[e].degree_in(fam.n + i) >= 2 * static_cast<int>(field.p()) - 2)
        rep.degree_hypothesis = false;
  std::uint64_t total = 0;
  for (auto a : sol.choice.A) total += a;
  rep.inequality_hypothesis =
      total - fam.k <
      static_cast<std::uint64_t>(fam.k + 1) * (field.p() - 1);
  rep.equality_checked = rep.degree_hypothesis || rep.inequality_hypothesis;

  FlagVec<fp_t> rhs = integral_fpk(space, f);
  fp_t sign_flip = fam.k % 2;  // (-1)^k
  std::vector<fp_t> full(fam.n + fam.k, 0);
  for (int i = 0; i < fam.n; ++i) full[i] = x[i];
  rep.equality_holds = true;
  for (int e = 0; e < space.dim(); ++e) {
    fp_t lhs = sol.coords[e].eval(full);
    fp_t r = sign_flip ? field.neg(rhs[e]) : rhs[e];
    if (lhs != r) rep.equality_holds = false;
  }
  return rep;
}

ThmTwoIntReport check_thm_2int(const ArrangementFamily& fam,
                               const FlagSpace& space,
                               const std::vector<std::uint32_t>& A,
                               const std::vector<fp_t>& q,
                               const std::vector<fp_t>& x) {
  ExponentChoice choice{A, q, std::vector<std::uint32_t>(fam.k, 1)};
  SolutionVector sol = solution_vector(fam, space, choice);
  return check_thm_2int(fam, space, sol, x);
}

Hypersurface enumerate_hypersurface(const ArrangementFamily& fam,
                                    const FlagSpace& space,
                                    const std::vector<fp_t>& x,
                                    std::uint32_t kappa) {
  const PrimeField& field = space.field();
  // kappa-th roots via the precomputed power table y -> y^kappa.
  std::vector<std::vector<fp_t>> roots(field.p());
  for (fp_t y = 0; y < field.p(); ++y)
    roots[field.pow(y, kappa)].push_back(y);
  Hypersurface h;
  h.x = x;
  h.kappa = kappa;
  std::vector<fp_t> t(fam.k, 0);
  std::vector<fp_t> full(fam.n + fam.k, 0);
  for (int i = 0; i < fam.n; ++i) full[i] = x[i];
  do {
    fp_t v = 1;
    for (int j = 0; j < fam.n; ++j) {
      fp_t fj = x[j];
      for (int i = 0; i < fam.k; ++i)
        fj = field.add(fj, field.mul(field.reduce(fam.b[j][i]), t[i]));
      v = field.mul(v, fj);
    }
    if (v == 0) {
      h.points.emplace_back(t, 0);
    } else {
      for (fp_t y : roots[v]) h.points.emplace_back(t, y);
    }
  } while (next_point(t, field.p()));
  return h;
}

fp_t hypersurface_integral(const ArrangementFamily& fam, const FlagSpace& space,
                           const Hypersurface& h, int basis_idx) {
  const PrimeField& field = space.field();
  const std::vector<int>& subset = space.basis()[basis_idx].subset;
  fp_t d = field.reduce(basis_det(fam, subset));
  fp_t total = 0;
  for (const auto& [t, y] : h.points) {
    fp_t den = 1;
    for (int j : subset) {
      fp_t fj = h.x[j];
      for (int i = 0; i < fam.k; ++i)
        fj = field.add(fj, field.mul(field.reduce(fam.b[j][i]), t[i]));
      den = field.mul(den, fj);
    }
    if (den == 0) continue;  // primed sum: h undefined at this point
    total = field.add(total, field.mul(d, field.inv(den)));
  }
  return total;
}

VerifyReport check_kappa_cover(const ArrangementFamily& fam,
                               const FlagSpace& space,
                               const std::vector<fp_t>& x,
                               std::uint32_t kappa) {
  const PrimeField& field = space.field();
  std::uint64_t pp = field.p();
  if (kappa == 0 || (pp - 1) % kappa != 0)
    throw HypothesisViolated("kappa must divide p-1");
  if (kappa == pp - 1) throw HypothesisViolated("kappa = p-1 excluded");
  std::vector<std::uint32_t> A(
      fam.n, static_cast<std::uint32_t>((kappa - 1) * ((pp - 1) / kappa)));
  ExponentChoice choice{A, std::vector<fp_t>(fam.k, 0),
                        std::vector<std::uint32_t>(fam.k, 1)};
  SolutionVector sol = solution_vector(fam, space, choice);
  return check_kappa_cover(fam, space, x, kappa, sol);
}

VerifyReport check_kappa_cover(const ArrangementFamily& fam,
                               const FlagSpace& space,
                               const std::vector<fp_t>& x, std::uint32_t kappa,
                               const SolutionVector& sol) {
  const PrimeField& field = space.field();
  std::uint64_t p = field.p();
  for (auto w : fam.weights)
    if (w != -static_cast<std::int64_t>(kappa) + 1)
      throw HypothesisViolated("weights must all equal -(kappa-1)");
  if ((p - 1) % kappa != 0)
    throw HypothesisViolated("kappa must divide p-1");
  if (kappa == p - 1) throw HypothesisViolated("kappa = p-1 excluded");
  std::uint64_t step = (p - 1) / kappa;
  std::uint64_t aexp = (kappa - 1) * step;
  // Degree inequalities of the theorem.
  std::uint64_t n = fam.n, k = fam.k;
  VerifyReport rep;
  rep.add("inequality n(kappa-1)(p-1)/kappa - k < (k+1)(p-1)",
          n * aexp - k < (k + 1) * (p - 1));
  bool second = n * (kappa - 2) * step < k * (p - 1) + k;
  rep.add("inequality n(kappa-2)(p-1)/kappa - k < k(p-1)", second);
  if (!rep.passed)
    throw HypothesisViolated(rep.checks[rep.checks[0].passed ? 1 : 0].name);

  std::vector<fp_t> full(fam.n + fam.k, 0);
  for (int i = 0; i < fam.n; ++i) full[i] = x[i];
  Hypersurface h = enumerate_hypersurface(fam, space, x, kappa);
  bool eq = true;
  for (int e = 0; e < space.dim(); ++e) {
    fp_t lhs = hypersurface_integral(fam, space, h, e);
    fp_t rhs = sol.coords[e].eval(full);
    if (fam.k % 2) rhs = field.neg(rhs);
    if (lhs != rhs) eq = false;
  }
  rep.add("point-count identity", eq);
  // Intermediate sums for powers l <= kappa-2 vanish.
  for (std::uint32_t l = 1; l + 1 < kappa; ++l) {
    std::vector<std::uint32_t> Al(fam.n, static_cast<std::uint32_t>(l * step));
    FlagVec<MultiPoly> f = build_F_vector(fam, space, Al, x);
    FlagVec<fp_t> sums = integral_fpk(space, f);
    bool zero = std::all_of(sums.begin(), sums.end(),
                            [](fp_t v) { return v == 0; });
    rep.add("intermediate sum l=" + std::to_string(l), zero);
  }
  return rep;
}

}  // namespace parhyp
