#include "parhyp/gaussmanin.hpp"

#include <random>
#include <sstream>

namespace parhyp {

namespace {

std::string exp_str(const MultiPoly::Exp& e) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << "]";
  return os.str();
}

std::string coord_str(const BasisIndex& b) {
  std::ostringstream os;
  for (std::size_t i = 0; i < b.subset.size(); ++i)
    os << (i ? "," : "") << b.subset[i] + 1;
  return os.str();
}

MultiPoly circuit_form_poly(const ArrangementFamily& fam,
                            const PrimeField& field, const Circuit& c) {
  MultiPoly f(field, fam.n + fam.k);
  for (std::size_t i = 0; i < c.indices.size(); ++i) {
    MultiPoly::Exp e(fam.n + fam.k, 0);
    e[c.indices[i]] = 1;
    f.add_term(e, c.lambdas[i]);
  }
  return f;
}

}  // namespace

std::vector<std::uint32_t> choose_exponents(const ArrangementFamily& fam,
                                            const PrimeField& field) {
  if (field.reduce(fam.kappa) == 0)
    throw KappaNotInvertible("kappa divisible by p = " +
                             std::to_string(field.p()));
  fp_t kinv = field.inv(field.reduce(fam.kappa));
  std::vector<std::uint32_t> A(fam.n);
  for (int j = 0; j < fam.n; ++j) {
    fp_t r = field.mul(field.reduce(fam.weights[j]), kinv);
    A[j] = r == 0 ? static_cast<std::uint32_t>(field.p())
                  : static_cast<std::uint32_t>(r);
  }
  return A;
}

MultiPoly hyperplane_form(const ArrangementFamily& fam, const PrimeField& field,
                          int j) {
  MultiPoly f(field, fam.n + fam.k);
  MultiPoly::Exp e(fam.n + fam.k, 0);
  e[j] = 1;
  f.add_term(e, std::int64_t{1});
  for (int i = 0; i < fam.k; ++i) {
    if (fam.b[j][i] == 0) continue;
    MultiPoly::Exp et(fam.n + fam.k, 0);
    et[fam.n + i] = 1;
    f.add_term(et, fam.b[j][i]);
  }
  return f;
}

MultiPoly master_polynomial(const ArrangementFamily& fam,
                            const PrimeField& field,
                            const std::vector<std::uint32_t>& A) {
  MultiPoly phi = MultiPoly::constant(field, fam.n + fam.k, 1);
  for (int j = 0; j < fam.n; ++j)
    phi = phi * hyperplane_form(fam, field, j).pow(A[j]);
  return phi;
}

std::int64_t basis_det(const ArrangementFamily& fam,
                       const std::vector<int>& subset) {
  // Entry (i,l) = b_{j_l}^i: columns are the linear parts.
  std::vector<std::vector<std::int64_t>> m(fam.k,
                                           std::vector<std::int64_t>(fam.k));
  for (int i = 0; i < fam.k; ++i)
    for (int l = 0; l < fam.k; ++l) m[i][l] = fam.b[subset[l]][i];
  return det_int(m);
}

SolutionVector solution_vector(const ArrangementFamily& fam,
                               const FlagSpace& space,
                               const ExponentChoice& choice) {
  const PrimeField& field = space.field();
  std::vector<std::uint32_t> texp(fam.k);
  for (int i = 0; i < fam.k; ++i) {
    if (choice.l[i] == 0) throw Error("labels l must be positive");
    texp[i] = choice.l[i] * static_cast<std::uint32_t>(field.p()) - 1;
  }
  SolutionVector sol;
  sol.choice = choice;
  sol.coords.reserve(space.dim());
  for (const BasisIndex& bi : space.basis()) {
    // X = Phi * d / prod f_{j_l}, built by exponent decrement on the
    // factored form rather than polynomial division.
    MultiPoly x = MultiPoly::constant(field, fam.n + fam.k,
                                      basis_det(fam, bi.subset));
    for (int j = 0; j < fam.n; ++j) {
      bool in_denominator =
          std::binary_search(bi.subset.begin(), bi.subset.end(), j);
      std::uint32_t e = choice.A[j];
      if (in_denominator) {
        if (e == 0)
          throw ExponentUnderflow("A_" + std::to_string(j + 1) + " = 0");
        e -= 1;
      }
      x = x * hyperplane_form(fam, field, j).pow(e);
    }
    if (!choice.q.empty()) x = x.shift_block(fam.n, choice.q);
    sol.coords.push_back(x.coeff_of(fam.n, texp));
  }
  return sol;
}

VerifyReport verify_solution(const ArrangementFamily& fam,
                             const FlagSpace& space,
                             const std::vector<Circuit>& circs,
                             const FlagVec<MultiPoly>& coords,
                             VerifyMode mode, int samples,
                             std::uint64_t seed) {
  const PrimeField& field = space.field();
  VerifyReport rep;
  rep.add("singular", space.is_singular(coords));

  std::vector<FpMatrix> lc;
  lc.reserve(circs.size());
  for (const Circuit& c : circs) lc.push_back(space.lc_matrix(c));

  if (mode == VerifyMode::kSymbolic) {
    std::vector<MultiPoly> fc;
    fc.reserve(circs.size());
    for (const Circuit& c : circs)
      fc.push_back(circuit_form_poly(fam, field, c));
    MultiPoly prod_all = MultiPoly::constant(field, fam.n + fam.k, 1);
    for (const MultiPoly& f : fc) prod_all = prod_all * f;
    fp_t kappa = field.reduce(fam.kappa);
    for (int i = 0; i < fam.n; ++i) {
      bool ok = true;
      std::string detail;
      for (int e = 0; e < space.dim() && ok; ++e) {
        MultiPoly lhs = coords[e].partial(i).scaled(kappa) * prod_all;
        MultiPoly rhs(field, fam.n + fam.k);
        for (std::size_t ci = 0; ci < circs.size(); ++ci) {
          std::int64_t lam = circs[ci].lambda_of(i);
          if (lam == 0) continue;
          MultiPoly cofactor = MultiPoly::constant(field, fam.n + fam.k, lam);
          for (std::size_t cj = 0; cj < circs.size(); ++cj)
            if (cj != ci) cofactor = cofactor * fc[cj];
          MultiPoly lci(field, fam.n + fam.k);
          for (int col = 0; col < space.dim(); ++col)
            if (lc[ci].at(e, col))
              lci = lci + coords[col].scaled(lc[ci].at(e, col));
          rhs = rhs + cofactor * lci;
        }
        MultiPoly residual = lhs - rhs;
        if (!residual.is_zero()) {
          ok = false;
          const auto& [mon, c] = *residual.terms().begin();
          detail = "residual at coordinate (" +
                   coord_str(space.basis()[e]) + "), monomial " + exp_str(mon) +
                   ", value " + std::to_string(c);
        }
      }
      rep.add("gauss-manin z_" + std::to_string(i + 1), ok, detail);
    }
    return rep;
  }

  // Sampled mode: evaluate kappa dI/dz_i = K_i(x) I(x) at random
  // off-discriminant points.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, field.p() - 1);
  fp_t kappa = field.reduce(fam.kappa);
  int found = 0;
  while (found < samples) {
    std::vector<fp_t> x(fam.n);
    for (auto& v : x) v = dist(rng);
    if (!off_discriminant(fam, circs, x, field)) continue;
    ++found;
    std::vector<std::optional<fp_t>> zvals(fam.n + fam.k);
    for (int i = 0; i < fam.n; ++i) zvals[i] = x[i];
    FlagVec<fp_t> ival(space.dim());
    std::vector<fp_t> full(fam.n + fam.k, 0);
    for (int i = 0; i < fam.n; ++i) full[i] = x[i];
    for (int e = 0; e < space.dim(); ++e) ival[e] = coords[e].eval(full);
    bool ok = true;
    for (int i = 0; i < fam.n && ok; ++i) {
      FpMatrix ki = space.hamiltonian_from(circs, lc, i, x);
      FlagVec<fp_t> rhs = space.matvec(ki, ival);
      for (int e = 0; e < space.dim(); ++e) {
        fp_t lhs = field.mul(kappa, coords[e].partial(i).eval(full));
        if (lhs != rhs[e]) {
          ok = false;
          break;
        }
      }
    }
    rep.add("sampled point " + std::to_string(found), ok);
  }
  return rep;
}

VerifyReport module_closure_check(const ArrangementFamily& fam,
                                  const FlagSpace& space,
                                  const std::vector<Circuit>& circs,
                                  const FlagVec<MultiPoly>& coords) {
  const PrimeField& field = space.field();
  VerifyReport rep;
  for (int i = 0; i < fam.n; ++i) {
    MultiPoly zp =
        MultiPoly::variable(field, fam.n + fam.k, i).pow(field.p());
    FlagVec<MultiPoly> scaled;
    scaled.reserve(coords.size());
    for (const MultiPoly& c : coords) scaled.push_back(c * zp);
    VerifyReport sub = verify_solution(fam, space, circs, scaled);
    rep.add("z_" + std::to_string(i + 1) + "^p multiple", sub.passed);
  }
  return rep;
}

}  // namespace parhyp
