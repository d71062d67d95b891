#include "parhyp/bethe.hpp"

#include <string>

namespace parhyp {

namespace {

// [f]_j(x,t) = x_j + sum_i [b_j^i] t_i.
fp_t form_value(const ArrangementFamily& fam, const PrimeField& field,
                const std::vector<fp_t>& x, const std::vector<fp_t>& t,
                int j) {
  fp_t v = x[j];
  for (int i = 0; i < fam.k; ++i)
    v = field.add(v, field.mul(field.reduce(fam.b[j][i]), t[i]));
  return v;
}

bool next_point(std::vector<fp_t>& t, std::uint64_t p) {
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (++t[i] < p) return true;
    t[i] = 0;
  }
  return false;
}

std::string t_str(const std::vector<fp_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

}  // namespace

std::vector<BetheSolution> solve_bae(const ArrangementFamily& fam,
                                     const PrimeField& field,
                                     const std::vector<fp_t>& x) {
  std::vector<BetheSolution> sols;
  std::vector<fp_t> t(fam.k, 0);
  do {
    std::vector<fp_t> fv(fam.n);
    bool regular = true;
    for (int j = 0; j < fam.n && regular; ++j) {
      fv[j] = form_value(fam, field, x, t, j);
      if (fv[j] == 0) regular = false;
    }
    if (!regular) continue;
    bool ok = true;
    for (int i = 0; i < fam.k && ok; ++i) {
      fp_t s = 0;
      for (int j = 0; j < fam.n; ++j) {
        fp_t term = field.mul(field.reduce(fam.b[j][i]),
                              field.reduce(fam.weights[j]));
        s = field.add(s, field.mul(term, field.inv(fv[j])));
      }
      if (s != 0) ok = false;
    }
    if (ok) sols.push_back({t});
  } while (next_point(t, field.p()));
  return sols;
}

FlagVec<fp_t> bethe_vector(const ArrangementFamily& fam, const FlagSpace& space,
                           const std::vector<fp_t>& x,
                           const std::vector<fp_t>& t) {
  const PrimeField& field = space.field();
  FlagVec<fp_t> v(space.dim(), 0);
  for (int e = 0; e < space.dim(); ++e) {
    const std::vector<int>& subset = space.basis()[e].subset;
    fp_t c = field.reduce(basis_det(fam, subset));
    for (int j : subset) c = field.mul(c, field.inv(form_value(fam, field, x, t, j)));
    v[e] = c;
  }
  return v;
}

VerifyReport verify_eigen(const ArrangementFamily& fam, const FlagSpace& space,
                          const std::vector<Circuit>& circs,
                          const std::vector<fp_t>& x,
                          const BetheSolution& sol) {
  const PrimeField& field = space.field();
  FlagVec<fp_t> v = bethe_vector(fam, space, x, sol.t);
  VerifyReport rep;
  rep.add("singular at t=" + t_str(sol.t), space.is_singular(v));
  for (int i = 0; i < fam.n; ++i) {
    FpMatrix ki = space.hamiltonian(circs, i, x);
    FlagVec<fp_t> lhs = space.matvec(ki, v);
    fp_t mu = field.mul(field.reduce(fam.weights[i]),
                        field.inv(form_value(fam, field, x, sol.t, i)));
    bool ok = true;
    for (int e = 0; e < space.dim(); ++e)
      if (lhs[e] != field.mul(mu, v[e])) ok = false;
    rep.add("eigen K_" + std::to_string(i + 1) + " at t=" + t_str(sol.t), ok);
  }
  return rep;
}

VerifyReport verify_orthogonality(const ArrangementFamily& fam,
                                  const FlagSpace& space,
                                  const std::vector<fp_t>& x,
                                  const std::vector<BetheSolution>& sols) {
  VerifyReport rep;
  for (std::size_t a = 0; a < sols.size(); ++a) {
    FlagVec<fp_t> va = bethe_vector(fam, space, x, sols[a].t);
    for (std::size_t b = a + 1; b < sols.size(); ++b) {
      if (sols[a].t == sols[b].t) continue;
      FlagVec<fp_t> vb = bethe_vector(fam, space, x, sols[b].t);
      rep.add("orthogonal " + t_str(sols[a].t) + " vs " + t_str(sols[b].t),
              space.contravariant(va, vb) == 0);
    }
  }
  return rep;
}

}  // namespace parhyp
