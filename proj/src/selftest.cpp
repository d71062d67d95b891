#include "parhyp/selftest.hpp"

#include <mutex>
#include <ostream>
#include <random>
#include <sstream>

#include "parhyp/bethe.hpp"
#include "parhyp/fpcount.hpp"
#include "parhyp/json_io.hpp"
#include "parhyp/parallel.hpp"

namespace parhyp {
namespace examples {

namespace {
ArrangementFamily make(int n, int k, std::vector<std::vector<std::int64_t>> b,
                       std::vector<std::int64_t> a, std::int64_t kappa) {
  ArrangementFamily fam;
  fam.n = n;
  fam.k = k;
  fam.b = std::move(b);
  fam.weights = std::move(a);
  fam.kappa = kappa;
  validate_family(fam);
  return fam;
}
}  // namespace

ArrangementFamily k1n3() {
  return make(3, 1, {{1}, {1}, {1}}, {-1, -1, -1}, 2);
}
ArrangementFamily k1n4() {
  return make(4, 1, {{1}, {1}, {1}, {1}}, {-1, -1, -1, -1}, 2);
}
ArrangementFamily k2n4() {
  return make(4, 2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {-1, -1, -1, -1}, 2);
}
ArrangementFamily kappa3() {
  return make(3, 1, {{1}, {1}, {1}}, {-2, -2, -2}, 3);
}
ArrangementFamily k2n4_mixed() {
  return make(4, 2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {1, 1, 2, 1}, 2);
}

}  // namespace examples

namespace selftest {

namespace {

using examples::k1n3;
using examples::k1n4;
using examples::k2n4;
using examples::kappa3;

std::string x_str(const std::vector<fp_t>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i)
    s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

// All points of F_p^n, optionally restricted to pairwise distinct
// coordinates, in lexicographic order.
std::vector<std::vector<fp_t>> list_x(int n, std::uint64_t p, bool distinct) {
  std::vector<std::vector<fp_t>> out;
  std::vector<fp_t> x(n, 0);
  for (;;) {
    bool ok = true;
    if (distinct)
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n; ++j)
          if (x[i] == x[j]) {
            ok = false;
            break;
          }
    if (ok) out.push_back(x);
    int i = n - 1;
    while (i >= 0 && ++x[i] == p) x[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

SolutionVector default_solution(const ArrangementFamily& fam,
                                const FlagSpace& space) {
  ExponentChoice c{choose_exponents(fam, space.field()),
                   std::vector<fp_t>(fam.k, 0),
                   std::vector<std::uint32_t>(fam.k, 1)};
  return solution_vector(fam, space, c);
}

// Criterion 1: symbolic Gauss-Manin verification across exponent choices.
Criterion crit_solutions() {
  struct Case {
    ArrangementFamily fam;
    std::vector<std::uint64_t> ps;
    const char* tag;
  };
  std::vector<Case> cases = {{k1n3(), {5, 7, 11, 13}, "k1n3"},
                             {k2n4(), {5, 7, 11}, "k2n4"}};
  for (const Case& c : cases) {
    for (std::uint64_t p : c.ps) {
      PrimeField field(p);
      GoodPrimeResult gp = is_good_prime(c.fam, p);
      if (!gp)
        return {"", false, false,
                std::string(c.tag) + " p=" + std::to_string(p) + " not good: " +
                    gp.certificate};
      FlagSpace space(c.fam, field);
      std::vector<Circuit> circs = circuits(c.fam);
      std::vector<std::uint32_t> A = choose_exponents(c.fam, field);
      std::vector<ExponentChoice> configs;
      configs.push_back({A, std::vector<fp_t>(c.fam.k, 0),
                         std::vector<std::uint32_t>(c.fam.k, 1)});
      configs.push_back({A, std::vector<fp_t>(c.fam.k, 1),
                         std::vector<std::uint32_t>(c.fam.k, 1)});
      std::vector<std::uint32_t> l2(c.fam.k, 1);
      l2[0] = 2;
      configs.push_back({A, std::vector<fp_t>(c.fam.k, 0), l2});
      for (const ExponentChoice& cfg : configs) {
        SolutionVector sol = solution_vector(c.fam, space, cfg);
        VerifyReport rep =
            verify_solution(c.fam, space, circs, sol.coords);
        if (!rep)
          return {"", false, false,
                  std::string(c.tag) + " p=" + std::to_string(p) +
                      " q=" + std::to_string(cfg.q[0]) +
                      " l=" + std::to_string(cfg.l[0]) + " failed"};
      }
    }
  }
  return {"", true, false, ""};
}

// Exhaustive per-x cover check shared by criteria 2 and 4.
Criterion cover_scan(const ArrangementFamily& fam, std::uint64_t p,
                     std::uint32_t kappa, const char* tag) {
  PrimeField field(p);
  FlagSpace space(fam, field);
  SolutionVector sol = [&] {
    std::uint32_t step = static_cast<std::uint32_t>((p - 1) / kappa);
    std::vector<std::uint32_t> A(fam.n, (kappa - 1) * step);
    ExponentChoice c{A, std::vector<fp_t>(fam.k, 0),
                     std::vector<std::uint32_t>(fam.k, 1)};
    return solution_vector(fam, space, c);
  }();
  std::vector<std::vector<fp_t>> xs = list_x(fam.n, p, true);
  std::vector<char> ok(xs.size(), 1);
  parallel_for(xs.size(), [&](std::size_t i) {
    ok[i] = check_kappa_cover(fam, space, xs[i], kappa, sol).passed;
  });
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!ok[i])
      return {"", false, false,
              std::string(tag) + " p=" + std::to_string(p) + " x=" +
                  x_str(xs[i])};
  return {"", true, false, ""};
}

Criterion crit_elliptic() {
  for (const ArrangementFamily& fam : {k1n3(), k1n4()})
    for (std::uint64_t p : {5, 7, 11}) {
      Criterion c = cover_scan(fam, p, 2, fam.n == 3 ? "n=3" : "n=4");
      if (!c.passed) return c;
    }
  return {"", true, false, ""};
}

Criterion crit_integral() {
  struct Case {
    ArrangementFamily fam;
    const char* tag;
  };
  for (const Case& c : {Case{k1n3(), "k1n3"}, Case{k2n4(), "k2n4"}}) {
    {
      PrimeField field(5);
      FlagSpace space(c.fam, field);
      SolutionVector sol = default_solution(c.fam, space);
      for (const auto& x : list_x(c.fam.n, 5, false)) {
        ThmTwoIntReport rep = check_thm_2int(c.fam, space, sol, x);
        if (!rep.equality_checked || !rep.equality_holds)
          return {"", false, false,
                  std::string(c.tag) + " p=5 x=" + x_str(x)};
      }
    }
    {
      PrimeField field(11);
      FlagSpace space(c.fam, field);
      SolutionVector sol = default_solution(c.fam, space);
      std::mt19937_64 rng(1);
      std::uniform_int_distribution<std::uint64_t> dist(0, 10);
      for (int s = 0; s < 100; ++s) {
        std::vector<fp_t> x(c.fam.n);
        for (auto& v : x) v = dist(rng);
        ThmTwoIntReport rep = check_thm_2int(c.fam, space, sol, x);
        if (!rep.equality_checked || !rep.equality_holds)
          return {"", false, false,
                  std::string(c.tag) + " p=11 x=" + x_str(x)};
      }
    }
  }
  return {"", true, false, ""};
}

Criterion crit_cubic_cover() {
  for (std::uint64_t p : {7, 13}) {
    Criterion c = cover_scan(kappa3(), p, 3, "kappa=3");
    if (!c.passed) return c;
  }
  return {"", true, false, ""};
}

Criterion crit_bethe() {
  ArrangementFamily fam = k1n3();
  std::vector<Circuit> circs = circuits(fam);
  for (std::uint64_t p : {5, 7, 11, 13}) {
    PrimeField field(p);
    FlagSpace space(fam, field);
    int used = 0;
    for (const auto& x : list_x(fam.n, p, true)) {
      if (used >= 20) break;
      if (!off_discriminant(fam, circs, x, field)) continue;
      ++used;
      std::vector<BetheSolution> sols = solve_bae(fam, field, x);
      for (const BetheSolution& s : sols)
        if (!verify_eigen(fam, space, circs, x, s))
          return {"", false, false,
                  "eigen failed p=" + std::to_string(p) + " x=" + x_str(x)};
      if (!verify_orthogonality(fam, space, x, sols))
        return {"", false, false,
                "orthogonality failed p=" + std::to_string(p) +
                    " x=" + x_str(x)};
    }
  }
  return {"", true, false, ""};
}

bool power_sum_table_ok(std::uint64_t p) {
  PrimeField field(p);
  for (std::uint64_t i = 1; i < 3 * (p - 1); ++i) {
    fp_t s = 0;
    for (fp_t t = 0; t < p; ++t) s = field.add(s, field.pow(t, i));
    fp_t expect = (i % (p - 1) == 0) ? field.neg(1) : 0;
    if (s != expect) return false;
  }
  return true;
}

// Naive sum over F_p^k of a monomial must vanish below total degree k(p-1).
bool low_degree_sums_ok(int k, std::uint64_t p) {
  PrimeField field(p);
  std::vector<std::uint32_t> e(k, 0);
  std::uint32_t cap = static_cast<std::uint32_t>(k * (p - 1));
  for (;;) {
    std::uint32_t deg = 0;
    for (auto v : e) deg += v;
    if (deg < cap) {
      fp_t s = 0;
      std::vector<fp_t> t(k, 0);
      for (;;) {
        fp_t m = 1;
        for (int i = 0; i < k; ++i) m = field.mul(m, field.pow(t[i], e[i]));
        s = field.add(s, m);
        int i = k - 1;
        while (i >= 0 && ++t[i] == p) t[i--] = 0;
        if (i < 0) break;
      }
      if (s != 0) return false;
    }
    int i = k - 1;
    while (i >= 0 && ++e[i] == cap) e[i--] = 0;
    if (i < 0) break;
  }
  return true;
}

bool lc_symmetry_ok(const ArrangementFamily& fam, std::uint64_t p) {
  PrimeField field(p);
  FlagSpace space(fam, field);
  for (const Circuit& c : circuits(fam)) {
    FpMatrix m = space.lc_matrix(c);
    for (int u = 0; u < space.dim(); ++u)
      for (int v = 0; v < space.dim(); ++v)
        if (field.mul(space.form_diagonal(v), m.at(v, u)) !=
            field.mul(space.form_diagonal(u), m.at(u, v)))
          return false;
  }
  return true;
}

bool hamiltonian_symmetry_ok(const ArrangementFamily& fam, std::uint64_t p,
                             int points) {
  PrimeField field(p);
  FlagSpace space(fam, field);
  std::vector<Circuit> circs = circuits(fam);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  int found = 0;
  while (found < points) {
    std::vector<fp_t> x(fam.n);
    for (auto& v : x) v = dist(rng);
    if (!off_discriminant(fam, circs, x, field)) continue;
    ++found;
    for (int i = 0; i < fam.n; ++i) {
      FpMatrix ki = space.hamiltonian(circs, i, x);
      for (int r = 0; r < space.dim(); ++r)
        for (int c = 0; c < space.dim(); ++c)
          if (field.mul(space.form_diagonal(r), ki.at(r, c)) !=
              field.mul(space.form_diagonal(c), ki.at(c, r)))
            return false;
    }
  }
  return true;
}

Criterion crit_structural() {
  for (std::uint64_t p : {5, 7, 11, 13})
    if (!power_sum_table_ok(p))
      return {"", false, false, "power sums p=" + std::to_string(p)};
  for (int k = 1; k <= 3; ++k)
    for (std::uint64_t p : {5, 7})
      if (!low_degree_sums_ok(k, p))
        return {"", false, false,
                "low-degree sums k=" + std::to_string(k) +
                    " p=" + std::to_string(p)};
  if (!lc_symmetry_ok(k1n3(), 7) || !lc_symmetry_ok(k2n4(), 5) ||
      !lc_symmetry_ok(k2n4(), 7))
    return {"", false, false, "circuit operator symmetry"};
  if (!hamiltonian_symmetry_ok(k1n3(), 7, 20) ||
      !hamiltonian_symmetry_ok(k2n4(), 7, 20))
    return {"", false, false, "hamiltonian symmetry"};
  return {"", true, false, ""};
}

Criterion crit_module() {
  ArrangementFamily fam = k1n3();
  PrimeField field(5);
  FlagSpace space(fam, field);
  std::vector<Circuit> circs = circuits(fam);
  SolutionVector sol = default_solution(fam, space);
  if (!verify_solution(fam, space, circs, sol.coords))
    return {"", false, false, "base solution failed"};
  if (!module_closure_check(fam, space, circs, sol.coords))
    return {"", false, false, "z_i^p multiple failed"};
  for (int i = 0; i < fam.n; ++i) {
    MultiPoly zi = MultiPoly::variable(field, fam.n + fam.k, i);
    FlagVec<MultiPoly> scaled;
    for (const MultiPoly& c : sol.coords) scaled.push_back(c * zi);
    if (verify_solution(fam, space, circs, scaled))
      return {"", false, false,
              "z_" + std::to_string(i + 1) + " multiple passed unexpectedly"};
  }
  return {"", true, false, ""};
}

Criterion crit_mutation() {
  ArrangementFamily fam = k1n3();
  PrimeField field(5);
  FlagSpace space(fam, field);
  std::vector<Circuit> circs = circuits(fam);
  SolutionVector sol = default_solution(fam, space);

  // Any single-coefficient perturbation must break verification.
  for (int e = 0; e < space.dim(); ++e)
    for (const auto& [mon, c] : sol.coords[e].terms()) {
      FlagVec<MultiPoly> mut = sol.coords;
      mut[e].add_term(mon, std::int64_t{1});
      if (verify_solution(fam, space, circs, mut))
        return {"", false, false, "coefficient perturbation undetected"};
    }

  // Any single sign flip in a circuit operator must be caught by the
  // sampled differential equations at some off-discriminant point.
  std::vector<FpMatrix> lc;
  for (const Circuit& c : circs) lc.push_back(space.lc_matrix(c));
  std::vector<std::vector<fp_t>> probes;
  for (const auto& x : list_x(fam.n, field.p(), true)) {
    if (probes.size() >= 8) break;
    if (off_discriminant(fam, circs, x, field)) probes.push_back(x);
  }
  fp_t kap = field.reduce(fam.kappa);
  std::vector<fp_t> full(fam.n + fam.k, 0);
  for (std::size_t ci = 0; ci < lc.size(); ++ci)
    for (int r = 0; r < space.dim(); ++r)
      for (int c = 0; c < space.dim(); ++c) {
        if (lc[ci].at(r, c) == 0) continue;
        std::vector<FpMatrix> mut = lc;
        mut[ci].at(r, c) = field.neg(mut[ci].at(r, c));
        bool detected = false;
        for (const auto& x : probes) {
          for (int i = 0; i < fam.n; ++i) full[i] = x[i];
          FlagVec<fp_t> ival(space.dim());
          for (int e = 0; e < space.dim(); ++e)
            ival[e] = sol.coords[e].eval(full);
          for (int i = 0; i < fam.n && !detected; ++i) {
            FpMatrix ki = space.hamiltonian_from(circs, mut, i, x);
            FlagVec<fp_t> rhs = space.matvec(ki, ival);
            for (int e = 0; e < space.dim(); ++e)
              if (field.mul(kap, sol.coords[e].partial(i).eval(full)) !=
                  rhs[e]) {
                detected = true;
                break;
              }
          }
          if (detected) break;
        }
        if (!detected)
          return {"", false, false, "sign flip undetected in circuit operator"};
      }
  return {"", true, false, ""};
}

}  // namespace

Report run(std::ostream* log) {
  struct Entry {
    const char* name;
    Criterion (*fn)();
  };
  const Entry entries[] = {
      {"criterion 1: differential equations hold symbolically",
       crit_solutions},
      {"criterion 2: quadratic cover point counts match solutions",
       crit_elliptic},
      {"criterion 3: discrete integral identity", crit_integral},
      {"criterion 4: cubic cover point counts and intermediate sums",
       crit_cubic_cover},
      {"criterion 5: bethe eigenvectors and orthogonality", crit_bethe},
      {"criterion 6: structural identities", crit_structural},
      {"criterion 7: module structure over p-th powers", crit_module},
      {"criterion 8: mutation sensitivity", crit_mutation},
  };
  Report rep;
  for (const Entry& e : entries) {
    Criterion c = e.fn();
    c.name = e.name;
    rep.passed = rep.passed && c.passed;
    rep.lines.push_back(c);
    if (log) {
      *log << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) *log << " — " << c.detail;
      *log << "\n" << std::flush;
    }
  }
  // kappa=2 theory needs p > 3; record the guard instead of running p=3.
  rep.skip("kappa=2 families at p=3", "p must exceed 3");
  if (log) *log << "[SKIP] kappa=2 families at p=3 — p must exceed 3\n";
  return rep;
}

void print(const Report& rep, std::ostream& out) {
  for (const Criterion& c : rep.lines) {
    out << (c.skipped ? "[SKIP] " : c.passed ? "[PASS] " : "[FAIL] ")
        << c.name;
    if (!c.detail.empty()) out << " — " << c.detail;
    out << "\n";
  }
  out << (rep.passed ? "all criteria passed" : "FAILURES PRESENT") << "\n";
}

}  // namespace selftest
}  // namespace parhyp
