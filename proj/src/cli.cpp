#include "parhyp/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "parhyp/bethe.hpp"
#include "parhyp/fpcount.hpp"
#include "parhyp/json_io.hpp"
#include "parhyp/selftest.hpp"

namespace parhyp {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw ParseError("bad integer list entry: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

std::vector<fp_t> reduce_list(const PrimeField& field,
                              const std::vector<std::int64_t>& v) {
  std::vector<fp_t> out;
  for (auto a : v) out.push_back(field.reduce(a));
  return out;
}

void emit(const ordered_json& doc, const std::string& output,
          std::ostream& out) {
  std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "-") {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) throw ParseError("cannot write " + output);
    f << text;
  }
}

// Shared context for the subcommands that assume a good prime.
struct Session {
  ArrangementFamily fam;
  PrimeField field;
  FlagSpace space;
  std::vector<Circuit> circs;

  Session(const std::string& path, std::uint64_t p)
      : fam(family_from_file(path)),
        field(p),
        space((check_good(fam, p), fam), field),
        circs(circuits(fam)) {}

  static const ArrangementFamily& check_good(const ArrangementFamily& fam,
                                             std::uint64_t p) {
    GoodPrimeResult gp = is_good_prime(fam, p);
    if (!gp)
      throw Error("p=" + std::to_string(p) +
                  " is not a good prime: " + gp.certificate);
    return fam;
  }
};

int cmd_circuits(const std::string& path, const std::string& output,
                 std::ostream& out) {
  ArrangementFamily fam = family_from_file(path);
  ordered_json doc;
  doc["circuits"] = circuits_to_json(circuits(fam));
  emit(doc, output, out);
  return 0;
}

int cmd_good_prime(const std::string& path, std::uint64_t p,
                   const std::string& output, std::ostream& out) {
  ArrangementFamily fam = family_from_file(path);
  GoodPrimeResult gp = is_good_prime(fam, p);
  ordered_json doc;
  doc["p"] = p;
  doc["good"] = gp.good;
  if (!gp.good) doc["certificate"] = gp.certificate;
  emit(doc, output, out);
  return gp.good ? 0 : 2;
}

int cmd_hamiltonian(const std::string& path, std::uint64_t p,
                    const std::vector<std::int64_t>& xraw,
                    const std::string& output, std::ostream& out) {
  Session s(path, p);
  if (static_cast<int>(xraw.size()) != s.fam.n)
    throw ParseError("--x needs n entries");
  std::vector<fp_t> x = reduce_list(s.field, xraw);
  ordered_json doc;
  doc["p"] = p;
  doc["x"] = x;
  ordered_json basis = ordered_json::array();
  for (const BasisIndex& b : s.space.basis()) basis.push_back(basis_key(b));
  doc["basis"] = std::move(basis);
  ordered_json mats = ordered_json::object();
  for (int i = 0; i < s.fam.n; ++i) {
    FpMatrix ki = s.space.hamiltonian(s.circs, i, x);
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < ki.dim; ++r) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < ki.dim; ++c) row.push_back(ki.at(r, c));
      rows.push_back(std::move(row));
    }
    mats["K_" + std::to_string(i + 1)] = std::move(rows);
  }
  doc["matrices"] = std::move(mats);
  emit(doc, output, out);
  return 0;
}

SolutionVector make_solution(const Session& s,
                             const std::vector<std::int64_t>& qraw,
                             const std::vector<std::int64_t>& lraw) {
  ExponentChoice choice;
  choice.A = choose_exponents(s.fam, s.field);
  choice.q = qraw.empty() ? std::vector<fp_t>(s.fam.k, 0)
                          : reduce_list(s.field, qraw);
  if (lraw.empty()) {
    choice.l.assign(s.fam.k, 1);
  } else {
    for (auto v : lraw) {
      if (v <= 0) throw ParseError("labels l must be positive");
      choice.l.push_back(static_cast<std::uint32_t>(v));
    }
  }
  if (static_cast<int>(choice.q.size()) != s.fam.k ||
      static_cast<int>(choice.l.size()) != s.fam.k)
    throw ParseError("--q and --l need k entries");
  return solution_vector(s.fam, s.space, choice);
}

int cmd_solve(const std::string& path, std::uint64_t p,
              const std::vector<std::int64_t>& qraw,
              const std::vector<std::int64_t>& lraw, const std::string& output,
              std::ostream& out) {
  Session s(path, p);
  SolutionVector sol = make_solution(s, qraw, lraw);
  VerifyReport rep = verify_solution(s.fam, s.space, s.circs, sol.coords);
  ordered_json doc;
  doc["p"] = p;
  ordered_json body = solution_to_json(s.space, sol);
  for (auto& [key, val] : body.items()) doc[key] = std::move(val);
  doc["verified"] = rep.passed;
  emit(doc, output, out);
  return rep.passed ? 0 : 1;
}

int cmd_verify(const std::string& path, std::uint64_t p,
               const std::string& solution_path, const std::string& mode,
               std::uint64_t seed, int samples, const std::string& output,
               std::ostream& out) {
  Session s(path, p);
  std::ifstream in(solution_path);
  if (!in) throw ParseError("cannot open " + solution_path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(solution_path + ": " + e.what());
  }
  SolutionVector sol = solution_from_json(s.space, j);
  VerifyMode m =
      mode == "sampled" ? VerifyMode::kSampled : VerifyMode::kSymbolic;
  VerifyReport rep =
      verify_solution(s.fam, s.space, s.circs, sol.coords, m, samples, seed);
  ordered_json doc = report_to_json(rep);
  emit(doc, output, out);
  return rep.passed ? 0 : 1;
}

int cmd_count(const std::string& path, std::uint64_t p,
              const std::vector<std::int64_t>& xraw,
              std::optional<std::int64_t> kappa_override,
              const std::string& output, std::ostream& out) {
  Session s(path, p);
  if (static_cast<int>(xraw.size()) != s.fam.n)
    throw ParseError("--x needs n entries");
  std::vector<fp_t> x = reduce_list(s.field, xraw);
  std::int64_t kappa = kappa_override.value_or(s.fam.kappa);
  if (kappa < 2) throw ParseError("kappa must be at least 2");
  Hypersurface h = enumerate_hypersurface(s.fam, s.space, x,
                                          static_cast<std::uint32_t>(kappa));
  SolutionVector sol = make_solution(s, {}, {});
  std::vector<fp_t> full(s.fam.n + s.fam.k, 0);
  for (int i = 0; i < s.fam.n; ++i) full[i] = x[i];
  ordered_json doc;
  doc["points"] = h.points.size();
  ordered_json integrals = ordered_json::object();
  ordered_json values = ordered_json::object();
  bool match = true;
  for (int e = 0; e < s.space.dim(); ++e) {
    std::string key = basis_key(s.space.basis()[e]);
    fp_t integral = hypersurface_integral(s.fam, s.space, h, e);
    fp_t val = sol.coords[e].eval(full);
    integrals[key] = integral;
    values[key] = val;
    fp_t expect = s.fam.k % 2 ? s.field.neg(val) : val;
    if (integral != expect) match = false;
  }
  doc["integrals"] = std::move(integrals);
  doc["solution_values"] = std::move(values);
  doc["match"] = match;
  emit(doc, output, out);
  return match ? 0 : 1;
}

int cmd_bethe(const std::string& path, std::uint64_t p,
              const std::vector<std::int64_t>& xraw, const std::string& output,
              std::ostream& out) {
  Session s(path, p);
  if (static_cast<int>(xraw.size()) != s.fam.n)
    throw ParseError("--x needs n entries");
  std::vector<fp_t> x = reduce_list(s.field, xraw);
  if (!off_discriminant(s.fam, s.circs, x, s.field))
    throw OnDiscriminant("x lies on the discriminant");
  std::vector<BetheSolution> sols = solve_bae(s.fam, s.field, x);
  bool all_ok = true;
  ordered_json jsols = ordered_json::array();
  for (const BetheSolution& bs : sols) {
    if (!verify_eigen(s.fam, s.space, s.circs, x, bs)) all_ok = false;
    ordered_json js;
    js["t0"] = bs.t;
    ordered_json eig = ordered_json::array();
    for (int i = 0; i < s.fam.n; ++i) {
      fp_t fi = x[i];
      for (int c = 0; c < s.fam.k; ++c)
        fi = s.field.add(fi,
                         s.field.mul(s.field.reduce(s.fam.b[i][c]), bs.t[c]));
      eig.push_back(s.field.mul(s.field.reduce(s.fam.weights[i]),
                                s.field.inv(fi)));
    }
    js["eigenvalues"] = std::move(eig);
    FlagVec<fp_t> v = bethe_vector(s.fam, s.space, x, bs.t);
    ordered_json jv = ordered_json::object();
    for (int e = 0; e < s.space.dim(); ++e)
      jv[basis_key(s.space.basis()[e])] = v[e];
    js["vector"] = std::move(jv);
    jsols.push_back(std::move(js));
  }
  VerifyReport orth = verify_orthogonality(s.fam, s.space, x, sols);
  if (!orth.passed) all_ok = false;
  ordered_json doc;
  doc["solutions"] = std::move(jsols);
  doc["orthogonality"] = orth.passed ? "pass" : "fail";
  emit(doc, output, out);
  return all_ok ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact mod-p solver for families of parallelly transported "
               "hyperplanes"};
  app.require_subcommand(1);

  std::string input, output, xs, qs, ls, mode = "symbolic", solution_path;
  std::uint64_t p = 0, seed = 0;
  int samples = 50;
  std::int64_t kappa_cli = 0;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "arrangement JSON file")->required();
    sub->add_option("-o,--output", output, "output path (default stdout)");
  };
  auto add_p = [&](CLI::App* sub) {
    sub->add_option("-p,--prime", p, "prime modulus")->required();
  };

  CLI::App* c_circ = app.add_subcommand("circuits", "list matroid circuits");
  add_input(c_circ);
  CLI::App* c_good = app.add_subcommand("good-prime", "certify a good prime");
  add_input(c_good);
  add_p(c_good);
  CLI::App* c_ham =
      app.add_subcommand("hamiltonian", "dump the Hamiltonian matrices");
  add_input(c_ham);
  add_p(c_ham);
  c_ham->add_option("--x", xs, "evaluation point, comma list")->required();
  CLI::App* c_solve =
      app.add_subcommand("solve", "build and verify a Taylor solution");
  add_input(c_solve);
  add_p(c_solve);
  c_solve->add_option("--q", qs, "expansion point, comma list (default 0)");
  c_solve->add_option("--l", ls, "labels, comma list (default 1)");
  CLI::App* c_verify =
      app.add_subcommand("verify", "verify a serialized solution");
  add_input(c_verify);
  add_p(c_verify);
  c_verify->add_option("--solution", solution_path, "solution JSON file")
      ->required();
  c_verify->add_option("--mode", mode, "symbolic or sampled")
      ->check(CLI::IsMember({"symbolic", "sampled"}));
  c_verify->add_option("--seed", seed, "sampled-mode seed");
  c_verify->add_option("--samples", samples, "sampled-mode point count");
  CLI::App* c_count =
      app.add_subcommand("count", "hypersurface point-count identity");
  add_input(c_count);
  add_p(c_count);
  c_count->add_option("--x", xs, "evaluation point, comma list")->required();
  c_count->add_option("--kappa", kappa_cli, "cover degree override");
  CLI::App* c_bethe = app.add_subcommand("bethe", "solve the Bethe equations");
  add_input(c_bethe);
  add_p(c_bethe);
  c_bethe->add_option("--x", xs, "evaluation point, comma list")->required();
  CLI::App* c_self =
      app.add_subcommand("selftest", "run the full acceptance suite");
  (void)c_self;

  std::vector<const char*> argv;
  argv.push_back("parhyp");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_circ->parsed()) return cmd_circuits(input, output, out);
    if (c_good->parsed()) return cmd_good_prime(input, p, output, out);
    if (c_ham->parsed())
      return cmd_hamiltonian(input, p, parse_int_list(xs), output, out);
    if (c_solve->parsed())
      return cmd_solve(input, p,
                       qs.empty() ? std::vector<std::int64_t>{}
                                  : parse_int_list(qs),
                       ls.empty() ? std::vector<std::int64_t>{}
                                  : parse_int_list(ls),
                       output, out);
    if (c_verify->parsed())
      return cmd_verify(input, p, solution_path, mode, seed, samples, output,
                        out);
    if (c_count->parsed())
      return cmd_count(input, p, parse_int_list(xs),
                       kappa_cli > 0
                           ? std::optional<std::int64_t>(kappa_cli)
                           : std::nullopt,
                       output, out);
    if (c_bethe->parsed())
      return cmd_bethe(input, p, parse_int_list(xs), output, out);
    if (c_self->parsed()) {
      selftest::Report rep = selftest::run(&out);
      out << (rep.passed ? "all criteria passed" : "FAILURES PRESENT")
          << "\n";
      return rep.passed ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace parhyp
