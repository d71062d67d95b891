#include "parhyp/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace parhyp {

bool MultiPoly::GradedLexLess::operator()(const Exp& a, const Exp& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(const PrimeField& field, int nvars)
    : field_(field), nvars_(nvars) {}

MultiPoly MultiPoly::constant(const PrimeField& field, int nvars,
                              std::int64_t c) {
  MultiPoly f(field, nvars);
  f.add_term(Exp(nvars, 0), c);
  return f;
}

MultiPoly MultiPoly::variable(const PrimeField& field, int nvars, int var,
                              std::int64_t coeff) {
  MultiPoly f(field, nvars);
  Exp e(nvars, 0);
  e[var] = 1;
  f.add_term(e, coeff);
  return f;
}

void MultiPoly::add_term(const Exp& e, std::int64_t c) {
  add_term(e, field_.reduce(c));
}

void MultiPoly::add_term(const Exp& e, fp_t c) {
  c %= field_.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_ || !(field_ == o.field_))
    throw VariableMismatch("polynomials live in different variable contexts");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, field_.neg(c));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  MultiPoly r(field_, nvars_);
  Exp e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, field_.mul(c1, c2));
    }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return nvars_ == o.nvars_ && field_ == o.field_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::scaled(fp_t c) const {
  MultiPoly r(field_, nvars_);
  c %= field_.p();
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.terms_.emplace(e, field_.mul(cc, c));
  return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly r = constant(field_, nvars_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

MultiPoly MultiPoly::partial(int var) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    fp_t cc = field_.mul(c, e[var] % field_.p());
    if (cc == 0) continue;
    Exp e2 = e;
    --e2[var];
    r.terms_.emplace(e2, cc);
  }
  return r;
}

std::vector<fp_t> binomial_row(const PrimeField& field, std::uint32_t m) {
  // Additive Pascal recurrence; exact for rows past p where factorials vanish.
  std::vector<fp_t> row(m + 1, 0);
  row[0] = 1;
  for (std::uint32_t i = 1; i <= m; ++i)
    for (std::uint32_t j = i; j >= 1; --j)
      row[j] = field.add(row[j], row[j - 1]);
  return row;
}

MultiPoly MultiPoly::shift(int var, fp_t q) const {
  q %= field_.p();
  if (q == 0) return *this;
  MultiPoly r(field_, nvars_);
  std::uint32_t maxdeg = 0;
  for (const auto& [e, c] : terms_) maxdeg = std::max(maxdeg, e[var]);
  std::vector<std::vector<fp_t>> rows(maxdeg + 1);
  std::vector<fp_t> qpow(maxdeg + 1, 1);
  for (std::uint32_t i = 1; i <= maxdeg; ++i)
    qpow[i] = field_.mul(qpow[i - 1], q);
  for (const auto& [e, c] : terms_) {
    std::uint32_t m = e[var];
    if (rows[m].empty()) rows[m] = binomial_row(field_, m);
    Exp e2 = e;
    for (std::uint32_t i = 0; i <= m; ++i) {
      e2[var] = i;
      r.add_term(e2, field_.mul(c, field_.mul(rows[m][i], qpow[m - i])));
    }
  }
  return r;
}

MultiPoly MultiPoly::shift_block(int first_var,
                                 const std::vector<fp_t>& q) const {
  MultiPoly r = *this;
  for (std::size_t i = 0; i < q.size(); ++i)
    r = r.shift(first_var + static_cast<int>(i), q[i]);
  return r;
}

MultiPoly MultiPoly::coeff_of(int first_var,
                              const std::vector<std::uint32_t>& exp) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    bool match = true;
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (e[first_var + static_cast<int>(i)] != exp[i]) {
        match = false;
        break;
      }
    if (!match) continue;
    Exp e2 = e;
    for (std::size_t i = 0; i < exp.size(); ++i)
      e2[first_var + static_cast<int>(i)] = 0;
    r.terms_.emplace(e2, c);
  }
  return r;
}

fp_t MultiPoly::eval(const std::vector<fp_t>& point) const {
  fp_t total = 0;
  for (const auto& [e, c] : terms_) {
    fp_t v = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) v = field_.mul(v, field_.pow(point[i] % field_.p(), e[i]));
    total = field_.add(total, v);
  }
  return total;
}

MultiPoly MultiPoly::eval_partial(
    const std::vector<std::optional<fp_t>>& vals) const {
  MultiPoly r(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    fp_t v = c;
    Exp e2 = e;
    for (int i = 0; i < nvars_; ++i)
      if (vals[i] && e[i]) {
        v = field_.mul(v, field_.pow(*vals[i] % field_.p(), e[i]));
        e2[i] = 0;
      }
    r.add_term(e2, v);
  }
  return r;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // Graded order: the last term carries the top degree.
  const Exp& e = terms_.rbegin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(e[var]));
  return d;
}

}  // namespace parhyp
