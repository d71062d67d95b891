#ifndef PARHYP_SELFTEST_HPP
#define PARHYP_SELFTEST_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "parhyp/arrangement.hpp"

namespace parhyp {
namespace examples {

// The bundled example families, also shipped under data/.
ArrangementFamily k1n3();    // n=3, k=1, b all [1], a all -1, kappa=2
ArrangementFamily k1n4();    // n=4 variant
ArrangementFamily k2n4();    // k=2, b=[[1,0],[0,1],[1,1],[1,-1]], a all -1
ArrangementFamily kappa3();  // kappa=3, k=1, n=3, a all -2

// k2n4 with mixed weights a=(1,1,2,1), kappa=2: its Taylor solutions are
// nonzero at small p, unlike k2n4 whose solutions vanish identically.
ArrangementFamily k2n4_mixed();

}  // namespace examples

namespace selftest {

struct Criterion {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct Report {
  std::vector<Criterion> lines;
  bool passed = true;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    passed = passed && ok;
    lines.push_back({name, ok, false, detail});
  }
  void skip(const std::string& name, const std::string& why) {
    lines.push_back({name, true, true, why});
  }
};

// Runs the eight acceptance criteria on the bundled families; one line per
// criterion, written to `log` as it goes when non-null.
Report run(std::ostream* log = nullptr);

void print(const Report& rep, std::ostream& out);

}  // namespace selftest
}  // namespace parhyp

#endif
