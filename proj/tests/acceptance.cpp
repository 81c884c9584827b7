// Acceptance run: one line per criterion with its status, case count and
// runtime against the allowed limit.

#include <cstdio>
#include <string>

#include "wittforge/verify.hpp"

int main() {
  using namespace wittforge;
  static const char* descriptions[] = {
      "transfer of <1> along F9/F3 is [[2,0],[0,1]] and of <alpha> is hyperbolic",
      "triangle identities and Cartan isomorphism for extensions of degree <= 9",
      "transfer along towers equals the composite of transfers",
      "base change and projection formula on randomized extensions",
      "x_map = theta for d <= 4 and multiplicativity of theta for all splits",
      "graded exactness of Koszul complexes for d <= 4; (x, x) rejected",
      "split factorization: cone for d = 1, tensor factorization for d = 2, 3",
      "vanishing of O(m) on P^r for -r <= m <= -1, phi_r for r = 1, 3, ParityError for r = 2",
      "Witt ring axioms, <1,1,1,1> = 2H over F3 and F5, Hilbert reciprocity",
      "bidual coherence on 100 random bounded free complexes",
  };
  VerifyOptions opt;
  opt.seed = 42;
  opt.bound = 6;
  opt.cases = 60;
  int failures = 0;
  std::size_t index = 0;
  for (const auto& entry : all_suites()) {
    const SuiteResult r = run_suite(entry, opt);
    const bool in_time = r.seconds < entry.limit;
    const bool ok = r.passed() && in_time;
    if (!ok) ++failures;
    std::printf("[%s] criterion %2zu: %s (%zu/%zu cases, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", index + 1, descriptions[index],
                r.count(CaseStatus::Pass), r.cases.size(), r.seconds, entry.limit);
    for (const auto& c : r.cases)
      if (c.status != CaseStatus::Pass) std::printf("         %s %s: %s\n", c.id.c_str(), to_string(c.status).c_str(), c.witness.c_str());
    if (!in_time) std::printf("         runtime %.2f s exceeds %.0f s\n", r.seconds, entry.limit);
    ++index;
  }
  std::printf("%d of %zu criteria failed\n", failures, all_suites().size());
  return failures == 0 ? 0 : 1;
}
