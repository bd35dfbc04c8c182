// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "fintop/axioms.hpp"
#include "fintop/catalog.hpp"
#include "fintop/report.hpp"
#include "fintop/suite.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fintop;
using testing_support::labels;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects the failed conditions of one criterion.
class Criterion {
public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string failures() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + f;
    return out;
  }

private:
  std::vector<std::string> failures_;
};

int exit_status(const std::string& args) {
  const std::string cmd = std::string(FINTOP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string ac1(Criterion& c) {
  const auto e1 = named_space("e1");
  const SubsetMask b = labels(e1, {"b"});
  const SubsetMask cc = labels(e1, {"c"});
  const auto start = Clock::now();
  const SemiAnalysis a(e1);
  const SubsetMask meet_kernel = semi_kernel(a, b & cc);
  const SubsetMask kernel_meet = semi_kernel(a, b) & semi_kernel(a, cc);
  const double ms = seconds_since(start) * 1000.0;
  c.require(meet_kernel.empty(), "Λ_s({b}∩{c}) = " + render_set(e1, meet_kernel));
  c.require(kernel_meet == labels(e1, {"b", "c"}), "Λ_s({b})∩Λ_s({c}) = " + render_set(e1, kernel_meet));
  c.require(ms < 1.0, "took " + std::to_string(ms) + " ms");
  std::ostringstream out;
  out << "Λ_s({b}∩{c}) = " << render_set(e1, meet_kernel) << ", Λ_s({b})∩Λ_s({c}) = "
      << render_set(e1, kernel_meet) << " in " << ms << " ms";
  return out.str();
}

std::string ac2(Criterion& c) {
  const auto e33 = named_space("e33");
  const SemiAnalysis a(e33);
  const auto fam = generalized_families(a);
  const std::string d_lambda = render_family(e33, fam.d_lambda);
  const std::string d_v = render_family(e33, fam.d_v);
  c.require(d_lambda == "{∅,{a},{b},{a,b},{a,c},{b,c},X}", "D^Λs = " + d_lambda);
  c.require(d_v == "{∅,{a},{b},{c},{a,c},{b,c},X}", "D^Vs = " + d_v);
  return "D^Λs = " + d_lambda + ", D^Vs = " + d_v;
}

std::string ac3(Criterion& c) {
  const auto e3a = named_space("e3a");
  const auto p3a = axiom_profile(e3a);
  const auto sub = axiom_profile(subspace(e3a, labels(e3a, {"a", "c"})));
  const auto sier = axiom_profile(named_space("sierpinski"));
  const auto ind = axiom_profile(indiscrete_space(2));
  c.require(p3a.semi_t1.holds, "E3a not semi-T1");
  c.require(!p3a.r0.holds, "E3a is R0");
  c.require(!sub.semi_r0.holds, "subspace {a,c} of E3a is semi-R0");
  c.require(!sier.semi_r0.holds, "Sierpinski is semi-R0");
  c.require(ind.semi_r0.holds, "indiscrete(2) not semi-R0");
  c.require(!ind.semi_t1.holds, "indiscrete(2) is semi-T1");
  return "E3a semi-T1 and not R0; E3a|{a,c} not semi-R0; Sierpinski not semi-R0; "
         "indiscrete(2) semi-R0 and not semi-T1";
}

std::string ac4(Criterion& c) {
  std::vector<Law> expected;
  for (auto& l : register_laws()) {
    if (l.status == LawStatus::ExpectedHolds) expected.push_back(std::move(l));
  }
  c.require(expected.size() >= 25, "only " + std::to_string(expected.size()) + " expected-holds laws");
  std::ostringstream out;
  out << expected.size() << " laws;";
  for (std::size_t n : {3u, 4u}) {
    const auto spaces = enumerated_entries(n);
    const auto start = Clock::now();
    const auto report = run_suite(spaces, expected, {1, 3});
    const double secs = seconds_since(start);
    std::size_t failures = 0;
    for (const auto& o : report.laws) failures += o.failed;
    c.require(report.spaces_examined == (n == 3 ? 29u : 355u), "wrong space count at n=" + std::to_string(n));
    c.require(failures == 0, std::to_string(failures) + " failures at n=" + std::to_string(n));
    c.require(secs < 60.0, "n=" + std::to_string(n) + " took " + std::to_string(secs) + " s");
    out << " n=" << n << ": " << report.spaces_examined << " spaces, " << failures << " failures, "
        << secs << " s;";
  }
  return out.str();
}

std::string ac5(Criterion& c) {
  std::ostringstream out;
  out << "counts";
  for (int n = 1; n <= 4; ++n) {
    const std::size_t got = enumerate_topologies(static_cast<std::size_t>(n)).size();
    const std::size_t want = oracle::count_topologies(n);
    c.require(got == want, "n=" + std::to_string(n) + ": " + std::to_string(got) + " vs oracle " +
                               std::to_string(want));
    out << " " << got;
  }
  c.require(enumerate_topologies(3).size() == 29 && enumerate_topologies(4).size() == 355,
            "counts differ from 29/355");
  out << " (oracle agrees)";
  return out.str();
}

std::string ac6(Criterion& c) {
  const auto entry = named_entry("discrete:2");
  const SemiAnalysis a(entry.space);
  const SubsetMask singles = g_v_s_singletons(a);
  const SubsetMask derived = derived_set(entry.space);
  c.require(singles == entry.space.universe(), "g.V_s singletons = " + render_set(entry.space, singles));
  c.require(derived.empty(), "D(X) = " + render_set(entry.space, derived));

  const auto registry = register_laws();
  const Law* law = find_law(registry, "cor-4-cantor-bendixson");
  c.require(law && law->status == LawStatus::Disputed, "corollary not registered as disputed");
  if (!law) return "missing law";
  const auto report = run_suite({entry}, {*law});
  const auto& o = report.laws.front();
  c.require(o.dispute_confirmed && !o.witnesses.empty(), "dispute not reproduced");
  c.require(report.exit_code() == 0, "suite exit code " + std::to_string(report.exit_code()));
  const int cli = exit_status("laws --law cor-4-cantor-bendixson --space discrete:2");
  c.require(cli == 0, "CLI exit code " + std::to_string(cli));
  return "g.V_s singletons = " + render_set(entry.space, singles) + ", D(X) = " +
         render_set(entry.space, derived) + ", verdict " + outcome_verdict(o) + ", CLI exit " +
         std::to_string(cli);
}

std::string ac7(Criterion& c) {
  const auto w = khalimsky_window(-7, 7);
  const auto& s = w.space;
  const auto p = axiom_profile(s);
  c.require(p.semi_t1.holds && p.semi_r0.holds, "window [-7,7] not semi-T1/semi-R0");
  c.require(!p.t1.holds && !p.r0.holds, "window [-7,7] is T1 or R0");
  c.require(!w.boundary_warning, "unexpected boundary warning on [-7,7]");
  for (std::size_t x = 0; x < s.size(); ++x) {
    const auto v = w.value(x);
    const SubsetMask single = SubsetMask::singleton(x);
    if (is_even(v)) {
      c.require(s.is_closed(single), "{" + s.name(x) + "} not closed");
    } else {
      c.require(set_class(s, single).regular_open, "{" + s.name(x) + "} not regular open");
    }
  }
  const auto cut = khalimsky_window(-2, 2);
  c.require(cut.boundary_warning, "no boundary warning on [-2,2]");
  c.require(!axiom_profile(cut.space).semi_t1.holds, "window [-2,2] is semi-T1");
  return "[-7,7]: t1=false r0=false semi_t1=true semi_r0=true, odd singletons regular open, "
         "even singletons closed; [-2,2]: warning, semi_t1=false";
}

std::string ac8(Criterion& c) {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<std::size_t> size(6, 10);
  std::size_t violations = 0;
  constexpr int kSamples = 1000;
  for (int i = 0; i < kSamples; ++i) {
    const std::size_t n = size(rng);
    const auto space = testing_support::random_topology(n, rng);
    const SemiAnalysis a(space);
    const SubsetMask b = testing_support::random_subset(n, rng);
    const SubsetMask sub = b & testing_support::random_subset(n, rng);
    const SubsetMask k = semi_kernel(a, b);
    const bool ok = semi_kernel(a, space.complement(b)) == space.complement(v_s(a, b)) &&
                    semi_kernel(a, k) == k && b.subset_of(k) &&
                    semi_kernel(a, sub).subset_of(k) && v_s(a, b).subset_of(b);
    violations += ok ? 0 : 1;
  }
  c.require(violations == 0, std::to_string(violations) + " violations");
  return std::to_string(kSamples) + " samples at n=6..10, " + std::to_string(violations) + " violations";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<std::string(Criterion&)>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Criterion c;
    std::string summary;
    try {
      summary = run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    if (c.ok()) {
      std::cout << name << " PASS " << summary << "\n";
    } else {
      ++failed;
      std::cout << name << " FAIL " << c.failures() << "\n";
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
