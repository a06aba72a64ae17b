// Acceptance run: one PASS/FAIL line per criterion, details on the same line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "quiverq/cli.hpp"
#include "quiverq/reptype.hpp"

using namespace quiverq;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    out.pass = false;
    out.detail << " [over time limit " << limit_seconds << " s]";
  }
  if (!out.pass) ++failures;
  std::printf("%s %2d %s (%.2f s):%s\n", out.pass ? "PASS" : "FAIL", id, title, secs, out.detail.str().c_str());
  std::fflush(stdout);
}

template <ScalarField F>
GradedQuotient<F> build(const CayleyQuiver& cq, const F& f, std::size_t max_degree) {
  QuotientOptions o;
  o.max_degree = max_degree;
  return GradedQuotient<F>(cq.quiver(), f, elements(ideal_generators(cq, f)), o);
}

std::vector<long long> pbw_oracle(const CartanMatrix& c, int n) {
  std::vector<int> heights;
  for (const auto& r : positive_roots(c)) heights.push_back(root_height(r));
  return oracle::pbw_series(heights, c.rank(), n, nilpotency_order(n));
}

struct Instance {
  const char* type;
  int n;
  bool modular;
};

const Instance kPbwInstances[] = {{"A1", 5, false}, {"A1", 6, false}, {"A1xA1", 5, false}, {"A2", 5, true}};

/// Graded dimensions of kQ/J up to one past the PBW top degree.
std::vector<std::size_t> graded(const Instance& in, bool& nilpotent) {
  const auto c = cartan_from_type(in.type);
  CayleyQuiver cq(c, in.n);
  const std::size_t cap = static_cast<std::size_t>(pbw_top_degree(c, in.n)) + 1;
  if (in.modular) {
    PrimeField f(in.n);
    auto g = build(cq, f, cap);
    nilpotent = !g.truncated();
    return g.graded_dimensions();
  }
  CyclotomicField f(in.n);
  auto g = build(cq, f, cap);
  nilpotent = !g.truncated();
  return g.graded_dimensions();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void checks_pass(Outcome& out, const RunConfig& cfg, const std::string& label) {
  const auto res = run(cfg);
  out.require(!res.report.contains("error"), label + " error " + res.error);
  std::size_t passed = 0, total = 0;
  for (const auto& c : res.report["checks"]) {
    ++total;
    if (c["passed"] == true) {
      ++passed;
    } else {
      std::string detail = c["detail"].is_null() ? "" : " " + c["detail"].dump();
      out.require(false, label + " " + c["name"].get<std::string>() + detail);
    }
  }
  out.detail << " " << label << " " << passed << "/" << total;
}

RunConfig verify_config(const char* type, int n, std::vector<std::string> suites) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.type = type;
  cfg.n = n;
  cfg.backend = "exact";
  cfg.suites = std::move(suites);
  return cfg;
}

}  // namespace

int main() {
  criterion(1, "sl2 quiver shape", 1.0, [](Outcome& out) {
    CayleyQuiver c5(cartan_from_type("A1"), 5);
    const auto& q = c5.quiver();
    bool cycle = q.num_vertices() == 5 && q.num_arrows() == 5;
    for (VertexId v = 0; v < 5; ++v) cycle = cycle && q.arrows_into(v).size() == 1 && q.arrows_from(v).size() == 1;
    for (ArrowId a = 0; a < q.num_arrows(); ++a) cycle = cycle && (q.target(a) + 5 - q.source(a)) % 5 == 2;
    const auto comp5 = connected_components(q).count;
    out.require(cycle && comp5 == 1, "n=5 single 5-cycle with arrows K^{x-2} -> K^x");
    CayleyQuiver c6(cartan_from_type("A1"), 6);
    const auto comp6 = connected_components(c6.quiver()).count;
    out.require(comp6 == 2, "n=6 two components");
    out.detail << " n=5 components " << comp5 << ", n=6 components " << comp6;
  });

  criterion(2, "block count = |coker C|", 5.0, [](Outcome& out) {
    std::size_t cases = 0;
    for (const char* type : {"A1", "A1xA1", "A2", "A3", "D4"}) {
      for (int n : {5, 6, 7, 8}) {
        const auto c = cartan_from_type(type);
        CayleyQuiver cq(c, n);
        const auto bfs = oracle::cayley_components(c, n);
        const auto lib = connected_components(cq.quiver()).count;
        const auto coker = coker_cardinality(c, n);
        ++cases;
        out.require(bfs == lib && static_cast<long long>(bfs) == coker,
                    std::string(type) + " n=" + std::to_string(n) + " bfs " + std::to_string(bfs) + " coker " +
                        std::to_string(coker));
      }
    }
    out.detail << " " << cases << " cases";
  });

  criterion(3, "total dimension = n^t e^N", 300.0, [](Outcome& out) {
    for (const auto& in : kPbwInstances) {
      bool nilpotent = false;
      const auto g = graded(in, nilpotent);
      std::size_t total = 0;
      for (auto x : g) total += x;
      const auto expected = static_cast<std::size_t>(pbw_total_dimension(cartan_from_type(in.type), in.n));
      out.detail << " " << in.type << "/" << in.n << "=" << total << (nilpotent ? "" : "+") << "(want " << expected << ")";
      out.require(nilpotent && total == expected, std::string(in.type) + " n=" + std::to_string(in.n));
    }
    // modular A2 against the exact backend up to degree 6
    CyclotomicField fx(5);
    PrimeField fp(5);
    CayleyQuiver cq(cartan_from_type("A2"), 5);
    const auto ex = build(cq, fx, 6).graded_dimensions();
    const auto mo = build(cq, fp, 6).graded_dimensions();
    out.require(ex == mo, "A2 exact/modular cross-check through degree 6");
    out.detail << " exact=modular through degree 6: " << (ex == mo ? "yes" : "no");
  });

  criterion(4, "graded dimensions = PBW series", 300.0, [](Outcome& out) {
    for (const auto& in : kPbwInstances) {
      bool nilpotent = false;
      auto g = graded(in, nilpotent);
      while (!g.empty() && g.back() == 0) g.pop_back();
      const auto series = pbw_oracle(cartan_from_type(in.type), in.n);
      std::vector<std::size_t> want(series.begin(), series.end());
      std::size_t mismatch = 0;
      while (mismatch < g.size() && mismatch < want.size() && g[mismatch] == want[mismatch]) ++mismatch;
      const bool ok = nilpotent && g == want;
      out.require(ok, std::string(in.type) + " n=" + std::to_string(in.n) + " first mismatch at degree " +
                          std::to_string(mismatch) + ", computed " + join(g) + " vs " + join(want));
      if (ok) out.detail << " " << in.type << "/" << in.n << " ok";
    }
  });

  criterion(5, "Fourier round trip and type-II transport", 30.0, [](Outcome& out) {
    checks_pass(out, verify_config("A2", 5, {"fourier"}), "A2/5");
    checks_pass(out, verify_config("A1", 6, {"fourier"}), "A1/6");
  });

  criterion(6, "coassociativity, counit, Delta(J) in J(x)A + A(x)J", 120.0, [](Outcome& out) {
    checks_pass(out, verify_config("A2", 5, {"hopf", "ideal"}), "A2/5");
  });

  criterion(7, "crossed-product automorphism phi", 30.0, [](Outcome& out) {
    checks_pass(out, verify_config("A2", 5, {"crossed"}), "A2/5");
  });

  criterion(8, "Ext^1 between simples", 60.0, [](Outcome& out) {
    CyclotomicField f(5);
    CayleyQuiver cq(cartan_from_type("A2"), 5);
    auto g = build(cq, f, 2);
    std::size_t pairs = 0, mismatches = 0, ones = 0;
    for (VertexId s = 0; s < cq.group_order(); ++s) {
      for (VertexId t = 0; t < cq.group_order(); ++t) {
        const VertexId diff = cq.subtract(t, s);
        bool column = false;
        for (int i = 0; i < cq.rank(); ++i) column = column || diff == cq.column_element(i);
        const auto dim = radical_layer_dimension(g, s, t);
        ++pairs;
        ones += dim;
        if (dim != (column ? 1u : 0u)) ++mismatches;
      }
    }
    out.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    out.detail << " " << pairs << " pairs, " << ones << " nonzero";
  });

  criterion(9, "representation type", 60.0, [](Outcome& out) {
    for (int n : {5, 6, 7, 8}) {
      CyclotomicField f(n);
      const auto r = classify(cartan_from_type("A1"), n, f);
      out.require(r.verdict == Verdict::Finite, "A1 n=" + std::to_string(n) + " Finite");
    }
    out.detail << " A1/5..8 Finite;";
    for (const char* type : {"A3", "D4"}) {
      PrimeField f(5);
      ClassifyOptions opts;
      const auto r = classify(cartan_from_type(type), 5, f, opts);
      const bool ok = r.verdict == Verdict::Wild && r.separated && r.separated->min_level0_out_degree >= 3;
      out.require(ok, std::string(type) + " Wild by separated quiver");
      out.detail << " " << type << "/5 " << to_string(r.verdict) << " (min out-degree "
                 << (r.separated ? r.separated->min_level0_out_degree : 0) << ");";
    }
    CyclotomicField f(5);
    for (const char* type : {"A2", "A1xA1"}) {
      const auto c = cartan_from_type(type);
      ClassifyOptions opts;
      opts.with_complement = false;
      const auto r = classify(c, 5, f, opts);
      out.require(r.verdict == Verdict::Wild && r.witnesses && r.witnesses->ok(), std::string(type) + " Wild by witnesses");
      if (!r.witnesses) continue;
      const auto& s = r.witnesses->steps;
      const auto alpha = c(0, 1) == -1 ? f.q() : f.one();
      const oracle::WordCount oracles[] = {oracle::irreducible_words(f, oracle::quasipolynomial_rules(c, f), 2, 64),
                                           oracle::irreducible_words(f, oracle::cubic_pair_rules(c(0, 1), f), 2, 64),
                                           oracle::irreducible_words(f, oracle::ringel_rules(alpha, f), 2, 64)};
      const std::size_t expected[] = {25, 9, 5};
      out.detail << " " << type << "/5 " << to_string(r.verdict) << " witnesses";
      for (std::size_t k = 0; k < 3 && k < s.size(); ++k) {
        const auto& o = oracles[k];
        out.require(o.confluent && o.finite && o.dimension == s[k].dimension && s[k].dimension == expected[k],
                    s[k].name + " oracle " + std::to_string(o.dimension));
        out.detail << " " << s[k].dimension;
      }
      out.detail << ";";
    }
  });

  criterion(10, "complement witness for sl2", 60.0, [](Outcome& out) {
    for (int n : {5, 6}) {
      CyclotomicField f(n);
      CayleyQuiver cq(cartan_from_type("A1"), n);
      auto g = build(cq, f, 64);
      const auto r = complement_witness(cq, f, g);
      const auto e = static_cast<std::size_t>(nilpotency_order(n));
      out.require(r.direct_sum() && r.subalgebra == e && r.complement == static_cast<std::size_t>(n) * e - e,
                  "n=" + std::to_string(n) + " dimensions");
      out.require(r.left_stable && r.right_stable, "n=" + std::to_string(n) + " stability");
      out.detail << " n=" << n << ": " << r.subalgebra << "+" << r.complement << "=" << r.total
                 << (r.left_stable && r.right_stable ? " stable;" : " unstable;");
    }
  });

  return failures == 0 ? 0 : 1;
}
