#include "permstat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "permstat/bulldozer.hpp"
#include "permstat/counting.hpp"
#include "permstat/errors.hpp"
#include "permstat/hikita.hpp"
#include "permstat/perm.hpp"
#include "permstat/sampler.hpp"
#include "permstat/watershed.hpp"

namespace permstat {

namespace {

// Applies fn to every ordering of {1..m}; fn returns false to abort early.
template <typename Fn>
void for_each_ordering(std::size_t m, Fn&& fn) {
    std::vector<std::int64_t> elems(m);
    std::iota(elems.begin(), elems.end(), std::int64_t{1});
    do {
        if (!fn(LinearOrdering::unchecked(elems))) return;
    } while (std::next_permutation(elems.begin(), elems.end()));
}

std::vector<std::int64_t> random_values(RandomSource& rng, std::size_t count, std::int64_t lo,
                                        std::int64_t hi) {
    std::vector<std::int64_t> out(count);
    for (auto& v : out)
        v = lo + static_cast<std::int64_t>(rng.uniform_below_u64(static_cast<std::uint64_t>(hi - lo + 1)));
    return out;
}

LinearOrdering random_ordering(RandomSource& rng, std::size_t m) {
    std::vector<std::int64_t> elems(m);
    std::iota(elems.begin(), elems.end(), std::int64_t{1});
    for (std::size_t i = m; i > 1; --i)
        std::swap(elems[i - 1], elems[rng.uniform_below_u64(i)]);
    return LinearOrdering::unchecked(std::move(elems));
}

const std::vector<Rational>& sweep_q_values() {
    static const std::vector<Rational> values = {Rational(1), Rational(2), Rational(1, 2),
                                                 Rational(3, 2), Rational(5)};
    return values;
}

struct SuiteRunner {
    const VerifyOptions& opt;
    std::vector<SuiteResult> results;

    bool full() const { return opt.level == VerifyLevel::full; }

    std::size_t fast_k(const LinearOrdering& ordering) const {
        return detail::watershed_fast_impl(ordering, /*with_trace=*/false, opt.mutate_watershed).k;
    }

    WatershedResult fast_traced(const LinearOrdering& ordering) const {
        return detail::watershed_fast_impl(ordering, /*with_trace=*/true, opt.mutate_watershed);
    }

    template <typename Fn>
    void suite(const std::string& name, const std::string& scale, Fn&& body) {
        SuiteResult r;
        r.name = name;
        r.scale = scale;
        r.counterexample = nullptr;
        const auto start = std::chrono::steady_clock::now();
        try {
            r.passed = true;
            body(r);
        } catch (const std::exception& e) {
            r.passed = false;
            if (r.detail.empty()) r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }

    void fail(SuiteResult& r, std::string detail, json counterexample) {
        r.passed = false;
        if (r.detail.empty()) r.detail = std::move(detail);
        if (r.counterexample.is_null()) r.counterexample = std::move(counterexample);
    }

    // --- 1. Foata bijection round trip -----------------------------------
    void foata_roundtrip() {
        const std::size_t max_m = full() ? 8 : 6;
        suite("foata-roundtrip",
              "all orderings and cycle permutations of {1..m}, m <= " + std::to_string(max_m),
              [&](SuiteResult& r) {
                  std::size_t objects = 0;
                  for (std::size_t m = 0; m <= max_m; ++m) {
                      for_each_ordering(m, [&](const LinearOrdering& rho) {
                          ++objects;
                          if (foata(foata_inverse(rho)) != rho) {
                              fail(r, "ordering round trip failed",
                                   json{{"ordering", rho.elements()}});
                              return false;
                          }
                          return true;
                      });
                      if (!r.passed) return;
                      for_each_ordering(m, [&](const LinearOrdering& one_line) {
                          ++objects;
                          const CyclePermutation pi = cycles_from_one_line(one_line.elements());
                          if (foata_inverse(foata(pi)) != pi) {
                              fail(r, "cycle round trip failed",
                                   json{{"one_line", one_line.elements()}});
                              return false;
                          }
                          return true;
                      });
                      if (!r.passed) return;
                  }
                  r.detail = std::to_string(objects) + " round trips, zero failures";
              });
    }

    // --- 2. Record criterion for all-even cycle lengths -------------------
    void even_cycle_criterion() {
        const std::size_t max_n = full() ? 4 : 3;
        suite("even-cycle-criterion",
              "all orderings of {1..2n}, n <= " + std::to_string(max_n), [&](SuiteResult& r) {
                  std::size_t checked = 0;
                  for (std::size_t n = 0; n <= max_n && r.passed; ++n) {
                      for_each_ordering(2 * n, [&](const LinearOrdering& rho) {
                          ++checked;
                          if (even_via_records(rho) != all_cycles_even(foata_inverse(rho))) {
                              fail(r, "record criterion disagrees with cycle parity",
                                   json{{"ordering", rho.elements()}});
                              return false;
                          }
                          return true;
                      });
                  }
                  r.detail = std::to_string(checked) + " orderings, exact agreement";
              });
    }

    // --- 3. Watershed uniqueness; fast equals brute -----------------------
    void watershed_uniqueness() {
        const std::size_t max_n = full() ? 4 : 3;
        const std::size_t random_len = full() ? 100 : 40;
        const std::size_t random_count = full() ? 10000 : 1000;
        suite("watershed-uniqueness-and-fast",
              "all orderings of {1..2n}, n <= " + std::to_string(max_n) + "; " +
                  std::to_string(random_count) + " random orderings of length " +
                  std::to_string(random_len),
              [&](SuiteResult& r) {
                  std::size_t checked = 0;
                  for (std::size_t n = 0; n <= max_n && r.passed; ++n) {
                      for_each_ordering(2 * n, [&](const LinearOrdering& rho) {
                          ++checked;
                          std::size_t brute_k;
                          try {
                              brute_k = watershed_brute(rho); // throws unless exactly one k passes
                          } catch (const InternalContradictionError& e) {
                              fail(r, e.what(), json{{"ordering", rho.elements()}});
                              return false;
                          }
                          const std::size_t fast = fast_k(rho);
                          if (fast != brute_k) {
                              fail(r, "fast watershed disagrees with brute force",
                                   json{{"ordering", rho.elements()},
                                        {"brute", brute_k},
                                        {"fast", fast}});
                              return false;
                          }
                          return true;
                      });
                  }
                  if (!r.passed) return;
                  RandomSource rng = RandomSource(opt.seed).derive(3);
                  for (std::size_t i = 0; i < random_count; ++i) {
                      const LinearOrdering rho = random_ordering(rng, random_len);
                      ++checked;
                      const std::size_t brute_k = watershed_brute(rho);
                      const std::size_t fast = fast_k(rho);
                      if (fast != brute_k) {
                          fail(r, "fast watershed disagrees with brute force",
                               json{{"ordering", rho.elements()},
                                    {"brute", brute_k},
                                    {"fast", fast}});
                          return;
                      }
                  }
                  r.detail = std::to_string(checked) + " orderings, unique k everywhere, fast == brute";
              });
    }

    // --- 4. Pinned worked examples ----------------------------------------
    void worked_examples() {
        suite("watershed-worked-examples", "three pinned sequences", [&](SuiteResult& r) {
            auto expect_k = [&](std::vector<std::int64_t> elems, std::size_t expected) {
                const LinearOrdering rho(std::move(elems));
                const std::size_t fast = fast_k(rho);
                const std::size_t brute = watershed_brute(rho);
                if (fast != expected || brute != expected)
                    fail(r, "worked example mismatch",
                         json{{"ordering", rho.elements()},
                              {"expected", expected},
                              {"fast", fast},
                              {"brute", brute}});
            };
            expect_k({2, 6, 1, 5, 4, 3}, 2);
            expect_k({2, 5, 6, 7, 9, 3, 8, 4, 10, 1}, 2);

            const LinearOrdering big({12, 20, 7, 15, 13, 11, 3, 9, 14, 5,
                                      16, 10, 2, 19, 18, 4, 1, 8, 6, 17});
            const WatershedResult res = fast_traced(big);
            const std::vector<std::int64_t> right_expected = {18, 4, 1, 8, 6, 17};
            const std::vector<std::int64_t> right_actual(big.elements().begin() + res.trace.left_cut,
                                                         big.elements().end());
            if (res.k != 7 || right_actual != right_expected)
                fail(r, "20-term example mismatch",
                     json{{"expected_k", 7}, {"fast", res.k}, {"right_part", right_actual}});
            if (r.passed) r.detail = "k = 2, 2, 7 with the pinned right part";
        });
    }

    // --- 5. Counting identities --------------------------------------------
    void counting_identities() {
        const std::size_t max_n = full() ? 4 : 3;
        const std::int64_t total_n = 10;
        suite("counting-identities",
              "histograms n <= " + std::to_string(max_n) + ", totals n <= " +
                  std::to_string(total_n),
              [&](SuiteResult& r) {
                  for (std::size_t n = 0; n <= max_n && r.passed; ++n) {
                      // empirical histogram of the definition-based watershed
                      std::vector<BigCount> histogram(n + 1, 0);
                      for_each_ordering(2 * n, [&](const LinearOrdering& rho) {
                          histogram[watershed_brute(rho)] += 1;
                          return true;
                      });
                      const std::vector<BigCount> even_totals = even_total_distribution(n);
                      for (std::size_t k = 0; k <= n; ++k) {
                          const BigCount formula = watershed_count(n, k);
                          if (histogram[k] != formula)
                              fail(r, "watershed histogram disagrees with the counting formula",
                                   json{{"n", n},
                                        {"k", k},
                                        {"histogram", histogram[k].str()},
                                        {"formula", formula.str()}});
                          if (even_totals[k] != formula)
                              fail(r, "even-cycle-total count disagrees with the counting formula",
                                   json{{"n", n},
                                        {"k", k},
                                        {"even_total", even_totals[k].str()},
                                        {"formula", formula.str()}});
                      }
                  }
                  if (!r.passed) return;
                  for (std::int64_t n = 0; n <= total_n; ++n) {
                      BigCount sum = 0;
                      for (std::int64_t k = 0; k <= n; ++k) sum += watershed_count(n, k);
                      if (sum != factorial(2 * n)) {
                          fail(r, "distribution total differs from (2n)!",
                               json{{"n", n}, {"sum", sum.str()}});
                          return;
                      }
                  }
                  r.detail = "histograms, even-cycle totals and (2n)! totals all exact";
              });
    }

    // --- 6. Transition probabilities sum to one -----------------------------
    void normalization_sweep() {
        const std::size_t max_n = full() ? 5 : 3;
        const std::size_t sets_per_cell = full() ? 8 : 4;
        suite("normalization-sweep",
              "n <= " + std::to_string(max_n) + ", q in {1, 2, 1/2, 3/2, 5}, a_i, b_i <= 4",
              [&](SuiteResult& r) {
                  RandomSource rng = RandomSource(opt.seed).derive(6);
                  std::size_t sets = 0;
                  for (std::size_t n = 1; n <= max_n; ++n) {
                      for (const Rational& q : sweep_q_values()) {
                          for (std::size_t s = 0; s < sets_per_cell && r.passed; ++s) {
                              const HikitaParams params(random_values(rng, n, 1, 4),
                                                        random_values(rng, n, 1, 4), q);
                              ++sets;
                              Rational sum = 0;
                              for (std::size_t k = 0; k <= n; ++k) {
                                  const Rational phi = hikita_phi(params, k);
                                  if (phi <= 0)
                                      fail(r, "non-positive transition probability",
                                           json{{"n", n}, {"k", k}, {"q", rational_to_string(q)}});
                                  sum += phi;
                              }
                              if (sum != 1)
                                  fail(r, "transition probabilities do not sum to 1",
                                       json{{"a", params.a()},
                                            {"b", params.b()},
                                            {"q", rational_to_string(q)},
                                            {"sum", rational_to_string(sum)}});
                          }
                      }
                  }
                  if (r.passed)
                      r.detail = std::to_string(sets) + " parameter sets, exact sum 1 and positive";
              });
    }

    // --- 7. Formula equals enumerated watershed distribution ----------------
    void distribution_equivalence() {
        const std::size_t max_n = full() ? 3 : 2;
        suite("weighted-distribution-equivalence",
              "all a_i, b_i in {1,2}, n <= " + std::to_string(max_n) + ", q in {1, 2, 1/2, 3/2}",
              [&](SuiteResult& r) {
                  const std::vector<Rational> qs = {Rational(1), Rational(2), Rational(1, 2),
                                                    Rational(3, 2)};
                  std::size_t cases = 0;
                  for (std::size_t n = 1; n <= max_n; ++n) {
                      // every (a, b) with entries in {1, 2}: 2^(2n) combinations
                      const std::size_t combos = std::size_t{1} << (2 * n);
                      for (std::size_t bits = 0; bits < combos; ++bits) {
                          std::vector<std::int64_t> a(n), b(n);
                          for (std::size_t i = 0; i < n; ++i) {
                              a[i] = (bits >> i & 1u) ? 2 : 1;
                              b[i] = (bits >> (n + i) & 1u) ? 2 : 1;
                          }
                          for (const Rational& q : qs) {
                              if (!r.passed) return;
                              const HikitaParams params(a, b, q);
                              ++cases;
                              const auto formula = hikita_distribution(params);
                              const auto enumerated =
                                  exact_watershed_distribution(weights_from_params(params));
                              if (formula != enumerated)
                                  fail(r, "formula disagrees with enumerated distribution",
                                       json{{"a", a},
                                            {"b", b},
                                            {"q", rational_to_string(q)},
                                            {"formula", rationals_to_json(formula)},
                                            {"enumerated", rationals_to_json(enumerated)}});
                          }
                      }
                  }
                  if (r.passed)
                      r.detail = std::to_string(cases) + " parameter sets, exact term-by-term equality";
              });
    }

    // --- 8. Subset-maximum closed form ---------------------------------------
    void subset_max_closed_form() {
        const std::size_t max_m = full() ? 6 : 4;
        const std::size_t vectors_per_size = 4;
        suite("subset-max-closed-form",
              "ground sets m <= " + std::to_string(max_m) + ", all Q subseteq R, " +
                  std::to_string(vectors_per_size) + " random weight vectors per size",
              [&](SuiteResult& r) {
                  RandomSource rng = RandomSource(opt.seed).derive(8);
                  std::size_t vectors = 0, pairs = 0;
                  for (std::size_t m = 1; m <= max_m && r.passed; ++m) {
                      for (std::size_t v = 0; v < vectors_per_size && r.passed; ++v) {
                          std::vector<Rational> raw(m);
                          for (auto& w : raw)
                              w = Rational(1 + rng.uniform_below_u64(9),
                                           1 + rng.uniform_below_u64(9));
                          const WeightVector weights(raw);
                          ++vectors;

                          // bucket[R][i] = P(orderings whose max over R sits at i)
                          const std::size_t masks = std::size_t{1} << m;
                          std::vector<std::vector<Rational>> bucket(
                              masks, std::vector<Rational>(m + 1, Rational(0)));
                          Rational total = 0;
                          for_each_ordering(m, [&](const LinearOrdering& pi) {
                              const Rational p = ordering_probability(weights, pi);
                              total += p;
                              for (std::size_t mask = 1; mask < masks; ++mask) {
                                  std::size_t argmax = 0;
                                  for (std::size_t pos = 1; pos <= m; ++pos)
                                      if ((mask >> (pos - 1)) & 1u)
                                          if (argmax == 0 || pi.at(pos) > pi.at(argmax))
                                              argmax = pos;
                                  bucket[mask][argmax] += p;
                              }
                              return true;
                          });
                          if (total != 1) {
                              fail(r, "ordering probabilities do not sum to 1",
                                   json{{"m", m}, {"total", rational_to_string(total)}});
                              return;
                          }
                          for (std::size_t rmask = 1; rmask < masks && r.passed; ++rmask) {
                              // iterate submasks q of rmask, including empty and full
                              std::size_t qmask = rmask;
                              while (true) {
                                  std::vector<std::size_t> q_set, r_set;
                                  for (std::size_t pos = 1; pos <= m; ++pos) {
                                      if ((rmask >> (pos - 1)) & 1u) r_set.push_back(pos);
                                      if ((qmask >> (pos - 1)) & 1u) q_set.push_back(pos);
                                  }
                                  ++pairs;
                                  Rational enumerated = 0;
                                  for (std::size_t pos : q_set) enumerated += bucket[rmask][pos];
                                  if (subset_max_probability(weights, q_set, r_set) != enumerated) {
                                      fail(r, "closed form disagrees with enumeration",
                                           json{{"m", m},
                                                {"Q", q_set},
                                                {"R", r_set},
                                                {"weights", rationals_to_json(weights.values())}});
                                      break;
                                  }
                                  if (qmask == 0) break;
                                  qmask = (qmask - 1) & rmask;
                              }
                          }
                      }
                  }
                  if (r.passed)
                      r.detail = std::to_string(vectors) + " weight vectors, " +
                                 std::to_string(pairs) + " (Q, R) pairs, exact equality";
              });
    }

    // --- 9. Monte Carlo against the exact distribution -----------------------
    void monte_carlo_suite() {
        const std::size_t n = full() ? 5 : 3;
        const std::uint64_t samples = full() ? opt.monte_carlo_samples
                                             : std::min<std::uint64_t>(opt.monte_carlo_samples, 10000);
        suite("monte-carlo-watershed",
              "n = " + std::to_string(n) + ", " + std::to_string(samples) +
                  " samples, 4-sigma bins, repeated for determinism",
              [&](SuiteResult& r) {
                  RandomSource rng = RandomSource(opt.seed).derive(9);
                  const auto a = random_values(rng, n, 1, 4);
                  const auto b = random_values(rng, n, 1, 4);
                  const Rational q = sweep_q_values()[rng.uniform_below_u64(5)];
                  const HikitaParams params(a, b, q);
                  const std::uint64_t mc_seed = rng.next_u64();

                  const DistributionReport report = monte_carlo_watershed(params, samples, mc_seed);
                  if (!report.passed) {
                      fail(r, "an empirical bin fell outside the 4-sigma tolerance",
                           json{{"a", a},
                                {"b", b},
                                {"q", rational_to_string(q)},
                                {"report", report_to_json(report)}});
                      return;
                  }
                  const DistributionReport again = monte_carlo_watershed(params, samples, mc_seed);
                  if (again.empirical_counts != report.empirical_counts) {
                      fail(r, "identical seed produced different counts",
                           json{{"seed", mc_seed}});
                      return;
                  }
                  double worst = 0;
                  for (std::size_t k = 0; k < report.deviations.size(); ++k)
                      worst = std::max(worst, report.tolerances[k] > 0
                                                  ? report.deviations[k] / report.tolerances[k]
                                                  : 0.0);
                  r.detail = "all bins within tolerance (worst at " +
                             std::to_string(worst) + " of the allowance), reruns identical";
              });
    }

    // --- 10. Bulldozer: unique unsweepable town at the watershed --------------
    void bulldozer_suite() {
        const std::size_t max_m = full() ? 4 : 3;
        suite("bulldozer-unsweepable-town",
              "all lines from orderings of {1..2m}, m <= " + std::to_string(max_m),
              [&](SuiteResult& r) {
                  std::size_t lines = 0;
                  for (std::size_t m = 0; m <= max_m && r.passed; ++m) {
                      for_each_ordering(2 * m, [&](const LinearOrdering& seq) {
                          ++lines;
                          const auto towns = unsweepable_towns(line_from_sequence(seq));
                          if (towns.size() != 1) {
                              fail(r, "unsweepable town is not unique",
                                   json{{"sequence", seq.elements()}, {"towns", towns}});
                              return false;
                          }
                          const std::size_t k = fast_k(seq);
                          if (towns.front() != k + 1) {
                              fail(r, "unsweepable town is not at the watershed",
                                   json{{"sequence", seq.elements()},
                                        {"town", towns.front()},
                                        {"watershed", k}});
                              return false;
                          }
                          return true;
                      });
                  }
                  if (r.passed)
                      r.detail = std::to_string(lines) + " lines, unique town == watershed + 1";
              });
    }

    // --- 11. Worked process trace ----------------------------------------------
    void process_trace_example() {
        suite("process-trace-example", "forced choices 3, 4, 1 on weights 7, 2, 4, 7",
              [&](SuiteResult& r) {
                  const WeightVector weights(
                      {Rational(7), Rational(2), Rational(4), Rational(7)});
                  ForcedChoice forced({3, 4, 1});
                  const LinearOrdering ordering =
                      process_w_sample({1, 2, 3, 4}, weights, forced);
                  const std::vector<std::int64_t> expected = {2, 1, 4, 3};
                  if (ordering.elements() != expected) {
                      fail(r, "forced process produced the wrong ordering",
                           json{{"ordering", ordering.elements()}});
                      return;
                  }
                  const auto factors = ordering_step_factors(weights, ordering);
                  const std::vector<Rational> want = {Rational(4, 20), Rational(7, 16),
                                                      Rational(7, 9), Rational(1)};
                  if (factors != want) {
                      fail(r, "step factors mismatch",
                           json{{"factors", rationals_to_json(factors)}});
                      return;
                  }
                  r.detail = "ordering 2,1,4,3 with step factors 1/5, 7/16, 7/9";
              });
    }
};

} // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    SuiteRunner runner{options, {}};
    runner.foata_roundtrip();
    runner.even_cycle_criterion();
    runner.watershed_uniqueness();
    runner.worked_examples();
    runner.counting_identities();
    runner.normalization_sweep();
    runner.distribution_equivalence();
    runner.subset_max_closed_form();
    runner.monte_carlo_suite();
    runner.bulldozer_suite();
    runner.process_trace_example();
    return runner.results;
}

bool all_passed(const std::vector<SuiteResult>& suites) {
    return std::all_of(suites.begin(), suites.end(),
                       [](const SuiteResult& s) { return s.passed; });
}

json verification_to_json(const std::vector<SuiteResult>& suites, const VerifyOptions& options) {
    json out;
    out["level"] = options.level == VerifyLevel::full ? "full" : "quick";
    out["seed"] = options.seed;
    json list = json::array();
    for (const SuiteResult& s : suites) {
        json item{{"name", s.name},
                  {"scale", s.scale},
                  {"passed", s.passed},
                  {"detail", s.detail},
                  {"seconds", s.seconds}};
        if (!s.passed) item["counterexample"] = s.counterexample;
        list.push_back(std::move(item));
    }
    out["suites"] = list;
    out["all_passed"] = all_passed(suites);
    return out;
}

} // namespace permstat
