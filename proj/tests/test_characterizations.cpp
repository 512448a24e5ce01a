#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "characterizations.hpp"
#include "oracles.hpp"

using namespace shufsq;

namespace {

void check_perfect_certificate(const Word& w, const OrderedMultigraph& g) {
  RunLengthWord rl = runs(w);
  REQUIRE(g.vertex_count() == rl.run_count());
  REQUIRE_FALSE(find_nest(g).has_value());
  for (size_t v = 0; v < g.vertex_count(); ++v)
    REQUIRE(g.degree(static_cast<int>(v)) == rl[v].length);
}

// every even word with the given run-count range and run lengths <= cap;
// both starting letters
template <typename Fn>
void for_each_even_run_pattern(int min_runs, int max_runs, int max_len, Fn&& fn) {
  for (int m = min_runs; m <= max_runs; ++m) {
    std::vector<long long> lens(static_cast<size_t>(m), 1);
    for (;;) {
      for (uint8_t first : {1, 0}) {
        std::vector<Run> rs;
        for (int i = 0; i < m; ++i)
          rs.push_back(Run{static_cast<uint8_t>(i % 2 == 0 ? first : 1 - first),
                           static_cast<int>(lens[static_cast<size_t>(i)])});
        Word w = RunLengthWord(rs, 2).to_word();
        if (is_even(w)) fn(w);
        if (m == 1) break;  // a single run reads the same either way
      }
      int i = m - 1;
      while (i >= 0 && lens[static_cast<size_t>(i)] == max_len) --i;
      if (i < 0) break;
      ++lens[static_cast<size_t>(i)];
      for (int j = i + 1; j < m; ++j) lens[static_cast<size_t>(j)] = 1;
    }
  }
}

}  // namespace

TEST_CASE("few-run verdicts on reference words") {
  CHECK_FALSE(classify_few_runs(runs(Word::parse("1^7 0^6 1^9 0^8"))).yes);
  CHECK(classify_few_runs(runs(Word::parse("0^8 1^7 0^6 1^9"))).yes);
  CHECK(classify_few_runs(runs(Word::parse("1^2 0^2 1^2"))).rule == "dull");
  CHECK_FALSE(classify_few_runs(runs(Word::parse("1001"))).yes);
  CHECK_THROWS_AS(classify_few_runs(runs(Word::parse("101010"))), std::invalid_argument);
  CHECK_THROWS_AS(classify_few_runs(runs(Word::parse("10101010"))), std::invalid_argument);
}

TEST_CASE("few-run closed form matches the solver exhaustively") {
  long long tested = 0;
  for_each_even_run_pattern(1, 5, 6, [&](const Word& w) {
    FewRunsVerdict v = classify_few_runs(runs(w));
    REQUIRE(v.yes == decide_shuffle_square(w).yes());
    if (v.yes) check_perfect_certificate(w, *v.witness);
    ++tested;
  });
  CHECK(tested > 4000);
}

TEST_CASE("classify_1and2") {
  CHECK_FALSE(classify_1and2(runs(Word::parse("1001"))));
  CHECK(classify_1and2(runs(Word::parse("1010"))));
  CHECK(classify_1and2(runs(Word::parse("0110"))) == false);  // 1001 with letters swapped
  CHECK(classify_1and2(runs(Word::parse("00"))));
  CHECK_THROWS_AS(classify_1and2(runs(Word::parse("1100"))), std::invalid_argument);

  // exhaustive agreement on the whole shape, length <= 16
  long long tested = 0;
  for_each_even_run_pattern(1, 16, 2, [&](const Word& w) {
    if (w.size() > 16) return;
    auto by = runs(w);
    // shape: one letter's runs all 1, the other's at most 2
    std::array<std::vector<int>, 2> lens;
    for (size_t h = 0; h < by.run_count(); ++h) lens[by[h].symbol].push_back(by[h].length);
    auto all1 = [](const std::vector<int>& v) {
      return std::all_of(v.begin(), v.end(), [](int l) { return l == 1; });
    };
    auto le2 = [](const std::vector<int>& v) {
      return std::all_of(v.begin(), v.end(), [](int l) { return l <= 2; });
    };
    bool shape = (all1(lens[1]) && le2(lens[0])) || (all1(lens[0]) && le2(lens[1]));
    if (!shape) return;
    REQUIRE(classify_1and2(by) == decide_shuffle_square(w).yes());
    ++tested;
  });
  CHECK(tested > 300);
}

TEST_CASE("separated ones: the four-solution example") {
  SeparatedOnesInstance inst{{0, 3, 9, 11, 7}};
  auto sols = solve_separated_ones(inst);
  REQUIRE(sols.size() == 4);
  std::vector<long long> seen_r3;
  for (const auto& sol : sols) {
    CHECK(sol.r[1] == 3);
    seen_r3.push_back(sol.r[3]);
    CHECK(sol.r[2] == (17 - sol.r[3]) / 2);
    CHECK(sol.r[4] == (7 - sol.r[3]) / 2);
    CHECK(validate(sol.twins).ok);
    CHECK(2 * sol.twins.length() == inst.to_word().size());
  }
  std::sort(seen_r3.begin(), seen_r3.end());
  CHECK(seen_r3 == std::vector<long long>{1, 3, 5, 7});
}

TEST_CASE("separated ones: interior zeros") {
  SeparatedOnesInstance inst{{0, 5, 3, 4, 0, 0, 6, 0, 0, 4, 4}};
  auto sols = solve_separated_ones(inst);
  REQUIRE_FALSE(sols.empty());
  std::vector<long long> expected{0, 5, 1, 0, 0, 0, 3, 0, 0, 4, 0};
  bool found = false;
  for (const auto& sol : sols) {
    if (sol.r == expected) {
      found = true;
      CHECK(sol.twins.twin_word() == Word::parse("1 0^6 1 1 0^3 1 1 0^4"));
    }
    CHECK(validate(sol.twins).ok);
  }
  CHECK(found);
}

TEST_CASE("separated ones: all-even instances are solvable") {
  for (const std::vector<long long>& a :
       {std::vector<long long>{2, 4, 2, 6, 2}, {2, 2, 2, 2, 2}, {0, 2, 0, 2, 0},
        {4, 2, 4, 2, 4, 2, 4}}) {
    SeparatedOnesInstance inst{a};
    auto sols = solve_separated_ones(inst);
    REQUIRE_FALSE(sols.empty());
    for (const auto& sol : sols) CHECK(2 * sol.twins.length() == inst.to_word().size());
  }
}

TEST_CASE("solutions exist exactly for alternating-ones shuffle squares") {
  // on genuinely separated instances with m = 2 this coincides with
  // shuffle-squareness (interior blocks nonempty)
  for (long long a0 = 0; a0 <= 4; ++a0)
    for (long long a1 = 1; a1 <= 4; ++a1)
      for (long long a2 = 1; a2 <= 4; ++a2)
        for (long long a3 = 1; a3 <= 4; ++a3)
          for (long long a4 = 0; a4 <= 4; ++a4) {
            if ((a0 + a1 + a2 + a3 + a4) % 2 != 0) continue;
            SeparatedOnesInstance inst{{a0, a1, a2, a3, a4}};
            bool nonempty = !solve_separated_ones(inst).empty();
            REQUIRE(nonempty == decide_shuffle_square(inst.to_word()).yes());
          }

  // merged ones escape the alternating pattern: 110110 is the square of
  // 110 yet admits no alternating solution
  SeparatedOnesInstance merged{{0, 0, 1, 0, 1}};
  CHECK(solve_separated_ones(merged).empty());
  CHECK(decide_shuffle_square(merged.to_word()).yes());

  // and with six separated ones a shuffle square may pair consecutive
  // ones into the same twin: no alternating solution either
  SeparatedOnesInstance six{{0, 1, 2, 1, 1, 3, 0}};
  REQUIRE(six.to_word() == Word::parse("10100101010001"));
  CHECK(solve_separated_ones(six).empty());
  CHECK(decide_shuffle_square(six.to_word()).yes());
  CHECK(oracle_shuffle_square(six.to_word()));
}

TEST_CASE("first solution with a work limit") {
  SeparatedOnesInstance inst{{0, 3, 9, 11, 7}};
  auto sol = first_separated_ones_solution(inst);
  REQUIRE(sol.has_value());
  CHECK(validate(sol->twins).ok);
  CHECK_FALSE(first_separated_ones_solution(SeparatedOnesInstance{{0, 1, 0, 0, 1}}).has_value());
}

TEST_CASE("m = 1 instances are rejected") {
  // three-parameter instances belong to the few-runs classification
  CHECK_THROWS_AS(solve_separated_ones(SeparatedOnesInstance{{1, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(solve_separated_ones(SeparatedOnesInstance{{0, 1, 2, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_separated_ones(SeparatedOnesInstance{{0, 1, 2, -1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_separated_ones(SeparatedOnesInstance{{0, 1, 2, 1, 1}}),
                  std::invalid_argument);  // odd word
}

TEST_CASE("condition (2cond)") {
  CHECK(check_2cond(3, 9, 11, 7));
  CHECK_FALSE(check_2cond(16, 9, 4, 5));
  CHECK(check_2cond(5, 16, 9, 4));
  CHECK_THROWS_AS(check_2cond(1, 0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_2cond(1, 1, 1, 0), std::invalid_argument);  // odd word

  // the corollary: 2cond equals shuffle-squareness of 1 0^a1 1 0^a2 1 0^a3 1 0^a4
  // whenever the ones stay separated
  for (long long a1 = 0; a1 <= 6; ++a1)
    for (long long a2 = 1; a2 <= 6; ++a2)
      for (long long a3 = 1; a3 <= 6; ++a3)
        for (long long a4 = 0; a4 <= 6; ++a4) {
          if ((a1 + a2 + a3 + a4) % 2 != 0) continue;
          Word w = separated_ones({0, a1, a2, a3, a4});
          REQUIRE(check_2cond(a1, a2, a3, a4) == decide_shuffle_square(w).yes());
        }

  // at the merged boundary a3 = 0 the formula can hold for a non-square
  CHECK(check_2cond(0, 3, 0, 1));
  CHECK_FALSE(decide_shuffle_square(Word::parse("11000110")).yes());
  CHECK_FALSE(oracle_shuffle_square(Word::parse("11000110")));
}

TEST_CASE("rotation to a shuffle square") {
  RotationResult rot = rotate_to_square_m2(16, 9, 4, 5);
  CHECK(rot.rotated == std::array<long long, 4>{5, 16, 9, 4});
  CHECK(rot.start == 3);

  RotationResult id = rotate_to_square_m2(3, 9, 11, 7);
  CHECK(check_2cond(id.rotated[0], id.rotated[1], id.rotated[2], id.rotated[3]));

  for (long long a1 = 1; a1 <= 8; ++a1)
    for (long long a2 = 1; a2 <= 8; ++a2)
      for (long long a3 = 1; a3 <= 8; ++a3)
        for (long long a4 = 1; a4 <= 8; ++a4) {
          if ((a1 + a2 + a3 + a4) % 2 != 0) continue;
          RotationResult r = rotate_to_square_m2(a1, a2, a3, a4);
          REQUIRE(check_2cond(r.rotated[0], r.rotated[1], r.rotated[2], r.rotated[3]));
        }
}

TEST_CASE("theorem abba") {
  CHECK(theorem_abba_applies(runs(Word::parse("1 0^2 1^2 0^2 1^2 0^10 1^2 0^2 1^2 0^2 1"))));
  CHECK_FALSE(theorem_abba_applies(runs(Word::parse("101100110001"))));
  CHECK(decide_shuffle_square(Word::parse("101100110001")).verdict == Verdict::No);
  for (long long r = 1; r <= 4; ++r)
    for (long long m = 1; m <= 3; ++m)
      CHECK(theorem_abba_applies(runs(abba_block(r, 2 * m - 1))));
  CHECK_THROWS_AS(theorem_abba_applies(runs(Word::parse("1100"))), std::invalid_argument);

  // the subset-sum stage is capped at 40 inner runs
  std::vector<Run> rs;
  for (int i = 0; i < 41; ++i) {
    rs.push_back(Run{1, i == 0 ? 1 : 2});
    rs.push_back(Run{0, 1});
  }
  rs.push_back(Run{1, 1});
  CHECK_THROWS_AS(theorem_abba_applies(RunLengthWord(rs, 2)), budget_error);
}

TEST_CASE("theorem abba soundness on all small instances") {
  // every instance with total length <= 20 satisfying (1)+(2) is a no
  std::vector<long long> a, b;
  long long tested = 0;
  auto build_b = [&](auto&& self, long long remaining) -> void {
    if (a.size() == b.size() + 1) {
      if (b.empty()) return;
      std::vector<Run> rs;
      for (size_t i = 0; i < b.size(); ++i) {
        rs.push_back(Run{1, static_cast<int>(a[i])});
        rs.push_back(Run{0, static_cast<int>(b[i])});
      }
      rs.push_back(Run{1, static_cast<int>(a.back())});
      RunLengthWord rl(rs, 2);
      if (theorem_abba_applies(rl)) {
        REQUIRE(decide_shuffle_square(rl.to_word()).verdict == Verdict::No);
        ++tested;
      }
      return;
    }
    for (long long v = 1; v <= remaining; ++v) {
      b.push_back(v);
      self(self, remaining - v);
      b.pop_back();
    }
  };
  auto build_a = [&](auto&& self, size_t count, long long remaining) -> void {
    if (a.size() == count) {
      build_b(build_b, remaining);
      return;
    }
    const bool outer = a.empty() || a.size() + 1 == count;
    for (long long v = outer ? 1 : 2; v <= remaining; v += 2) {
      a.push_back(v);
      self(self, count, remaining - v);
      a.pop_back();
    }
  };
  for (size_t n = 1; n <= 5; ++n) build_a(build_a, n + 1, 20 - static_cast<long long>(n));
  CHECK(tested > 300);
}

TEST_CASE("claim cl") {
  CHECK(claim_cl_applies(runs(Word::parse("1 0^9 1^7 0^5 1^4 0^3 1^2 0"))));
  CHECK(claim_cl_applies(runs(Word::parse("1^11 0^8 1^6 0^4 1^3"))));
  for (long long m = 3; m <= 15; m += 2)
    for (long long r = 1; 2 * r - 1 <= m; ++r)
      CHECK(claim_cl_applies(runs(family_o(m, r))));
  CHECK_FALSE(claim_cl_applies(runs(Word::parse("1^2 0 1"))));
  CHECK_FALSE(claim_cl_applies(runs(Word::parse("1 0^3 1^5"))));

  // soundness: claim true implies not a shuffle square (desk scale)
  for (int n = 0; n <= 14; ++n)
    for (const Word& w : testing::all_binary_words(n))
      if (!w.empty() && claim_cl_applies(runs(w)))
        REQUIRE_FALSE(decide_shuffle_square(w).yes());
}

TEST_CASE("ths1 certificates") {
  CHECK_FALSE(build_ths1_certificate(runs(abba_block(2, 3))).has_value());
  CHECK_FALSE(build_ths1_certificate(runs(Word::parse("1001"))).has_value());
  auto even_abba = build_ths1_certificate(runs(abba_block(2, 2)));
  REQUIRE(even_abba.has_value());
  check_perfect_certificate(abba_block(2, 2), *even_abba);
  CHECK_THROWS_AS(build_ths1_certificate(runs(Word::parse("1^3 0^2 1^3"))),
                  std::invalid_argument);

  // exhaustive over the shape, up to 12 runs: agree with the solver and
  // produce valid certificates
  long long tested = 0, refused = 0;
  for_each_even_run_pattern(1, 12, 2, [&](const Word& w) {
    RunLengthWord rl = runs(w);
    std::array<std::vector<int>, 2> lens;
    for (size_t h = 0; h < rl.run_count(); ++h) lens[rl[h].symbol].push_back(rl[h].length);
    auto all2 = [](const std::vector<int>& v) {
      return std::all_of(v.begin(), v.end(), [](int l) { return l == 2; });
    };
    auto le2 = [](const std::vector<int>& v) {
      return std::all_of(v.begin(), v.end(), [](int l) { return l <= 2; });
    };
    if (!((all2(lens[0]) && le2(lens[1])) || (all2(lens[1]) && le2(lens[0])))) return;
    auto cert = build_ths1_certificate(rl);
    bool solver_yes = decide_shuffle_square(w).yes();
    REQUIRE(cert.has_value() == solver_yes);
    if (cert)
      check_perfect_certificate(w, *cert);
    else
      ++refused;
    ++tested;
  });
  CHECK(tested > 300);
  CHECK(refused >= 3);  // (1001)^1, (1001)^3, (1001)^5
}

TEST_CASE("O(m,r) construction") {
  // the worked instance: deficit 16, twins as displayed
  Twins tw = build_omr_twins(47, 24);
  CHECK(tw.twin_word() ==
        Word::parse("1^47 0^37 1^35 0^41 1^31 0^21 1^19 0^25 1^15 0^5 1^3 0^1"));
  Word o = family_o(47, 24);
  CHECK(static_cast<long long>(o.size()) - 2 * static_cast<long long>(tw.length()) == 16);

  OrderedMultigraph g = build_omr_graph(47, 24);
  bool mu37 = false, mu1 = false;
  for (const GraphEdge& e : g.edges()) {
    if (g.vertices()[static_cast<size_t>(e.p)].capacity == 45 &&
        g.vertices()[static_cast<size_t>(e.q)].capacity == 37)
      mu37 = e.multiplicity == 37;
    if (g.vertices()[static_cast<size_t>(e.p)].capacity == 9 &&
        g.vertices()[static_cast<size_t>(e.q)].capacity == 1)
      mu1 = e.multiplicity == 1;
  }
  CHECK(mu37);
  CHECK(mu1);

  // all odd m <= 99 here (the acceptance suite goes to 199)
  for (long long m = 1; m <= 99; m += 2)
    for (long long r = 1; 2 * r - 1 <= m; ++r) {
      Twins t = build_omr_twins(m, r);
      REQUIRE(validate(t).ok);
      long long gaps = static_cast<long long>(family_o(m, r).size()) -
                       2 * static_cast<long long>(t.length());
      REQUIRE(gaps >= 0);
      REQUIRE(gaps <= 23);
    }
  // spot checks on quarter-million-letter instances
  for (auto [m, r] : {std::pair<long long, long long>{999, 496}, {999, 500}, {1001, 64}}) {
    Twins t = build_omr_twins(m, r);
    REQUIRE(validate(t).ok);
    long long gaps = static_cast<long long>(family_o(m, r).size()) -
                     2 * static_cast<long long>(t.length());
    REQUIRE(gaps >= 0);
    REQUIRE(gaps <= 23);
  }
  CHECK_THROWS_AS(build_omr_twins(46, 2), std::invalid_argument);
}

TEST_CASE("ths1 certificates on long random shapes") {
  // beyond the exhaustive 12-run window: random words with 0-runs of
  // length two and 1-runs of length one or two, up to 40 runs
  std::mt19937 rng(1789);
  long long yes = 0, refusals = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 40);
    std::vector<Run> rs;
    uint8_t first = static_cast<uint8_t>(rng() % 2);
    for (int i = 0; i < m; ++i) {
      uint8_t sym = static_cast<uint8_t>(i % 2 == 0 ? first : 1 - first);
      int len = sym == 0 ? 2 : 1 + static_cast<int>(rng() % 2);
      rs.push_back(Run{sym, len});
    }
    RunLengthWord rl(rs, 2);
    Word w = rl.to_word();
    if (!is_even(w)) continue;
    auto cert = build_ths1_certificate(rl);
    if (!cert) {
      // refusals must be exactly the odd abba words
      REQUIRE(rl.run_count() % 2 == 1);
      REQUIRE(rl[0].length == 1);
      REQUIRE(rl[rl.run_count() - 1].length == 1);
      for (size_t i = 1; i + 1 < rl.run_count(); ++i) REQUIRE(rl[i].length == 2);
      REQUIRE(((rl.run_count() - 1) / 2) % 2 == 1);
      ++refusals;
      continue;
    }
    REQUIRE_FALSE(find_nest(*cert).has_value());
    for (size_t v = 0; v < cert->vertex_count(); ++v)
      REQUIRE(cert->degree(static_cast<int>(v)) == rl[v].length);
    Twins tw = twins_from_graph(*cert, rl);
    REQUIRE(validate(tw).ok);
    REQUIRE(2 * tw.length() == w.size());
    ++yes;
  }
  CHECK(yes > 500);
  CHECK(refusals > 0);
}

TEST_CASE("auto pipeline agrees with the overhang oracle on structured words") {
  std::mt19937 rng(424242);
  SolverOptions opt;
  opt.oracle_max_length = 40;
  long long tested = 0;
  auto check = [&](const Word& w) {
    if (w.size() > 40) return;
    Certificate cert = decide_auto(w, opt);
    REQUIRE(cert.verdict != Verdict::Budget);
    REQUIRE(cert.yes() == oracle_shuffle_square(w, opt));
    ++tested;
  };
  for (int trial = 0; trial < 1200; ++trial) {
    const int k = trial % 2 == 0 ? 2 : 3;
    const int n = static_cast<int>(rng() % 27);
    std::vector<uint8_t> symbols(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      symbols[static_cast<size_t>(i)] = static_cast<uint8_t>(rng() % static_cast<unsigned>(k));
    check(Word(std::move(symbols), k));
  }
  for (long long r = 1; r <= 6; ++r)
    for (long long c = 1; (r + 2) * c <= 40; ++c) check(abba_block(r, c));
  for (int trial = 0; trial < 600; ++trial) {
    const long long m = 2 + static_cast<long long>(rng() % 3);
    std::vector<long long> a(static_cast<size_t>(2 * m + 1));
    for (auto& v : a) v = static_cast<long long>(rng() % 5);
    long long sum = 0;
    for (long long v : a) sum += v;
    if (sum % 2 != 0) a[0] += 1;
    check(separated_ones(a));
  }
  CHECK(tested > 1500);
}

TEST_CASE("O(47,24) graph export matches the frozen golden file") {
  std::string dot = export_dot(build_omr_graph(47, 24));
  CHECK(dot == export_dot(build_omr_graph(47, 24)));  // byte-identical on repeat runs
  std::ifstream golden(std::string(SHUFSQ_TEST_DATA_DIR) + "/golden/omr_47_24.dot");
  REQUIRE(golden.good());
  std::stringstream buffer;
  buffer << golden.rdbuf();
  CHECK(dot == buffer.str());
  OrderedMultigraph g = build_omr_graph(47, 24);
  CHECK(g.vertex_count() == 24);
  CHECK(g.edges().size() == 17);
  for (const GraphEdge& e : g.edges()) CHECK(e.p != e.q);  // no loops at this size
}

TEST_CASE("lower bound for g") {
  CHECK(lower_bound_g(runs(family_a(4))) == 2);
  CHECK(lower_bound_g(runs(family_b(3))) == 3);
  CHECK(lower_bound_g(runs(family_o(9, 3))) == 2);
  CHECK_THROWS_AS(lower_bound_g(runs(Word::parse("1^3 0^3"))), std::invalid_argument);

  // the bound is sound on strictly decreasing odd families (desk scale)
  std::vector<long long> odds{9, 7, 5, 3, 1};
  for (size_t i = 0; i < odds.size(); ++i)
    for (size_t j = i + 1; j <= odds.size(); ++j) {
      std::vector<long long> lens(odds.begin() + static_cast<ptrdiff_t>(i),
                                  odds.begin() + static_cast<ptrdiff_t>(j));
      Word w = family_w(lens);
      DistanceReport report = longest_twins(w);
      REQUIRE(report.optimal);
      REQUIRE(lower_bound_g(runs(w)) <= report.g);
    }
}

TEST_CASE("auto pipeline rules") {
  CHECK(decide_auto(Word::parse("")).rule == "empty");
  CHECK(decide_auto(Word::parse("0011")).rule == "dull");
  CHECK(decide_auto(Word::parse("1001")).rule == "three-runs");
  CHECK(decide_auto(Word::parse("0^8 1^7 0^6 1^9")).rule == "prop-abcd");
  CHECK(decide_auto(abba_block(2, 5)).rule == "theorem-abba");
  CHECK(decide_auto(abba_block(2, 5)).reason == NoReason::TheoremAbba);
  CHECK(decide_auto(abba_block(2, 4)).rule == "prop-ths1");
  CHECK(decide_auto(family_o(9, 4)).rule == "prop-abcd");  // four runs
  CHECK(decide_auto(family_w({7, 6, 5, 3, 2, 1})).rule == "claim-cl");
  CHECK(decide_auto(Word::parse("1 0^3 1 0^9 1 0^11 1 0^7")).rule == "prop-only1");
  CHECK(decide_auto(Word::parse("1 0^16 1 0^9 1 0^4 1 0^5")).rule == "cor-m2a0");
  CHECK(decide_auto(Word::parse("1 0^16 1 0^9 1 0^4 1 0^5")).verdict == Verdict::No);
  CHECK(decide_auto(Word::parse("011")).rule == "odd-length");
  CHECK(decide_auto(Word::parse("0111")).rule == "not-even");

  // agreement with the exact solver on every short binary word
  for (int n = 0; n <= 12; ++n)
    for (const Word& w : testing::all_binary_words(n)) {
      Certificate a = decide_auto(w);
      REQUIRE(a.verdict == decide_shuffle_square(w).verdict);
      if (a.yes()) check_perfect_certificate(w, *a.witness);
    }
}
