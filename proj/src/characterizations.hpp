#ifndef SHUFSQ_CHARACTERIZATIONS_HPP
#define SHUFSQ_CHARACTERIZATIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "solver.hpp"
#include "twins.hpp"
#include "word.hpp"

namespace shufsq {

/// True iff all runs have even length; such words are trivially shuffle
/// squares (half of every run per twin).
bool is_dull(const RunLengthWord& word);

struct FewRunsVerdict {
  bool yes = false;
  std::string rule;  // dull, three-runs, prop-abcd, prop-abcde
  std::optional<OrderedMultigraph> witness;
};

/// Closed forms for even binary words with one to five runs. Words
/// starting with the other letter are handled by relabeling; yes verdicts
/// carry a constructive certificate graph.
FewRunsVerdict classify_few_runs(const RunLengthWord& word);

/// Even words with all runs of one letter of length one and all runs of
/// the other letter of length at most two: shuffle squares except 1001.
bool classify_1and2(const RunLengthWord& word);

/// The word 0^{a0} 1 0^{a1} 1 ... 1 0^{a2m}; interior zero exponents are
/// allowed (adjacent ones then merge into longer runs).
struct SeparatedOnesInstance {
  std::vector<long long> a;  // a_0 .. a_{2m}, size 2m+1, m >= 1

  long long m() const { return (static_cast<long long>(a.size()) - 1) / 2; }
  Word to_word() const;
  void validate() const;  // sizes, nonnegativity, evenness
};

struct SeparatedOnesSolution {
  std::vector<long long> r;  // right degrees r_0 .. r_{2m}
  Twins twins;               // perfect twins 0^{r0} 1 0^{r1+r2} 1 ...
};

/// All integer solutions of the right-degree system with 0 <= r_i <= a_i,
/// found by scanning the free odd-indexed variables; empty iff the word is
/// not a shuffle square with ones alternating between the twins.
std::vector<SeparatedOnesSolution> solve_separated_ones(const SeparatedOnesInstance& inst);

/// First solution only, with a bound on the enumeration work (for the
/// decision pipeline); nullopt when none found within the bound.
std::optional<SeparatedOnesSolution> first_separated_ones_solution(
    const SeparatedOnesInstance& inst, long long work_limit = 1'000'000);

/// The closed form a3+a2-a1 >= 0 and a4 >= a3-a2-a1 for the word
/// 1 0^{a1} 1 0^{a2} 1 0^{a3} 1 0^{a4}, a2 >= 1, even total. Equivalent to
/// shuffle-squareness whenever the ones are genuinely separated (a1, a3
/// >= 1); with a3 = 0 and a4 odd the formula can hold while the word is
/// not a shuffle square (e.g. 11000110).
bool check_2cond(long long a1, long long a2, long long a3, long long a4);

struct RotationResult {
  std::array<long long, 4> rotated;
  int start = 0;  // index into the original tuple
};

/// A rotation of (a1..a4), all positive with even sum, that satisfies
/// check_2cond; found by placing the smallest (or second smallest, when
/// the smallest sits opposite the largest) parameter first.
RotationResult rotate_to_square_m2(long long a1, long long a2, long long a3, long long a4);

/// Sufficient condition for NOT being a shuffle square: runs
/// 1^{a1} 0^{b1} ... 0^{bn} 1^{a_{n+1}} with a_1, a_{n+1} odd and the rest
/// even, and no split of (b_i) into two parts of equal sum. The subset-sum
/// check is exact meet-in-the-middle, n capped at 40.
bool theorem_abba_applies(const RunLengthWord& word);

/// Sufficient condition for NOT being a shuffle square: first run length
/// odd and the remaining run lengths strictly decreasing.
bool claim_cl_applies(const RunLengthWord& word);

/// Constructive certificate for even words whose 0-runs all have length
/// two and whose 1-runs have length at most two. Returns nullopt exactly
/// for (1001)^n with n odd, which is not a shuffle square.
std::optional<OrderedMultigraph> build_ths1_certificate(const RunLengthWord& word);

/// The explicit near-perfect construction for O(m,r): a nest-free graph
/// whose deficit (word length minus total degree) is at most 23.
OrderedMultigraph build_omr_graph(long long m, long long r);
Twins build_omr_twins(long long m, long long r);

/// min{r, delta} for W(n_1..n_r) with strictly decreasing run lengths,
/// where delta is the smallest difference of consecutive lengths. A
/// guaranteed lower bound on g when all lengths are odd.
long long lower_bound_g(const RunLengthWord& word);

/// Decision pipeline: tries the closed forms above in a fixed order before
/// falling back on the exact search; the certificate's `rule` names the
/// deciding rule.
Certificate decide_auto(const Word& word, const SolverOptions& options = {});

}  // namespace shufsq

#endif
