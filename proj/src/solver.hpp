#ifndef SHUFSQ_SOLVER_HPP
#define SHUFSQ_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "twins.hpp"
#include "word.hpp"

namespace shufsq {

struct SolverOptions {
  long long node_budget = 10'000'000;
  size_t memo_entries = 1'000'000;
  long long oracle_max_length = 40;
  long long twins_oracle_max_length = 20;
  long long reverse_max_length = 26;
  long long census_max_length = 20;  // cap on 2n
};

enum class Verdict { Yes, No, Budget };

enum class NoReason { OddLength, NotEven, ExhaustedSearch, TheoremAbba, ClaimCl };

std::string to_string(Verdict v);
std::string to_string(NoReason r);

/// Outcome of the shuffle-square decision. A yes carries a nest-free graph
/// on the runs with degree equal to capacity everywhere; a no carries the
/// reason tag.
struct Certificate {
  Verdict verdict = Verdict::No;
  std::optional<OrderedMultigraph> witness;
  std::optional<NoReason> reason;
  std::string rule = "exact-search";  // which rule decided (auto pipeline)
  long long nodes_expanded = 0;
  double time_ms = 0;

  bool yes() const { return verdict == Verdict::Yes; }
};

struct CutWitness {
  std::vector<int> cut_positions;  // letters before each cut, increasing
  std::vector<int> permutation;    // 0-based block order
  Word reassembled;
};

/// f is the longest twin length, g = |W| - 2f the deletion distance.
/// When a search budget ran out, `optimal` is false and f is only a lower
/// bound (so g an upper bound); the witness is still a valid pair of twins.
struct DistanceReport {
  long long f = 0;
  long long g = 0;
  bool optimal = true;
  std::optional<Twins> witness;
  std::optional<std::pair<int, CutWitness>> cut;
  long long nodes_expanded = 0;
  double time_ms = 0;
};

/// Exact decision via depth-first construction of a nest-free multigraph
/// over the runs, left to right. Open edges close first-in-first-out by
/// left endpoint (edges sharing an endpoint exempt) and a loop is placed
/// only when no older edge stays open past the vertex; failures are
/// memoized on (vertex, open-edge state).
Certificate decide_shuffle_square(const Word& word, const SolverOptions& options = {});

/// Enumerates every certificate graph (not just one), up to `limit`.
std::vector<OrderedMultigraph> decide_all(const Word& word, size_t limit,
                                          const SolverOptions& options = {});

/// Independent oracle: dynamic programming over raw positions whose state
/// is the set of possible leader-minus-follower overhang strings; a letter
/// either extends the leader or must match the overhang's front. Accepts
/// iff the overhang is empty at the end.
bool oracle_shuffle_square(const Word& word, const SolverOptions& options = {});

/// Same state space extended with a skip action per position, maximizing
/// matched pairs; returns the longest twin length.
long long oracle_longest_twins(const Word& word, const SolverOptions& options = {});

/// Longest twins via exact search over nest-free multigraphs with
/// degree <= capacity, plus the reconstructed canonical witness.
DistanceReport longest_twins(const Word& word, const SolverOptions& options = {});

/// True iff the positions split into S and its complement with
/// word[S] = reverse(word[complement]). Meet-in-the-middle over halves.
bool decide_reverse_shuffle_square(const Word& word, const SolverOptions& options = {});

/// Smallest c <= max_cuts such that some partition into c+1 blocks and
/// block permutation yields a shuffle square; ties broken by the
/// lexicographically smallest cut vector, then smallest permutation.
std::optional<std::pair<int, CutWitness>> cutting_distance(const Word& word, int max_cuts,
                                                           const SolverOptions& options = {});

struct CensusRow {
  int n = 0;
  long long even_words = 0;
  long long shuffle_squares = 0;
};

/// Exact counts over all binary words of length 2n, by exhaustive
/// enumeration with the overhang oracle. Deterministic across thread
/// counts.
CensusRow census(int n, int threads = 1, const SolverOptions& options = {});

}  // namespace shufsq

#endif
