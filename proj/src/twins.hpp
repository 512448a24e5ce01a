#ifndef SHUFSQ_TWINS_HPP
#define SHUFSQ_TWINS_HPP

#include <string>
#include <vector>

#include "word.hpp"

namespace shufsq {

/// A pair of equal, disjoint-support subwords of a host word.
/// x_support and y_support are strictly increasing 0-based index lists of
/// equal length t; the h-th element of X pairs with the h-th element of Y.
/// Positions covered by neither support are the gaps.
struct Twins {
  Word word;
  std::vector<int> x_support;
  std::vector<int> y_support;

  size_t length() const { return x_support.size(); }

  /// Plain form with 1-based indices, e.g. "X:{1,2,4} Y:{3,6,8}".
  std::string to_string() const;

  /// The word spelled by either twin (they agree on valid twins).
  Word twin_word() const;

  /// Per-character rendering of the host word; X is marked with red
  /// underline and Y with blue overline when `color` is set, otherwise a
  /// marker line of X/Y/. is appended below the word.
  std::string pretty(bool color) const;

  bool operator==(const Twins&) const = default;
};

struct ValidationReport {
  bool ok = true;
  std::string message;  // first violated invariant, empty when ok
};

ValidationReport validate(const Twins& tw);

/// True iff the h-th X index precedes the h-th Y index for every h.
bool is_monotone(const Twins& tw);

/// Swaps the misordered pairs so that the result is monotone; keeps
/// supp(X,Y) and the twin length.
Twins monotonize(const Twins& tw);

/// The (g,h)-rewiring of monotone twins, 0-based g < h. Requires
/// y[g] < x[h], equal letters at those positions, and no support element
/// strictly between them. Exchanges x[h] and y[g] between the supports.
Twins rewire(const Twins& tw, size_t g, size_t h);

/// Moves gaps to the right end of every run, keeping each support's
/// relative order within the run.
Twins shift(const Twins& tw);

/// True iff the twins are monotone and every run splits into an X block,
/// then a Y block, then gaps.
bool is_canonical(const Twins& tw);

/// Repeats monotonize, smallest applicable rewiring, and shifting until a
/// fixed point. The result has the same length, is valid, and is canonical.
Twins canonicalize(const Twins& tw);

}  // namespace shufsq

#endif
