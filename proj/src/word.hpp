#ifndef SHUFSQ_WORD_HPP
#define SHUFSQ_WORD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shufsq {

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite word over an ordered alphabet {0, ..., k-1}.
/// Immutable after construction; all operations return new values.
class Word {
 public:
  Word() = default;
  Word(std::vector<uint8_t> symbols, int alphabet_size);

  /// Accepts the dense form ("100110", "122231113332", "ABBA") and the
  /// run-length form ("1^3 0^2 1 0^3"); auto-detects by '^' or whitespace.
  static Word parse(std::string_view text);

  size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  int alphabet_size() const { return k_; }
  uint8_t operator[](size_t i) const { return symbols_[i]; }
  const std::vector<uint8_t>& symbols() const { return symbols_; }

  std::string to_dense_string() const;
  std::string to_runlength_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<uint8_t> symbols_;
  int k_ = 1;
};

struct Run {
  uint8_t symbol = 0;
  int length = 0;
  bool operator==(const Run&) const = default;
};

/// Maximal blocks of equal symbols, in order. Adjacent runs always carry
/// distinct symbols and the lengths sum back to the word length.
class RunLengthWord {
 public:
  RunLengthWord() = default;
  explicit RunLengthWord(std::vector<Run> runs, int alphabet_size);

  size_t run_count() const { return runs_.size(); }
  const Run& operator[](size_t i) const { return runs_[i]; }
  const std::vector<Run>& runs() const { return runs_; }
  int alphabet_size() const { return k_; }
  size_t total_length() const;

  Word to_word() const;

  bool operator==(const RunLengthWord&) const = default;

 private:
  std::vector<Run> runs_;
  int k_ = 1;
};

RunLengthWord runs(const Word& word);

/// True iff every symbol occurs an even number of times.
bool is_even(const Word& word);

/// Cyclic shift starting at position `offset`, 0 <= offset <= |word|.
Word rotate(const Word& word, size_t offset);

// Word families.
Word family_w(const std::vector<long long>& run_lengths);  // alternating, 1-run first
Word family_o(long long m, long long r);                   // W(m, m-2, ..., m-2r+2), m odd
Word family_a(long long r);                                // W(3^{r-1}, ..., 3, 1)
Word family_b(long long r);                                // W(r^2+1, (r-1)r+1, ..., r+1)
Word abba_block(long long r, long long count);             // (1 0^r 1)^count
Word separated_ones(const std::vector<long long>& a);      // 0^{a0} 1 0^{a1} ... 1 0^{a2m}
Word thue_morse_prefix(long long length);
Word kolakoski_prefix(long long length);

/// Dispatch by family name, as used by the CLI and the C API.
/// Names: W, O, A, B, abba, separated-ones, thue-morse, kolakoski.
Word generate(const std::string& family, const std::vector<long long>& params);

enum class SequenceFamily { ThueMorse, Kolakoski };

/// Prefix lengths L <= max_len at which the prefix is an even word.
/// Length 0 is always reported: the empty word is even.
std::vector<long long> even_prefixes(SequenceFamily family, long long max_len);

}  // namespace shufsq

#endif
