#include "word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>

namespace shufsq {

namespace {

int normalize_alphabet(const std::vector<uint8_t>& symbols, int requested) {
  int k = requested;
  for (uint8_t s : symbols) {
    if (s + 1 > k) k = s + 1;
  }
  return std::max(k, 1);
}

std::optional<uint8_t> symbol_value(char c) {
  if (c >= '0' && c <= '9') return static_cast<uint8_t>(c - '0');
  if (c >= 'A' && c <= 'J') return static_cast<uint8_t>(c - 'A');
  if (c >= 'a' && c <= 'j') return static_cast<uint8_t>(c - 'a');
  return std::nullopt;
}

}  // namespace

Word::Word(std::vector<uint8_t> symbols, int alphabet_size)
    : symbols_(std::move(symbols)), k_(normalize_alphabet(symbols_, alphabet_size)) {
  if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be at least 1");
}

Word Word::parse(std::string_view text) {
  bool runlength = text.find('^') != std::string_view::npos;
  if (!runlength) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        runlength = true;
        break;
      }
    }
  }
  std::vector<uint8_t> symbols;
  if (!runlength) {
    symbols.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
      auto v = symbol_value(text[i]);
      if (!v) throw parse_error("unexpected character '" + std::string(1, text[i]) +
                                "' at position " + std::to_string(i + 1));
      symbols.push_back(*v);
    }
    return Word(std::move(symbols), 1);
  }
  // Run-length form: whitespace-separated tokens `s` or `s^N`.
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    auto v = symbol_value(text[i]);
    if (!v) throw parse_error("unexpected character '" + std::string(1, text[i]) +
                              "' at position " + std::to_string(i + 1));
    ++i;
    long long reps = 1;
    if (i < n && text[i] == '^') {
      ++i;
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("missing exponent after '^' at position " + std::to_string(i));
      reps = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        reps = reps * 10 + (text[i] - '0');
        if (reps > 100000000) throw parse_error("run length too large");
        ++i;
      }
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw parse_error("expected whitespace at position " + std::to_string(i + 1));
    if (reps < 1) throw parse_error("run length must be positive");
    symbols.insert(symbols.end(), static_cast<size_t>(reps), *v);
  }
  return Word(std::move(symbols), 1);
}

std::string Word::to_dense_string() const {
  std::string out;
  out.reserve(symbols_.size());
  for (uint8_t s : symbols_) out.push_back(static_cast<char>('0' + s));
  return out;
}

std::string Word::to_runlength_string() const {
  std::string out;
  RunLengthWord rl = runs(*this);
  for (const Run& r : rl.runs()) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(static_cast<char>('0' + r.symbol));
    if (r.length > 1) {
      out.push_back('^');
      out += std::to_string(r.length);
    }
  }
  return out;
}

RunLengthWord::RunLengthWord(std::vector<Run> runs, int alphabet_size)
    : runs_(std::move(runs)), k_(std::max(alphabet_size, 1)) {
  for (size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].length < 1) throw std::invalid_argument("run lengths must be positive");
    if (runs_[i].symbol + 1 > k_) k_ = runs_[i].symbol + 1;
    if (i > 0 && runs_[i].symbol == runs_[i - 1].symbol)
      throw std::invalid_argument("adjacent runs must have distinct symbols");
  }
}

size_t RunLengthWord::total_length() const {
  size_t n = 0;
  for (const Run& r : runs_) n += static_cast<size_t>(r.length);
  return n;
}

Word RunLengthWord::to_word() const {
  std::vector<uint8_t> symbols;
  symbols.reserve(total_length());
  for (const Run& r : runs_) symbols.insert(symbols.end(), static_cast<size_t>(r.length), r.symbol);
  return Word(std::move(symbols), k_);
}

RunLengthWord runs(const Word& word) {
  std::vector<Run> out;
  for (uint8_t s : word.symbols()) {
    if (!out.empty() && out.back().symbol == s) {
      ++out.back().length;
    } else {
      out.push_back(Run{s, 1});
    }
  }
  return RunLengthWord(std::move(out), word.alphabet_size());
}

bool is_even(const Word& word) {
  std::vector<long long> counts(static_cast<size_t>(word.alphabet_size()), 0);
  for (uint8_t s : word.symbols()) ++counts[s];
  return std::all_of(counts.begin(), counts.end(), [](long long c) { return c % 2 == 0; });
}

Word rotate(const Word& word, size_t offset) {
  if (offset > word.size()) throw std::invalid_argument("rotation offset out of range");
  std::vector<uint8_t> symbols;
  symbols.reserve(word.size());
  symbols.insert(symbols.end(), word.symbols().begin() + static_cast<ptrdiff_t>(offset),
                 word.symbols().end());
  symbols.insert(symbols.end(), word.symbols().begin(),
                 word.symbols().begin() + static_cast<ptrdiff_t>(offset));
  return Word(std::move(symbols), word.alphabet_size());
}

Word family_w(const std::vector<long long>& run_lengths) {
  std::vector<Run> rs;
  rs.reserve(run_lengths.size());
  for (size_t i = 0; i < run_lengths.size(); ++i) {
    if (run_lengths[i] < 1) throw std::invalid_argument("W(n_1..n_r) requires positive run lengths");
    rs.push_back(Run{static_cast<uint8_t>(i % 2 == 0 ? 1 : 0), static_cast<int>(run_lengths[i])});
  }
  return RunLengthWord(std::move(rs), 2).to_word();
}

Word family_o(long long m, long long r) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("O(m,r) requires odd m >= 1");
  if (r < 1 || 2 * r - 1 > m) throw std::invalid_argument("O(m,r) requires 1 <= r <= (m+1)/2");
  std::vector<long long> lengths;
  for (long long i = 0; i < r; ++i) lengths.push_back(m - 2 * i);
  return family_w(lengths);
}

Word family_a(long long r) {
  if (r < 1) throw std::invalid_argument("A(r) requires r >= 1");
  std::vector<long long> lengths(static_cast<size_t>(r));
  long long p = 1;
  for (long long i = r - 1; i >= 0; --i) {
    lengths[static_cast<size_t>(i)] = p;
    if (p > (1LL << 40)) throw std::invalid_argument("A(r) too large");
    p *= 3;
  }
  return family_w(lengths);
}

Word family_b(long long r) {
  if (r < 1) throw std::invalid_argument("B(r) requires r >= 1");
  std::vector<long long> lengths;
  for (long long i = r; i >= 1; --i) lengths.push_back(i * r + 1);
  return family_w(lengths);
}

Word abba_block(long long r, long long count) {
  if (r < 1) throw std::invalid_argument("abba_block requires r >= 1");
  if (count < 1) throw std::invalid_argument("abba_block requires count >= 1");
  std::vector<uint8_t> symbols;
  symbols.reserve(static_cast<size_t>((r + 2) * count));
  for (long long c = 0; c < count; ++c) {
    symbols.push_back(1);
    symbols.insert(symbols.end(), static_cast<size_t>(r), 0);
    symbols.push_back(1);
  }
  return Word(std::move(symbols), 2);
}

Word separated_ones(const std::vector<long long>& a) {
  if (a.size() < 3 || a.size() % 2 == 0)
    throw std::invalid_argument("separated_ones requires parameters a_0..a_{2m} with m >= 1");
  std::vector<uint8_t> symbols;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw std::invalid_argument("separated_ones requires a_i >= 0");
    if (i > 0) symbols.push_back(1);
    symbols.insert(symbols.end(), static_cast<size_t>(a[i]), 0);
  }
  return Word(std::move(symbols), 2);
}

Word thue_morse_prefix(long long length) {
  if (length < 0) throw std::invalid_argument("prefix length must be nonnegative");
  std::vector<uint8_t> symbols(static_cast<size_t>(length));
  for (long long i = 0; i < length; ++i)
    symbols[static_cast<size_t>(i)] =
        static_cast<uint8_t>(__builtin_popcountll(static_cast<unsigned long long>(i)) & 1);
  return Word(std::move(symbols), 2);
}

Word kolakoski_prefix(long long length) {
  if (length < 0) throw std::invalid_argument("prefix length must be nonnegative");
  std::vector<uint8_t> s;
  if (length >= 1) s.push_back(1);
  if (length >= 2) {
    s.push_back(2);
    s.push_back(2);
  }
  size_t ptr = 2;  // next run-length descriptor
  uint8_t sym = 1;  // symbol of the next run
  while (s.size() < static_cast<size_t>(length)) {
    int reps = s[ptr++];
    for (int j = 0; j < reps && s.size() < static_cast<size_t>(length); ++j) s.push_back(sym);
    sym = static_cast<uint8_t>(3 - sym);
  }
  if (s.size() > static_cast<size_t>(length)) s.resize(static_cast<size_t>(length));
  return Word(std::move(s), 3);
}

Word generate(const std::string& family, const std::vector<long long>& params) {
  auto need = [&](size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("family '" + family + "' expects " + std::to_string(n) +
                                  " parameter(s), got " + std::to_string(params.size()));
  };
  if (family == "W") {
    if (params.empty()) throw std::invalid_argument("family 'W' expects run lengths");
    return family_w(params);
  }
  if (family == "O") {
    need(2);
    return family_o(params[0], params[1]);
  }
  if (family == "A") {
    need(1);
    return family_a(params[0]);
  }
  if (family == "B") {
    need(1);
    return family_b(params[0]);
  }
  if (family == "abba") {
    need(2);
    return abba_block(params[0], params[1]);
  }
  if (family == "separated-ones") return separated_ones(params);
  if (family == "thue-morse") {
    need(1);
    return thue_morse_prefix(params[0]);
  }
  if (family == "kolakoski") {
    need(1);
    return kolakoski_prefix(params[0]);
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

std::vector<long long> even_prefixes(SequenceFamily family, long long max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");
  Word w = family == SequenceFamily::ThueMorse ? thue_morse_prefix(max_len)
                                               : kolakoski_prefix(max_len);
  std::vector<long long> out{0};
  std::array<long long, 4> counts{};
  for (long long i = 0; i < max_len; ++i) {
    ++counts[w[static_cast<size_t>(i)]];
    bool even = true;
    for (long long c : counts) even = even && c % 2 == 0;
    if (even) out.push_back(i + 1);
  }
  return out;
}

}  // namespace shufsq
