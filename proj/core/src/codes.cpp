#include "codisc/codes.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "codisc/errors.hpp"
#include "codisc/kernels.hpp"
#include "codisc/krawtchouk.hpp"

namespace codisc {

namespace {

size_t blocks_for(int n) { return static_cast<size_t>(n + 63) / 64; }

void set_bit(std::uint64_t* word, int j) { word[j >> 6] |= 1ULL << (63 - (j & 63)); }

bool get_bit(const std::uint64_t* word, int j) { return (word[j >> 6] >> (63 - (j & 63))) & 1; }

// index of the lowest-coordinate set bit, or -1
int leading_coordinate(std::span<const std::uint64_t> row) {
  for (size_t b = 0; b < row.size(); ++b) {
    if (row[b]) return static_cast<int>(b) * 64 + std::countl_zero(row[b]);
  }
  return -1;
}

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (size_t b = 0; b < dst.size(); ++b) dst[b] ^= src[b];
}

// Gaussian elimination over F2; returns the reduced independent rows,
// pivots in increasing coordinate order.
std::vector<std::vector<std::uint64_t>> row_reduce(std::vector<std::vector<std::uint64_t>> rows) {
  std::vector<std::vector<std::uint64_t>> reduced;
  for (auto& row : rows) {
    for (const auto& r : reduced) {
      int p = leading_coordinate(r);
      if (get_bit(row.data(), p)) xor_into(row, r);
    }
    if (leading_coordinate(row) >= 0) reduced.push_back(std::move(row));
  }
  std::sort(reduced.begin(), reduced.end(), [](const auto& a, const auto& b) {
    return leading_coordinate(a) < leading_coordinate(b);
  });
  // back-substitution for a unique reduced form
  for (size_t i = 0; i < reduced.size(); ++i) {
    for (size_t j = i + 1; j < reduced.size(); ++j) {
      int p = leading_coordinate(reduced[j]);
      if (get_bit(reduced[i].data(), p)) xor_into(reduced[i], reduced[j]);
    }
  }
  return reduced;
}

std::vector<std::vector<std::uint64_t>> nullspace(
    const std::vector<std::vector<std::uint64_t>>& rows, int n) {
  auto reduced = row_reduce(rows);
  size_t nb = blocks_for(n);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (const auto& r : reduced) is_pivot[static_cast<size_t>(leading_coordinate(r))] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<std::uint64_t> v(nb, 0);
    set_bit(v.data(), free);
    for (const auto& r : reduced) {
      if (get_bit(r.data(), free)) set_bit(v.data(), leading_coordinate(r));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t tail_mask(int n) {
  int r = n & 63;
  return r == 0 ? ~0ULL : ~0ULL << (64 - r);
}

}  // namespace

BinaryCode::BinaryCode(int n, std::vector<std::uint64_t> packed_words, bool allow_duplicates)
    : n_(n), blocks_(blocks_for(n)), bits_(std::move(packed_words)) {
  if (n < 1) throw std::domain_error("code length must be positive");
  if (bits_.empty() || bits_.size() % blocks_ != 0)
    throw std::domain_error("packed words do not match the code length");
  count_ = bits_.size() / blocks_;
  std::uint64_t mask = tail_mask(n_);
  for (std::uint64_t i = 0; i < count_; ++i) bits_[(i + 1) * blocks_ - 1] &= mask;
  if (!allow_duplicates && count_ > 1) {
    std::vector<std::span<const std::uint64_t>> view;
    view.reserve(count_);
    for (std::uint64_t i = 0; i < count_; ++i) view.push_back(word(i));
    auto less = [](auto a, auto b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    auto eq = [](auto a, auto b) { return std::equal(a.begin(), a.end(), b.begin()); };
    std::sort(view.begin(), view.end(), less);
    for (std::uint64_t i = 0; i + 1 < count_; ++i) {
      if (eq(view[i], view[i + 1]))
        throw validation_error("duplicate words in a set-mode code");
    }
  }
}

int BinaryCode::distance(std::uint64_t i, std::uint64_t j) const {
  const std::uint64_t* a = bits_.data() + i * blocks_;
  const std::uint64_t* b = bits_.data() + j * blocks_;
  int d = 0;
  for (size_t k = 0; k < blocks_; ++k) d += std::popcount(a[k] ^ b[k]);
  return d;
}

int BinaryCode::weight(std::uint64_t i) const {
  const std::uint64_t* a = bits_.data() + i * blocks_;
  int d = 0;
  for (size_t k = 0; k < blocks_; ++k) d += std::popcount(a[k]);
  return d;
}

bool BinaryCode::get(std::uint64_t i, int coordinate) const {
  return get_bit(bits_.data() + i * blocks_, coordinate);
}

std::span<const std::uint64_t> BinaryCode::word(std::uint64_t i) const {
  return {bits_.data() + i * blocks_, blocks_};
}

std::string BinaryCode::word_string(std::uint64_t i) const {
  std::string s(static_cast<size_t>(n_), '0');
  for (int j = 0; j < n_; ++j)
    if (get(i, j)) s[static_cast<size_t>(j)] = '1';
  return s;
}

BinaryCode BinaryCode::linear_from_basis(int n,
                                         const std::vector<std::vector<std::uint64_t>>& rows) {
  auto reduced = row_reduce(rows);
  int rank = static_cast<int>(reduced.size());
  if (rank > 22 || (std::uint64_t(1) << rank) > kMaxEnumerableWords)
    throw resource_error("linear code with 2^" + std::to_string(rank) +
                         " words is too large to enumerate");
  size_t nb = blocks_for(n);
  std::uint64_t count = std::uint64_t(1) << rank;
  std::vector<std::uint64_t> bits(count * nb, 0);
  std::vector<std::uint64_t> current(nb, 0);
  for (std::uint64_t g = 1; g < count; ++g) {
    int flip = std::countr_zero(g);
    xor_into(current, reduced[static_cast<size_t>(flip)]);
    std::copy(current.begin(), current.end(), bits.begin() + static_cast<size_t>(g) * nb);
  }
  BinaryCode code(n, std::move(bits));
  code.linear_ = true;
  code.basis_ = std::move(reduced);
  return code;
}

namespace {

std::vector<std::string> split_payload_lines(std::string_view text,
                                             std::vector<int>* line_numbers) {
  std::vector<std::string> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    size_t a = line.find_first_not_of(" \t\r");
    size_t b = line.find_last_not_of(" \t\r");
    if (a != std::string_view::npos) {
      out.emplace_back(line.substr(a, b - a + 1));
      if (line_numbers) line_numbers->push_back(line_no);
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::uint64_t> pack_word_line(const std::string& line, int n, int line_no) {
  std::vector<std::uint64_t> w(blocks_for(n), 0);
  for (int j = 0; j < n; ++j) {
    char c = line[static_cast<size_t>(j)];
    if (c == '1')
      set_bit(w.data(), j);
    else if (c != '0')
      throw parse_error(std::string("invalid character '") + c + "' in word", line_no);
  }
  return w;
}

}  // namespace

BinaryCode parse_code(std::string_view text, bool allow_duplicates) {
  std::vector<int> line_numbers;
  auto lines = split_payload_lines(text, &line_numbers);
  if (lines.empty()) throw parse_error("no words in input");
  int n = static_cast<int>(lines[0].size());
  if (lines.size() > kMaxEnumerableWords) throw resource_error("too many words");
  size_t nb = blocks_for(n);
  std::vector<std::uint64_t> bits;
  bits.reserve(lines.size() * nb);
  std::vector<std::vector<std::uint64_t>> seen;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (static_cast<int>(lines[i].size()) != n)
      throw parse_error("word length " + std::to_string(lines[i].size()) +
                            " differs from first word length " + std::to_string(n),
                        line_numbers[i]);
    auto w = pack_word_line(lines[i], n, line_numbers[i]);
    if (!allow_duplicates) {
      auto it = std::lower_bound(seen.begin(), seen.end(), w);
      if (it != seen.end() && *it == w)
        throw parse_error("duplicate word '" + lines[i] + "'", line_numbers[i]);
      seen.insert(it, w);
    }
    bits.insert(bits.end(), w.begin(), w.end());
  }
  return BinaryCode(n, std::move(bits), /*allow_duplicates=*/true);
}

GeneratorParse parse_generator(std::string_view text) {
  std::vector<int> line_numbers;
  auto lines = split_payload_lines(text, &line_numbers);
  if (lines.empty()) throw parse_error("no generator rows in input");
  int n = static_cast<int>(lines[0].size());
  std::vector<std::vector<std::uint64_t>> rows;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (static_cast<int>(lines[i].size()) != n)
      throw parse_error("row length differs from first row", line_numbers[i]);
    rows.push_back(pack_word_line(lines[i], n, line_numbers[i]));
  }
  BinaryCode code = BinaryCode::linear_from_basis(n, rows);
  int rank = static_cast<int>(code.basis().size());
  return GeneratorParse{std::move(code), rank, static_cast<int>(rows.size())};
}

BinaryCode hamming_code(int m) {
  if (m < 2) throw std::domain_error("hamming code requires m >= 2");
  int n = (1 << m) - 1;
  // parity-check rows; column p (1-based) is the m-bit binary of p, MSB first
  std::vector<std::vector<std::uint64_t>> h(static_cast<size_t>(m),
                                            std::vector<std::uint64_t>(blocks_for(n), 0));
  for (int p = 1; p <= n; ++p) {
    for (int r = 0; r < m; ++r) {
      if ((p >> (m - 1 - r)) & 1) set_bit(h[static_cast<size_t>(r)].data(), p - 1);
    }
  }
  return BinaryCode::linear_from_basis(n, nullspace(h, n));
}

BinaryCode simplex_code(int m) {
  if (m < 2) throw std::domain_error("simplex code requires m >= 2");
  int n = (1 << m) - 1;
  std::vector<std::vector<std::uint64_t>> h(static_cast<size_t>(m),
                                            std::vector<std::uint64_t>(blocks_for(n), 0));
  for (int p = 1; p <= n; ++p) {
    for (int r = 0; r < m; ++r) {
      if ((p >> (m - 1 - r)) & 1) set_bit(h[static_cast<size_t>(r)].data(), p - 1);
    }
  }
  return BinaryCode::linear_from_basis(n, h);
}

BinaryCode golay23() {
  // cyclic [23,12]: shifts of g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1
  constexpr int kGolayLength = 23;
  constexpr int kGeneratorExponents[] = {0, 2, 4, 5, 6, 10, 11};
  std::vector<std::vector<std::uint64_t>> rows;
  for (int s = 0; s < 12; ++s) {
    std::vector<std::uint64_t> row(1, 0);
    for (int e : kGeneratorExponents) set_bit(row.data(), e + s);
    rows.push_back(std::move(row));
  }
  return BinaryCode::linear_from_basis(kGolayLength, rows);
}

BinaryCode repetition(int n) {
  if (n < 1) throw std::domain_error("repetition code requires n >= 1");
  std::vector<std::uint64_t> ones(blocks_for(n), 0);
  for (int j = 0; j < n; ++j) set_bit(ones.data(), j);
  return BinaryCode::linear_from_basis(n, {ones});
}

BinaryCode subcube(int n, int m) {
  if (n < 1 || m < 0 || m >= n) throw std::domain_error("subcube requires 0 <= m < n");
  std::vector<std::vector<std::uint64_t>> rows;
  for (int j = 0; j < n - m; ++j) {
    std::vector<std::uint64_t> e(blocks_for(n), 0);
    set_bit(e.data(), j);
    rows.push_back(std::move(e));
  }
  return BinaryCode::linear_from_basis(n, rows);
}

BinaryCode random_code(int n, std::uint64_t N, std::uint64_t seed) {
  if (n < 1) throw std::domain_error("random code requires n >= 1");
  if (N < 1) throw std::domain_error("random code requires N >= 1");
  if (N > kMaxEnumerableWords) throw resource_error("random code too large");
  size_t nb = blocks_for(n);
  std::uint64_t state = seed;
  std::vector<std::uint64_t> bits;
  bits.reserve(N * nb);
  for (std::uint64_t i = 0; i < N; ++i) {
    for (size_t b = 0; b < nb; ++b) bits.push_back(splitmix64(state));
  }
  return BinaryCode(n, std::move(bits), /*allow_duplicates=*/true);
}

BinaryCode extend_code(const BinaryCode& code) {
  int n = code.length();
  size_t nb_new = blocks_for(n + 1);
  std::vector<std::uint64_t> bits(code.size() * nb_new, 0);
  for (std::uint64_t i = 0; i < code.size(); ++i) {
    auto w = code.word(i);
    std::copy(w.begin(), w.end(), bits.begin() + i * nb_new);
    if (code.weight(i) % 2 == 1) set_bit(bits.data() + i * nb_new, n);
  }
  BinaryCode out(n + 1, std::move(bits), /*allow_duplicates=*/true);
  if (code.is_linear()) {
    std::vector<std::vector<std::uint64_t>> basis;
    for (const auto& row : code.basis()) {
      std::vector<std::uint64_t> r(nb_new, 0);
      std::copy(row.begin(), row.end(), r.begin());
      int wt = 0;
      for (auto b : row) wt += std::popcount(b);
      if (wt % 2 == 1) set_bit(r.data(), n);
      basis.push_back(std::move(r));
    }
    out.linear_ = true;
    out.basis_ = row_reduce(basis);
  }
  return out;
}

BinaryCode dual_code(const BinaryCode& code) {
  if (!code.is_linear()) throw std::domain_error("dual_code requires a linear code");
  return BinaryCode::linear_from_basis(code.length(), nullspace(code.basis(), code.length()));
}

BinaryCode make_named_code(std::string_view id) {
  std::vector<std::string> parts;
  size_t pos = 0;
  while (pos <= id.size()) {
    size_t colon = id.find(':', pos);
    parts.emplace_back(id.substr(pos, colon == std::string_view::npos ? colon : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  auto as_u64 = [&](const std::string& s) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw parse_error("bad number '" + s + "' in code id '" + std::string(id) + "'");
    return v;
  };
  const std::string& kind = parts[0];
  auto arity = [&](size_t want) {
    if (parts.size() != want)
      throw parse_error("code id '" + std::string(id) + "' takes " + std::to_string(want - 1) +
                        " parameter(s)");
  };
  if (kind == "hamming") {
    arity(2);
    return hamming_code(static_cast<int>(as_u64(parts[1])));
  }
  if (kind == "simplex") {
    arity(2);
    return simplex_code(static_cast<int>(as_u64(parts[1])));
  }
  if (kind == "golay23") {
    arity(1);
    return golay23();
  }
  if (kind == "repetition") {
    arity(2);
    return repetition(static_cast<int>(as_u64(parts[1])));
  }
  if (kind == "subcube") {
    arity(3);
    return subcube(static_cast<int>(as_u64(parts[1])), static_cast<int>(as_u64(parts[2])));
  }
  if (kind == "random") {
    arity(4);
    return random_code(static_cast<int>(as_u64(parts[1])), as_u64(parts[2]), as_u64(parts[3]));
  }
  throw parse_error("unknown code id '" + std::string(id) + "'");
}

DistanceDistribution distance_distribution(const BinaryCode& code) {
  int n = code.length();
  std::uint64_t N = code.size();
  std::vector<std::uint64_t> count(static_cast<size_t>(n) + 1, 0);
  count[0] = N;  // the diagonal pairs
  for (std::uint64_t i = 0; i < N; ++i) {
    for (std::uint64_t j = i + 1; j < N; ++j) {
      count[static_cast<size_t>(code.distance(i, j))] += 2;
    }
  }
  DistanceDistribution dist{n, N, {}};
  dist.A.reserve(static_cast<size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) dist.A.push_back(ratio(Integer(static_cast<unsigned long>(count[w])),
                                                      Integer(static_cast<unsigned long>(N))));
  return dist;
}

DualDistribution dual_distribution(const DistanceDistribution& dist) {
  auto dual = macwilliams_forward(dist.A, Rational(static_cast<unsigned long>(dist.N)));
  return DualDistribution{dist.n, std::move(dual)};
}

DualDistribution dual_distribution(const BinaryCode& code) {
  return dual_distribution(distance_distribution(code));
}

std::vector<std::uint64_t> weight_distribution(const BinaryCode& code) {
  std::vector<std::uint64_t> counts(static_cast<size_t>(code.length()) + 1, 0);
  for (std::uint64_t i = 0; i < code.size(); ++i) ++counts[static_cast<size_t>(code.weight(i))];
  return counts;
}

DistanceDistribution hamming_distance_distribution(int m) {
  if (m < 2) throw std::domain_error("hamming code requires m >= 2");
  if (m > 6) throw resource_error("hamming:m distribution supported for m <= 6 (N fits 64 bits)");
  int n = (1 << m) - 1;
  std::uint64_t N = std::uint64_t(1) << (n - m);
  std::vector<Rational> dual(static_cast<size_t>(n) + 1, Rational(0));
  dual[0] = 1;
  dual[static_cast<size_t>((n + 1) / 2)] = n;
  auto A = macwilliams_inverse(dual, Rational(static_cast<unsigned long>(N)));
  return DistanceDistribution{n, N, std::move(A)};
}

}  // namespace codisc
