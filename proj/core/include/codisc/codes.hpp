#ifndef CODISC_CODES_HPP
#define CODISC_CODES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codisc/rational.hpp"

namespace codisc {

// Hard cap on explicit word enumeration (words stored, pairs counted).
inline constexpr std::uint64_t kMaxEnumerableWords = std::uint64_t(1) << 22;

// A list of N binary words of length n. Coordinate j of word i lives in block
// j/64, bit (63 - j%64) -- most significant bit first, matching the random
// generator contract. Duplicates are permitted only when constructed in
// multiset mode (random codes).
class BinaryCode {
 public:
  BinaryCode(int n, std::vector<std::uint64_t> packed_words, bool allow_duplicates = false);

  int length() const { return n_; }
  std::uint64_t size() const { return count_; }
  size_t blocks() const { return blocks_; }

  int distance(std::uint64_t i, std::uint64_t j) const;
  int weight(std::uint64_t i) const;
  bool get(std::uint64_t i, int coordinate) const;
  std::span<const std::uint64_t> word(std::uint64_t i) const;
  std::string word_string(std::uint64_t i) const;

  bool is_linear() const { return linear_; }
  // reduced basis rows, packed like words; empty for the zero code
  const std::vector<std::vector<std::uint64_t>>& basis() const { return basis_; }

  static BinaryCode linear_from_basis(int n, const std::vector<std::vector<std::uint64_t>>& rows);

 private:
  friend BinaryCode extend_code(const BinaryCode&);
  int n_;
  size_t blocks_;
  std::uint64_t count_;
  bool linear_ = false;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<std::uint64_t>> basis_;
};

/// Lines of equal-length 0/1 words; '#' comments and blank lines ignored.
BinaryCode parse_code(std::string_view text, bool allow_duplicates = false);

struct GeneratorParse {
  BinaryCode code;
  int rank;
  int rows_given;
  bool dependent_rows() const { return rank < rows_given; }
};
/// Same file format; lines are basis rows, the code is their F2-span.
GeneratorParse parse_generator(std::string_view text);

BinaryCode hamming_code(int m);
BinaryCode simplex_code(int m);
BinaryCode golay23();
BinaryCode repetition(int n);
BinaryCode subcube(int n, int m);

/// N words drawn i.i.d. uniform (duplicates allowed). splitmix64 stream,
/// one or more outputs per word, coordinates from the most significant bit.
BinaryCode random_code(int n, std::uint64_t N, std::uint64_t seed);

/// Appends an overall parity bit; all pairwise distances become even.
BinaryCode extend_code(const BinaryCode& code);

/// Dual of a linear code (throws std::domain_error otherwise).
BinaryCode dual_code(const BinaryCode& code);

/// Resolves "hamming:m", "simplex:m", "golay23", "repetition:n",
/// "subcube:n:m", "random:n:N:seed".
BinaryCode make_named_code(std::string_view id);

struct DistanceDistribution {
  int n;
  std::uint64_t N;
  std::vector<Rational> A;  // A_0..A_n, ordered pair counts / N
};

struct DualDistribution {
  int n;
  std::vector<Rational> A;  // MacWilliams transform of the distance distribution
};

/// Ordered-pair distance counting, O(N^2).
DistanceDistribution distance_distribution(const BinaryCode& code);

DualDistribution dual_distribution(const BinaryCode& code);
DualDistribution dual_distribution(const DistanceDistribution& dist);

/// Word counts per Hamming weight (equals N * A for linear codes).
std::vector<std::uint64_t> weight_distribution(const BinaryCode& code);

/// Distance distribution of hamming:m for any m >= 2, via the MacWilliams
/// inverse of the one-distance dual spectrum; no enumeration.
DistanceDistribution hamming_distance_distribution(int m);

}  // namespace codisc

#endif
