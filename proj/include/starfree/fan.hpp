#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "starfree/coloring.hpp"
#include "starfree/combinatorics.hpp"
#include "starfree/kneser_graph.hpp"

namespace starfree {

/// Labelings are stored densely over {-1,0,1}^n, so n stays small.
inline constexpr int kMaxFanDimension = 12;
/// Default cap for maximal chain enumeration (2^n * n! chains).
inline constexpr int kDefaultChainLimit = 8;

/// A nonzero vector in {-1,0,+1}^n, kept as the disjoint pair (P(w), N(w)) of
/// coordinates equal to +1 and -1.
class SignVector {
 public:
  static SignVector from_masks(int n, std::uint32_t plus, std::uint32_t minus);
  /// "+-0" style text, coordinate 1 first.
  static SignVector parse(std::string_view text);
  static SignVector from_index(int n, std::size_t index);

  int dimension() const noexcept { return n_; }
  std::uint32_t plus() const noexcept { return plus_; }
  std::uint32_t minus() const noexcept { return minus_; }
  int support_size() const noexcept { return std::popcount(plus_ | minus_); }
  /// Entry at coordinate i (1-based).
  int entry(int i) const noexcept;

  Subset positive_set() const { return Subset::from_mask(n_, plus_); }
  Subset negative_set() const { return Subset::from_mask(n_, minus_); }

  SignVector operator-() const noexcept { return {n_, minus_, plus_}; }
  /// Representative of the antipodal pair: first nonzero coordinate is +1.
  bool is_canonical() const noexcept;
  /// Base-3 index with digit 1 for +1 and 2 for -1; coordinate 1 least significant.
  std::size_t index() const noexcept;
  std::string to_text() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  SignVector(int n, std::uint32_t plus, std::uint32_t minus) : n_(n), plus_(plus), minus_(minus) {}

  int n_ = 0;
  std::uint32_t plus_ = 0;
  std::uint32_t minus_ = 0;
};

/// u <= v when P(u) is in P(v) and N(u) is in N(v) (0 lies below both signs).
bool precedes(const SignVector& u, const SignVector& v);
/// u <= v or v <= u: the two vertices span an edge of the subdivided cross polytope.
bool comparable(const SignVector& u, const SignVector& v);

/// 3^n, the size of the dense vertex table.
std::size_t vertex_table_size(int n);

/// A map from nonzero sign vectors to +-{1..m}; 0 marks an unset vertex.
class FanLabeling {
 public:
  FanLabeling(int n, int m);

  int dimension() const noexcept { return n_; }
  int label_bound() const noexcept { return m_; }

  int label(const SignVector& v) const { return labels_[v.index()]; }
  int label_at(std::size_t index) const { return labels_[index]; }
  void set(const SignVector& v, int label);
  /// Sets v to `label` and -v to -label.
  void set_antipodal(const SignVector& v, int label);

  std::span<const int> table() const noexcept { return labels_; }

  friend bool operator==(const FanLabeling&, const FanLabeling&) = default;

 private:
  int n_;
  int m_;
  std::vector<int> labels_;
};

struct LabelingViolation {
  enum class Kind { kAntipodality, kComplementary };
  Kind kind;
  SignVector u;
  SignVector v;
  int label_u = 0;
  int label_v = 0;
};

std::string describe(const LabelingViolation& violation);

/// Checks lambda(-v) = -lambda(v) everywhere, then that no pair u < v has
/// labels summing to zero. Scans v by index, u over the faces below v.
/// Throws ErrorCode::kInput if some vertex is unset or a label exceeds m.
std::optional<LabelingViolation> validate_labeling(const FanLabeling& labeling);

/// A chain v_1 < ... < v_r; maximal chains have r = n and |supp v_i| = i.
using Chain = std::vector<SignVector>;

/// 2^n * n!.
std::uint64_t maximal_chain_count(int n);

namespace detail {
void check_chain_dimension(int n, int limit);
}

/// Streams every maximal chain once, ordered by sign pattern (bit i set means
/// coordinate i+1 negative) and then by the order in which coordinates enter
/// the support (lexicographic permutations). `visit` receives the vertex
/// indices of the chain, bottom first.
template <typename Visit>
void for_each_maximal_chain_index(int n, std::uint32_t first_pattern, std::uint32_t last_pattern,
                                  Visit&& visit) {
  std::size_t pow3[kMaxFanDimension + 1];
  pow3[0] = 1;
  for (int i = 1; i <= kMaxFanDimension; ++i) pow3[i] = pow3[i - 1] * 3;
  std::size_t indices[kMaxFanDimension];
  int perm[kMaxFanDimension];
  for (std::uint32_t pattern = first_pattern; pattern < last_pattern; ++pattern) {
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      std::size_t index = 0;
      for (int i = 0; i < n; ++i) {
        const int coord = perm[i];
        index += pow3[coord] * (((pattern >> coord) & 1U) ? 2 : 1);
        indices[i] = index;
      }
      visit(std::span<const std::size_t>(indices, static_cast<std::size_t>(n)));
    } while (std::next_permutation(perm, perm + n));
  }
}

/// Calls visit(const Chain&) for every maximal chain, in the order above.
/// Throws ErrorCode::kResource when n exceeds `limit`.
template <typename Visit>
void enumerate_maximal_chains(int n, Visit&& visit, int limit = kDefaultChainLimit) {
  detail::check_chain_dimension(n, limit);
  Chain chain;
  for_each_maximal_chain_index(n, 0, std::uint32_t{1} << n, [&](std::span<const std::size_t> idx) {
    chain.clear();
    for (std::size_t i : idx) chain.push_back(SignVector::from_index(n, i));
    visit(static_cast<const Chain&>(chain));
  });
}

/// Labels sorted by absolute value strictly increase and alternate in sign.
/// Returns +1 / -1 for a leading positive / negative alternating sequence, 0 otherwise.
int alternation_sign(std::span<const int> labels);

struct AlternatingCensus {
  std::uint64_t chains = 0;
  std::uint64_t leading_positive = 0;
  std::uint64_t leading_negative = 0;
  /// Leading-positive alternating chains, when requested.
  std::vector<Chain> positive_chains;

  friend bool operator==(const AlternatingCensus&, const AlternatingCensus&) = default;
};

/// Counts alternating maximal chains. Work is split by sign pattern across
/// `threads`; counts do not depend on the split.
AlternatingCensus count_alternating(const FanLabeling& labeling, bool collect = false,
                                    unsigned threads = 1, int limit = kDefaultChainLimit);

struct TuckerResult {
  /// Labels lie in +-{1..n-1}, so a complementary edge must exist.
  bool hypothesis_met = false;
  std::optional<std::pair<SignVector, SignVector>> edge;
};

/// Exhaustive scan for u < v with lambda(u) + lambda(v) = 0. When the labels
/// reach n the scan may come back empty; with labels below n an empty scan
/// throws ErrorCode::kInternal.
TuckerResult find_complementary_edge(const FanLabeling& labeling);

/// Uniform random labels in +-{1..m} per antipodal pair.
FanLabeling random_antipodal_labeling(int n, int m, std::mt19937_64& rng);

/// Random antipodal labeling with no complementary edge: absolute values
/// increasing along chains with random signs, followed by random single-vertex
/// relabelings that keep the labeling valid. Requires m >= n.
FanLabeling random_valid_labeling(int n, int m, std::mt19937_64& rng);

/// lambda(w) = +-|supp w| with sign + iff N(w) precedes P(w) in the subset order.
FanLabeling support_size_labeling(int n);

/// The labeling built from a star-free coloring of KG(n,k) whose colors lie in
/// 2k-1..m. Support at most 2k-2: +-|supp w| signed by the subset order on
/// (P(w), N(w)). Larger support: take the later side S of P(w), N(w); the label
/// is the largest color carried by two distinct k-subsets of S, or failing
/// that the largest color of any k-subset of S, signed + iff S = P(w).
FanLabeling build_coloring_labeling(const KneserGraph& g, const Coloring& c);

/// A pair of chain vertices whose labels sum to +-1.
struct ConsecutivePair {
  std::size_t positive_position = 0;  ///< position in the chain, 0 = bottom
  std::size_t negative_position = 0;
  int positive_label = 0;
  int negative_label = 0;
  Subset positive_side;  ///< P of the positively labeled vertex
  Subset negative_side;  ///< N of the negatively labeled vertex
  bool both_large_support = false;
};

struct AlternatingAnalysis {
  int large_support_labels = 0;  ///< vertices with support >= 2k-1
  /// Every large-support label exceeds every small-support label in absolute value.
  bool large_support_on_top = false;
  std::vector<ConsecutivePair> pairs;
};

/// Requires a maximal, leading-positive alternating chain (ErrorCode::kInput otherwise).
AlternatingAnalysis analyze_alternating(const FanLabeling& labeling, const Chain& chain, int k);

struct PairColorCheck {
  /// No color appears both on a k-subset of positive_side and on one of negative_side.
  bool sides_disjointly_colored = false;
  /// The positive label is carried by exactly one k-subset of positive_side.
  bool positive_label_unique = false;
  /// The absolute negative label is carried by exactly one k-subset of negative_side.
  bool negative_label_unique = false;
};

PairColorCheck check_pair_colors(const KneserGraph& g, const Coloring& c, const ConsecutivePair& pair);

/// "FAN n m" then "<signs> <label>" per canonical vertex; a line for a
/// non-canonical vertex sets its antipode as well.
FanLabeling parse_labeling_file(std::string_view text);
std::string format_labeling_file(const FanLabeling& labeling);

}  // namespace starfree
