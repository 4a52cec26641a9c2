#include "starfree/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "starfree/errors.hpp"

namespace starfree {
namespace {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    fail(ErrorCode::kInput, "ground set size " + std::to_string(n) +
                                " outside 1.." + std::to_string(kMaxGroundSize));
  }
}

std::uint64_t ground_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Pascal table for a <= 64; every entry fits in 64 bits (C(64,32) < 2^61).
struct PascalTable {
  std::uint64_t value[kMaxGroundSize + 1][kMaxGroundSize + 1] = {};
  constexpr PascalTable() {
    for (int a = 0; a <= kMaxGroundSize; ++a) {
      value[a][0] = 1;
      for (int b = 1; b <= a; ++b) value[a][b] = value[a - 1][b - 1] + value[a - 1][b];
    }
  }
};

constexpr PascalTable kPascal{};

}  // namespace

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
  if (b > a) return 0;
  if (a <= kMaxGroundSize) return kPascal.value[a][b];
  b = std::min(b, a - b);
  using u128 = unsigned __int128;
  u128 r = 1;
  // r_i = C(a - b + i, i) is nondecreasing in i, so an overflow at any step
  // means the final value overflows as well.
  for (std::uint64_t i = 1; i <= b; ++i) {
    u128 next;
    if (__builtin_mul_overflow(r, static_cast<u128>(a - b + i), &next)) {
      fail(ErrorCode::kOverflow, "C(" + std::to_string(a) + "," +
                                     std::to_string(b) + ") overflows 64 bits");
    }
    r = next / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      fail(ErrorCode::kOverflow, "C(" + std::to_string(a) + "," +
                                     std::to_string(b) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

Subset Subset::from_elements(int n, std::span<const int> elements) {
  check_ground_size(n);
  std::uint64_t mask = 0;
  int previous = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      fail(ErrorCode::kInput, "element " + std::to_string(e) + " outside [1," +
                                  std::to_string(n) + "]");
    }
    if (e <= previous) {
      fail(ErrorCode::kInput, "subset elements must be strictly increasing");
    }
    mask |= std::uint64_t{1} << (e - 1);
    previous = e;
  }
  return Subset(n, mask);
}

Subset Subset::from_mask(int n, std::uint64_t mask) {
  check_ground_size(n);
  if ((mask & ~ground_mask(n)) != 0) {
    fail(ErrorCode::kInput, "mask has elements outside [1," + std::to_string(n) + "]");
  }
  return Subset(n, mask);
}

Subset Subset::full(int n) {
  check_ground_size(n);
  return Subset(n, ground_mask(n));
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

bool Subset::intersects(const Subset& other) const {
  if (n_ != other.n_) fail(ErrorCode::kInput, "subsets of different ground sets");
  return (mask_ & other.mask_) != 0;
}

bool Subset::is_subset_of(const Subset& other) const {
  if (n_ != other.n_) fail(ErrorCode::kInput, "subsets of different ground sets");
  return (mask_ & ~other.mask_) == 0;
}

std::uint64_t colex_rank(const Subset& s) {
  std::uint64_t rank = 0;
  std::uint64_t i = 1;
  for (std::uint64_t rest = s.mask(); rest != 0; rest &= rest - 1, ++i) {
    rank += kPascal.value[std::countr_zero(rest)][i];
  }
  return rank;
}

Subset colex_unrank(int n, int k, std::uint64_t rank) {
  check_ground_size(n);
  if (k < 0 || k > n) fail(ErrorCode::kInput, "subset size outside 0..n");
  if (rank >= binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k))) {
    fail(ErrorCode::kInput, "colex rank " + std::to_string(rank) + " out of range");
  }
  std::uint64_t mask = 0;
  int bound = n;  // next element is at most `bound`
  for (int i = k; i >= 1; --i) {
    // largest c < bound with C(c, i) <= rank; element is c + 1
    int c = bound - 1;
    while (binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(i)) > rank) --c;
    rank -= binomial(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(i));
    mask |= std::uint64_t{1} << c;
    bound = c;
  }
  return Subset::from_mask(n, mask);
}

bool subset_order_less(const Subset& a, const Subset& b) {
  if (a.ground_size() != b.ground_size()) {
    fail(ErrorCode::kInput, "cannot order subsets of different ground sets");
  }
  if (a.size() != b.size()) return a.size() < b.size();
  return a.mask() < b.mask();
}

std::string to_text(const Subset& s) {
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

Subset parse_subset(int n, std::string_view text) {
  std::vector<int> elements;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
      fail(ErrorCode::kInput, "bad subset text '" + std::string(text) + "'");
    }
    elements.push_back(value);
    pos = comma + 1;
    if (comma + 1 == text.size()) fail(ErrorCode::kInput, "trailing comma in subset text");
  }
  return Subset::from_elements(n, elements);
}

}  // namespace starfree
