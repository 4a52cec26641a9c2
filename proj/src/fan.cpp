#include "starfree/fan.hpp"

#include <array>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "starfree/errors.hpp"

namespace starfree {
namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxFanDimension) {
    fail(ErrorCode::kInput, "sign vector dimension " + std::to_string(n) + " outside 1.." +
                                std::to_string(kMaxFanDimension));
  }
}

std::uint32_t low_mask(int n) { return (std::uint32_t{1} << n) - 1; }

}  // namespace

SignVector SignVector::from_masks(int n, std::uint32_t plus, std::uint32_t minus) {
  check_dimension(n);
  if (((plus | minus) & ~low_mask(n)) != 0) fail(ErrorCode::kInput, "sign vector mask exceeds n");
  if ((plus & minus) != 0) fail(ErrorCode::kInput, "P(w) and N(w) must be disjoint");
  if ((plus | minus) == 0) fail(ErrorCode::kInput, "the zero vector is not a vertex");
  return SignVector(n, plus, minus);
}

SignVector SignVector::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  check_dimension(n);
  std::uint32_t plus = 0;
  std::uint32_t minus = 0;
  for (int i = 0; i < n; ++i) {
    switch (text[static_cast<std::size_t>(i)]) {
      case '+': plus |= std::uint32_t{1} << i; break;
      case '-': minus |= std::uint32_t{1} << i; break;
      case '0': break;
      default: fail(ErrorCode::kInput, "bad sign vector '" + std::string(text) + "'");
    }
  }
  return from_masks(n, plus, minus);
}

SignVector SignVector::from_index(int n, std::size_t index) {
  std::uint32_t plus = 0;
  std::uint32_t minus = 0;
  for (int i = 0; i < n; ++i, index /= 3) {
    if (index % 3 == 1) plus |= std::uint32_t{1} << i;
    if (index % 3 == 2) minus |= std::uint32_t{1} << i;
  }
  if (index != 0) fail(ErrorCode::kInput, "vertex index out of range");
  return from_masks(n, plus, minus);
}

int SignVector::entry(int i) const noexcept {
  const std::uint32_t bit = std::uint32_t{1} << (i - 1);
  return (plus_ & bit) ? 1 : ((minus_ & bit) ? -1 : 0);
}

bool SignVector::is_canonical() const noexcept {
  const std::uint32_t support = plus_ | minus_;
  return (plus_ & (support & (~support + 1))) != 0;
}

std::size_t SignVector::index() const noexcept {
  std::size_t index = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    index = index * 3 + (((plus_ >> i) & 1U) ? 1 : (((minus_ >> i) & 1U) ? 2 : 0));
  }
  return index;
}

std::string SignVector::to_text() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    const int e = entry(i);
    out += e > 0 ? '+' : (e < 0 ? '-' : '0');
  }
  return out;
}

bool precedes(const SignVector& u, const SignVector& v) {
  if (u.dimension() != v.dimension()) fail(ErrorCode::kInput, "sign vectors of different dimension");
  return (u.plus() & ~v.plus()) == 0 && (u.minus() & ~v.minus()) == 0;
}

bool comparable(const SignVector& u, const SignVector& v) { return precedes(u, v) || precedes(v, u); }

std::size_t vertex_table_size(int n) {
  check_dimension(n);
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) size *= 3;
  return size;
}

FanLabeling::FanLabeling(int n, int m) : n_(n), m_(m), labels_(vertex_table_size(n), 0) {
  if (m < 1) fail(ErrorCode::kInput, "label bound must be positive");
}

void FanLabeling::set(const SignVector& v, int label) {
  if (v.dimension() != n_) fail(ErrorCode::kInput, "sign vector dimension mismatch");
  if (label == 0 || label > m_ || label < -m_) {
    fail(ErrorCode::kInput, "label " + std::to_string(label) + " outside +-1.." + std::to_string(m_));
  }
  labels_[v.index()] = label;
}

void FanLabeling::set_antipodal(const SignVector& v, int label) {
  set(v, label);
  set(-v, -label);
}

std::string describe(const LabelingViolation& violation) {
  std::ostringstream out;
  out << (violation.kind == LabelingViolation::Kind::kAntipodality ? "antipodality" : "complementary edge")
      << ": " << violation.u.to_text() << " -> " << violation.label_u << ", " << violation.v.to_text()
      << " -> " << violation.label_v;
  return out.str();
}

namespace {

// Calls fn(u) for every nonzero u strictly below v.
template <typename Fn>
void for_each_face_below(const SignVector& v, Fn&& fn) {
  const std::uint32_t support = v.plus() | v.minus();
  for (std::uint32_t sub = (support - 1) & support; sub != 0; sub = (sub - 1) & support) {
    fn(SignVector::from_masks(v.dimension(), v.plus() & sub, v.minus() & sub));
  }
}

template <typename Fn>
void for_each_face_above(const SignVector& v, Fn&& fn) {
  const int n = v.dimension();
  const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  const std::uint32_t free = all & ~(v.plus() | v.minus());
  for (std::uint32_t sub = free; sub != 0; sub = (sub - 1) & free) {
    for (std::uint32_t p = sub;; p = (p - 1) & sub) {
      fn(SignVector::from_masks(n, v.plus() | p, v.minus() | (sub & ~p)));
      if (p == 0) break;
    }
  }
}

void check_total(const FanLabeling& labeling) {
  const auto table = labeling.table();
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i] == 0) {
      fail(ErrorCode::kInput, "labeling is partial: " +
                                  SignVector::from_index(labeling.dimension(), i).to_text() + " unset");
    }
  }
}

}  // namespace

std::optional<LabelingViolation> validate_labeling(const FanLabeling& labeling) {
  check_total(labeling);
  const int n = labeling.dimension();
  const std::size_t size = labeling.table().size();
  for (std::size_t i = 1; i < size; ++i) {
    const SignVector v = SignVector::from_index(n, i);
    if (labeling.label(-v) != -labeling.label(v)) {
      return LabelingViolation{LabelingViolation::Kind::kAntipodality, v, -v, labeling.label(v),
                               labeling.label(-v)};
    }
  }
  for (std::size_t i = 1; i < size; ++i) {
    const SignVector v = SignVector::from_index(n, i);
    const int lv = labeling.label(v);
    std::optional<LabelingViolation> found;
    for_each_face_below(v, [&](const SignVector& u) {
      if (!found && labeling.label(u) + lv == 0) {
        found = LabelingViolation{LabelingViolation::Kind::kComplementary, u, v, labeling.label(u), lv};
      }
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::uint64_t maximal_chain_count(int n) {
  std::uint64_t count = std::uint64_t{1} << n;
  for (int i = 2; i <= n; ++i) count *= static_cast<std::uint64_t>(i);
  return count;
}

namespace detail {
void check_chain_dimension(int n, int limit) {
  check_dimension(n);
  if (n > limit) {
    fail(ErrorCode::kResource, "maximal chains for n=" + std::to_string(n) + " number " +
                                   std::to_string(maximal_chain_count(n)) + ", above the limit n <= " +
                                   std::to_string(limit));
  }
}
}  // namespace detail

int alternation_sign(std::span<const int> labels) {
  std::array<int, kMaxFanDimension> sorted{};
  const std::size_t r = labels.size();
  if (r == 0 || r > sorted.size()) return 0;
  std::copy(labels.begin(), labels.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(r),
            [](int a, int b) { return std::abs(a) < std::abs(b); });
  for (std::size_t i = 1; i < r; ++i) {
    if (std::abs(sorted[i]) == std::abs(sorted[i - 1])) return 0;
    if ((sorted[i] > 0) == (sorted[i - 1] > 0)) return 0;
  }
  return sorted[0] > 0 ? 1 : -1;
}

AlternatingCensus count_alternating(const FanLabeling& labeling, bool collect, unsigned threads,
                                    int limit) {
  const int n = labeling.dimension();
  detail::check_chain_dimension(n, limit);
  check_total(labeling);
  const auto table = labeling.table();
  const std::uint32_t patterns = std::uint32_t{1} << n;
  threads = std::max(1U, std::min<unsigned>(threads, patterns));

  std::vector<AlternatingCensus> partial(threads);
  auto work = [&](unsigned part) {
    const std::uint32_t first = patterns * part / threads;
    const std::uint32_t last = patterns * (part + 1) / threads;
    AlternatingCensus& census = partial[part];
    std::array<int, kMaxFanDimension> labels{};
    for_each_maximal_chain_index(n, first, last, [&](std::span<const std::size_t> idx) {
      for (std::size_t i = 0; i < idx.size(); ++i) labels[i] = table[idx[i]];
      ++census.chains;
      const int sign = alternation_sign(std::span<const int>(labels.data(), idx.size()));
      if (sign > 0) {
        ++census.leading_positive;
        if (collect) {
          Chain chain;
          for (std::size_t i : idx) chain.push_back(SignVector::from_index(n, i));
          census.positive_chains.push_back(std::move(chain));
        }
      } else if (sign < 0) {
        ++census.leading_negative;
      }
    });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned part = 0; part < threads; ++part) pool.emplace_back(work, part);
    for (auto& th : pool) th.join();
  }

  AlternatingCensus total;
  for (auto& census : partial) {
    total.chains += census.chains;
    total.leading_positive += census.leading_positive;
    total.leading_negative += census.leading_negative;
    for (auto& chain : census.positive_chains) total.positive_chains.push_back(std::move(chain));
  }
  return total;
}

TuckerResult find_complementary_edge(const FanLabeling& labeling) {
  check_total(labeling);
  const int n = labeling.dimension();
  TuckerResult result;
  result.hypothesis_met = true;
  for (int label : labeling.table()) {
    if (std::abs(label) >= n) result.hypothesis_met = false;
  }
  const std::size_t size = labeling.table().size();
  for (std::size_t i = 1; i < size && !result.edge; ++i) {
    const SignVector v = SignVector::from_index(n, i);
    const int lv = labeling.label(v);
    for_each_face_below(v, [&](const SignVector& u) {
      if (!result.edge && labeling.label(u) + lv == 0) result.edge = std::make_pair(u, v);
    });
  }
  if (!result.edge && result.hypothesis_met) {
    fail(ErrorCode::kInternal, "no complementary edge although all labels are below n");
  }
  return result;
}

namespace {

// Canonical vertices sorted by support size, then index.
std::vector<SignVector> canonical_by_support(int n) {
  std::vector<SignVector> out;
  const std::size_t size = vertex_table_size(n);
  for (std::size_t i = 1; i < size; ++i) {
    SignVector v = SignVector::from_index(n, i);
    if (v.is_canonical()) out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(), [](const SignVector& a, const SignVector& b) {
    return a.support_size() < b.support_size();
  });
  return out;
}

int random_label(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2 * m - 1);
  const int r = pick(rng);
  return r < m ? r + 1 : -(r - m + 1);
}

}  // namespace

FanLabeling random_antipodal_labeling(int n, int m, std::mt19937_64& rng) {
  FanLabeling labeling(n, m);
  for (const SignVector& v : canonical_by_support(n)) labeling.set_antipodal(v, random_label(m, rng));
  return labeling;
}

FanLabeling random_valid_labeling(int n, int m, std::mt19937_64& rng) {
  if (m < n) fail(ErrorCode::kInput, "valid labelings need m >= n");
  const std::vector<SignVector> vertices = canonical_by_support(n);
  FanLabeling labeling(n, m);
  // Start from absolute values that strictly increase along chains, with
  // random signs: comparable vertices never cancel.
  std::bernoulli_distribution coin(0.5);
  for (const SignVector& v : vertices) {
    int floor = 0;
    for_each_face_below(v, [&](const SignVector& u) { floor = std::max(floor, std::abs(labeling.label(u))); });
    std::uniform_int_distribution<int> pick(floor + 1, m - (n - v.support_size()));
    const int value = pick(rng);
    labeling.set_antipodal(v, coin(rng) ? value : -value);
  }
  // Random relabelings that keep every comparable pair non-cancelling.
  std::uniform_int_distribution<std::size_t> pick_vertex(0, vertices.size() - 1);
  const std::size_t moves = 4 * vertices.size();
  for (std::size_t step = 0; step < moves; ++step) {
    const SignVector& v = vertices[pick_vertex(rng)];
    const int label = random_label(m, rng);
    bool ok = true;
    auto check = [&](const SignVector& u) { ok = ok && labeling.label(u) != -label; };
    for_each_face_below(v, check);
    for_each_face_above(v, check);
    if (ok) labeling.set_antipodal(v, label);
  }
  return labeling;
}

FanLabeling support_size_labeling(int n) {
  FanLabeling labeling(n, n);
  for (const SignVector& v : canonical_by_support(n)) {
    const int size = v.support_size();
    labeling.set_antipodal(v, subset_order_less(v.negative_set(), v.positive_set()) ? size : -size);
  }
  return labeling;
}

FanLabeling build_coloring_labeling(const KneserGraph& g, const Coloring& c) {
  const int n = g.n();
  const int k = g.k();
  if (c.size() != g.vertex_count()) fail(ErrorCode::kInput, "coloring does not match the Kneser graph");
  if (auto violation = verify_star_free(g.graph(), c)) {
    fail(ErrorCode::kInput, "coloring is not star-free: " + describe(*violation));
  }
  for (Color color : c.colors()) {
    if (color < 2 * k - 1) {
      fail(ErrorCode::kInput, "colors must start at 2k-1 = " + std::to_string(2 * k - 1) +
                                  ", found " + std::to_string(color));
    }
  }
  FanLabeling labeling(n, c.range());

  // Top color of the k-subsets of a side, memoized by side mask.
  std::vector<int> top(std::size_t{1} << n, -1);
  auto top_color = [&](std::uint32_t side) {
    int& slot = top[side];
    if (slot >= 0) return slot;
    std::vector<int> carriers(static_cast<std::size_t>(c.range()) + 1, 0);
    for_each_k_submask(side, k, [&](std::uint64_t mask) {
      ++carriers[c[static_cast<Vertex>(colex_rank(Subset::from_mask(n, mask)))]];
    });
    int twice = 0;
    int once = 0;
    for (int color = 1; color <= c.range(); ++color) {
      if (carriers[color] >= 2) twice = color;
      if (carriers[color] >= 1) once = color;
    }
    if (once == 0) fail(ErrorCode::kInternal, "side without k-subsets in the large-support case");
    slot = twice > 0 ? twice : once;
    return slot;
  };

  for (const SignVector& w : canonical_by_support(n)) {
    const Subset p = w.positive_set();
    const Subset q = w.negative_set();
    const bool positive_side = subset_order_less(q, p);
    const int support = w.support_size();
    int label = 0;
    if (support <= 2 * k - 2) {
      label = positive_side ? support : -support;
    } else {
      const int t = top_color(positive_side ? w.plus() : w.minus());
      label = positive_side ? t : -t;
    }
    labeling.set_antipodal(w, label);
  }
  return labeling;
}

AlternatingAnalysis analyze_alternating(const FanLabeling& labeling, const Chain& chain, int k) {
  const int n = labeling.dimension();
  if (chain.size() != static_cast<std::size_t>(n)) fail(ErrorCode::kInput, "chain is not maximal");
  std::vector<int> labels;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].dimension() != n || chain[i].support_size() != static_cast<int>(i) + 1 ||
        (i > 0 && !precedes(chain[i - 1], chain[i]))) {
      fail(ErrorCode::kInput, "not a maximal chain");
    }
    labels.push_back(labeling.label(chain[i]));
  }
  if (alternation_sign(labels) != 1) fail(ErrorCode::kInput, "chain is not leading-positive alternating");

  AlternatingAnalysis report;
  const int threshold = 2 * k - 1;
  int max_small = 0;
  int min_large = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].support_size() >= threshold) {
      ++report.large_support_labels;
      min_large = std::min(min_large, std::abs(labels[i]));
    } else {
      max_small = std::max(max_small, std::abs(labels[i]));
    }
  }
  report.large_support_on_top = report.large_support_labels == 0 || min_large > max_small;

  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (std::abs(labels[i] + labels[j]) != 1) continue;
      ConsecutivePair pair;
      const bool i_positive = labels[i] > 0;
      pair.positive_position = i_positive ? i : j;
      pair.negative_position = i_positive ? j : i;
      pair.positive_label = labels[pair.positive_position];
      pair.negative_label = labels[pair.negative_position];
      pair.positive_side = chain[pair.positive_position].positive_set();
      pair.negative_side = chain[pair.negative_position].negative_set();
      pair.both_large_support = chain[i].support_size() >= threshold && chain[j].support_size() >= threshold;
      report.pairs.push_back(pair);
    }
  }
  return report;
}

PairColorCheck check_pair_colors(const KneserGraph& g, const Coloring& c, const ConsecutivePair& pair) {
  const int k = g.k();
  std::vector<int> positive(static_cast<std::size_t>(c.range()) + 1, 0);
  std::vector<int> negative(static_cast<std::size_t>(c.range()) + 1, 0);
  for_each_k_submask(pair.positive_side.mask(), k, [&](std::uint64_t mask) {
    ++positive[c[g.index_of(Subset::from_mask(g.n(), mask))]];
  });
  for_each_k_submask(pair.negative_side.mask(), k, [&](std::uint64_t mask) {
    ++negative[c[g.index_of(Subset::from_mask(g.n(), mask))]];
  });
  PairColorCheck check;
  check.sides_disjointly_colored = true;
  for (int color = 1; color <= c.range(); ++color) {
    if (positive[color] > 0 && negative[color] > 0) check.sides_disjointly_colored = false;
  }
  auto carriers = [&](const std::vector<int>& counts, int label) {
    const int color = std::abs(label);
    return color <= c.range() ? counts[color] : 0;
  };
  check.positive_label_unique = carriers(positive, pair.positive_label) == 1;
  check.negative_label_unique = carriers(negative, pair.negative_label) == 1;
  return check;
}

FanLabeling parse_labeling_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<FanLabeling> labeling;
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::kInput, "labeling file line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::istringstream fields(line);
    if (!labeling) {
      std::string tag;
      int n = 0;
      int m = 0;
      if (!(fields >> tag >> n >> m) || tag != "FAN") bad("expected 'FAN <n> <m>'");
      labeling.emplace(n, m);
      continue;
    }
    std::string signs;
    int label = 0;
    if (!(fields >> signs >> label)) bad("expected '<signs> <label>'");
    if (static_cast<int>(signs.size()) != labeling->dimension()) bad("sign vector has wrong length");
    const SignVector v = SignVector::parse(signs);
    if (labeling->label(v) != 0) bad("vertex " + signs + " listed twice");
    labeling->set_antipodal(v, label);
  }
  if (!labeling) fail(ErrorCode::kInput, "labeling file has no header");
  return *labeling;
}

std::string format_labeling_file(const FanLabeling& labeling) {
  std::ostringstream out;
  out << "FAN " << labeling.dimension() << ' ' << labeling.label_bound() << '\n';
  const std::size_t size = labeling.table().size();
  for (std::size_t i = 1; i < size; ++i) {
    const SignVector v = SignVector::from_index(labeling.dimension(), i);
    if (v.is_canonical() && labeling.label_at(i) != 0) out << v.to_text() << ' ' << labeling.label_at(i) << '\n';
  }
  return out.str();
}

}  // namespace starfree
