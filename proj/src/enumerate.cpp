#include "paucity/enumerate.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "paucity/error.hpp"

namespace paucity {

const char* class_name(SolutionClass c) {
  switch (c) {
    case SolutionClass::Trivial:
      return "TRIVIAL";
    case SolutionClass::Shared:
      return "SHARED";
    case SolutionClass::Disjoint:
      return "DISJOINT";
  }
  return "?";
}

SolutionClass classify(const std::vector<std::int64_t>& lhs, const std::vector<std::int64_t>& rhs) {
  if (lhs.size() != rhs.size()) {
    throw Error(ErrorKind::LengthMismatch, "classify needs tuples of equal length, got " + std::to_string(lhs.size()) +
                                               " and " + std::to_string(rhs.size()));
  }
  auto a = lhs;
  auto b = rhs;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a == b) return SolutionClass::Trivial;
  for (auto x : a) {
    if (std::binary_search(b.begin(), b.end(), x)) return SolutionClass::Shared;
  }
  return SolutionClass::Disjoint;
}

std::uint64_t trivial_count(int s, std::int64_t B) {
  if (B < 1) throw Error(ErrorKind::InvalidArgument, "box bound B must be >= 1");
  const auto b = static_cast<std::uint64_t>(B);
  switch (s) {
    case 2:
      return 2 * b * b - b;
    case 3:
      return 6 * b * (b - 1) * (b - 2) + 9 * b * (b - 1) + b;
    default:
      throw Error(ErrorKind::UnsupportedS, "only s = 2 and s = 3 are supported, got s = " + std::to_string(s));
  }
}

namespace {

void check_s(int s) {
  if (s != 2 && s != 3) {
    throw Error(ErrorKind::UnsupportedS, "only s = 2 and s = 3 are supported, got s = " + std::to_string(s));
  }
}

std::uint64_t multiset_count(int s, std::uint64_t n) {
  if (s == 2) return n * (n + 1) / 2;
  return n * (n + 1) / 2 * (n + 2) / 3;
}

using Index = std::uint32_t;
using Multiset = std::array<Index, 3>;

template <typename Key>
struct Entry {
  Key key;
  Multiset idx;
};

inline std::uint64_t residue(const Int128& key, unsigned mod) {
  Int128 r = key % static_cast<Int128>(mod);
  if (r < 0) r += mod;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t residue(const BigInt& key, unsigned mod) {
  return mpz_fdiv_ui(key.get_mpz_t(), mod);
}

// Number of distinct orderings of a sorted multiset of size s.
inline std::uint64_t ordering_weight(const Multiset& m, int s) {
  if (s == 2) return m[0] == m[1] ? 1 : 2;
  if (m[0] == m[1] && m[1] == m[2]) return 1;
  if (m[0] == m[1] || m[1] == m[2]) return 3;
  return 6;
}

inline bool shares_element(const Multiset& a, const Multiset& b, int s) {
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(j)]) return true;
    }
  }
  return false;
}

std::vector<std::vector<Index>> orderings(const Multiset& m, int s) {
  std::vector<Index> v(m.begin(), m.begin() + s);
  std::vector<std::vector<Index>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

template <typename Key>
class SumJoin {
 public:
  SumJoin(const std::vector<Key>& values, int s, unsigned partitions, unsigned threads)
      : values_(values), s_(s), partitions_(partitions), threads_(threads) {}

  template <typename OnGroup>
  void run(OnGroup&& on_group) const {
    for (unsigned part = 0; part < partitions_; ++part) {
      auto table = build(part);
      std::sort(table.begin(), table.end(), [](const Entry<Key>& a, const Entry<Key>& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.idx < b.idx;
      });
      std::size_t lo = 0;
      while (lo < table.size()) {
        std::size_t hi = lo + 1;
        while (hi < table.size() && table[hi].key == table[lo].key) ++hi;
        on_group(table.data() + lo, hi - lo);
        lo = hi;
      }
    }
  }

 private:
  // Entries whose key lies in residue class `part`, built in stripes of the leading index.
  std::vector<Entry<Key>> build(unsigned part) const {
    const auto n = static_cast<Index>(values_.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(threads_, n));
    std::vector<std::vector<Entry<Key>>> stripes(workers);
    auto work = [&](unsigned w) {
      auto& out = stripes[w];
      for (Index i = w; i < n; i += workers) {
        for (Index j = i; j < n; ++j) {
          if (s_ == 2) {
            Key key = values_[i] + values_[j];
            if (partitions_ == 1 || residue(key, partitions_) == part) out.push_back({std::move(key), {i, j, 0}});
            continue;
          }
          Key ij = values_[i] + values_[j];
          for (Index k = j; k < n; ++k) {
            Key key = ij + values_[k];
            if (partitions_ == 1 || residue(key, partitions_) == part) out.push_back({std::move(key), {i, j, k}});
          }
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    std::vector<Entry<Key>> table;
    std::size_t total = 0;
    for (auto& st : stripes) total += st.size();
    table.reserve(total);
    for (auto& st : stripes) std::move(st.begin(), st.end(), std::back_inserter(table));
    return table;
  }

  const std::vector<Key>& values_;
  int s_;
  unsigned partitions_;
  unsigned threads_;
};

template <typename Key>
void join_counts(const std::vector<Key>& values, const std::vector<std::int64_t>& points, int s, unsigned partitions,
                 unsigned threads, const EnumerateOptions& options, bool emitting, CountSummary& summary,
                 std::vector<SolutionRecord>& emitted) {
  SumJoin<Key> join(values, s, partitions, threads);
  join.run([&](const Entry<Key>* group, std::size_t size) {
    for (std::size_t a = 0; a < size; ++a) {
      const std::uint64_t wa = ordering_weight(group[a].idx, s);
      for (std::size_t b = 0; b < size; ++b) {
        const std::uint64_t wb = ordering_weight(group[b].idx, s);
        SolutionClass cls = SolutionClass::Trivial;
        if (a != b) cls = shares_element(group[a].idx, group[b].idx, s) ? SolutionClass::Shared : SolutionClass::Disjoint;
        const std::uint64_t n = wa * wb;
        summary.total += n;
        if (cls == SolutionClass::Trivial) summary.trivial += n;
        if (cls == SolutionClass::Shared) summary.shared += n;
        if (cls == SolutionClass::Disjoint) summary.disjoint += n;
        if (!emitting || (cls == SolutionClass::Trivial && !options.emit_trivial)) continue;
        for (const auto& l : orderings(group[a].idx, s)) {
          for (const auto& r : orderings(group[b].idx, s)) {
            SolutionRecord rec;
            rec.cls = cls;
            for (Index i : l) rec.lhs.push_back(points[i]);
            for (Index i : r) rec.rhs.push_back(points[i]);
            emitted.push_back(std::move(rec));
          }
        }
      }
    }
  });
}

}  // namespace

std::uint64_t estimated_table_bytes(int s, std::uint64_t domain_size, bool wide_keys) {
  const std::uint64_t per_entry = wide_keys ? 96 : sizeof(Entry<Int128>);
  return multiset_count(s, domain_size) * per_entry;
}

CountSummary enumerate_domain(const IntPolynomial& p, const Progression& domain, int s, const EnumerateOptions& options,
                              const SolutionSink& sink) {
  check_s(s);
  if (domain.count < 1) throw Error(ErrorKind::InvalidArgument, "enumeration domain is empty");
  if (domain.count > 0xFFFFFFFFULL) throw Error(ErrorKind::MemoryBudgetExceeded, "enumeration domain too large");

  const auto points = domain.points();
  std::vector<BigInt> big(points.size());
  bool narrow = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    big[i] = eval(p, points[i]);
    if (bit_length(big[i]) > 124) narrow = false;
  }

  const std::uint64_t bytes = estimated_table_bytes(s, domain.count, !narrow);
  const std::uint64_t budget = std::max<std::uint64_t>(options.memory_budget, 1);
  const std::uint64_t partitions = (bytes + budget - 1) / budget;
  if (partitions > std::max(1U, options.max_partitions)) {
    const std::uint64_t capacity = budget * std::max(1U, options.max_partitions);
    std::uint64_t fits = 0;
    while (estimated_table_bytes(s, fits + 1, !narrow) <= capacity) ++fits;
    throw Error(ErrorKind::MemoryBudgetExceeded,
                "sum table needs " + std::to_string(bytes) + " bytes, budget " + std::to_string(budget) + " x " +
                    std::to_string(options.max_partitions) + " passes; largest box that fits: B=" + std::to_string(fits));
  }

  CountSummary summary;
  summary.s = s;
  summary.B = static_cast<std::int64_t>(domain.count);
  summary.polynomial = p;

  const unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  const bool emitting = static_cast<bool>(sink);
  std::vector<SolutionRecord> emitted;
  const auto parts = static_cast<unsigned>(std::max<std::uint64_t>(partitions, 1));
  if (narrow) {
    std::vector<Int128> values(big.size());
    for (std::size_t i = 0; i < big.size(); ++i) values[i] = *to_int128(big[i]);
    join_counts(values, points, s, parts, threads, options, emitting, summary, emitted);
  } else {
    join_counts(big, points, s, parts, threads, options, emitting, summary, emitted);
  }

  if (emitting) {
    std::sort(emitted.begin(), emitted.end());
    for (const auto& rec : emitted) sink(rec);
  }
  return summary;
}

CountSummary enumerate(const IntPolynomial& f, int s, std::int64_t B, const EnumerateOptions& options,
                       const SolutionSink& sink) {
  if (B < 1) throw Error(ErrorKind::InvalidArgument, "box bound B must be >= 1");
  return enumerate_domain(f, Progression::box(B), s, options, sink);
}

CountSummary enumerate_on_image(const DepressedForm& df, int s, std::int64_t B, const EnumerateOptions& options,
                                const SolutionSink& sink) {
  auto summary = enumerate_domain(df.g, image_domain(df, B), s, options, sink);
  summary.B = B;
  return summary;
}

std::vector<std::pair<std::int64_t, std::int64_t>> coincidence_pairs(const IntPolynomial& g, const Progression& domain) {
  const auto points = domain.points();
  std::vector<std::pair<BigInt, std::int64_t>> table;
  table.reserve(points.size());
  for (auto y : points) table.emplace_back(eval(g, y), y);
  std::sort(table.begin(), table.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  std::size_t lo = 0;
  while (lo < table.size()) {
    std::size_t hi = lo + 1;
    while (hi < table.size() && table[hi].first == table[lo].first) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < hi; ++j) out.emplace_back(table[i].second, table[j].second);
    }
    lo = hi;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace paucity
