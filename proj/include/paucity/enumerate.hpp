#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "paucity/depress.hpp"
#include "paucity/poly.hpp"

namespace paucity {

enum class SolutionClass { Trivial, Shared, Disjoint };

const char* class_name(SolutionClass c);

/// One ordered solution of p(lhs_1)+...+p(lhs_s) = p(rhs_1)+...+p(rhs_s).
struct SolutionRecord {
  std::vector<std::int64_t> lhs;
  std::vector<std::int64_t> rhs;
  SolutionClass cls = SolutionClass::Trivial;

  auto operator<=>(const SolutionRecord&) const = default;
};

/// Ordered 2s-tuple counts; total = trivial + shared + disjoint.
struct CountSummary {
  std::uint64_t total = 0;
  std::uint64_t trivial = 0;
  std::uint64_t shared = 0;
  std::uint64_t disjoint = 0;
  std::int64_t B = 0;
  int s = 0;
  IntPolynomial polynomial;

  std::uint64_t nontrivial() const { return shared + disjoint; }
  bool same_counts(const CountSummary& o) const {
    return total == o.total && trivial == o.trivial && shared == o.shared && disjoint == o.disjoint;
  }
};

using SolutionSink = std::function<void(const SolutionRecord&)>;

struct EnumerateOptions {
  std::uint64_t memory_budget = 2ULL << 30;
  /// Passes allowed when the sum table must be split to respect the budget.
  unsigned max_partitions = 64;
  unsigned threads = 0;  // 0: hardware concurrency
  bool emit_trivial = false;
};

/// Classify by multiset/set relations of the two sides. Throws Error{LengthMismatch}.
SolutionClass classify(const std::vector<std::int64_t>& lhs, const std::vector<std::int64_t>& rhs);

/// Ordered trivial 2s-tuples in [1,B]^(2s); s in {2,3}. Throws Error{UnsupportedS}.
std::uint64_t trivial_count(int s, std::int64_t B);

/// Count (and optionally stream, nontrivial only unless emit_trivial) all solutions with
/// coordinates in `domain`. Emission is lexicographic on (lhs, rhs).
CountSummary enumerate_domain(const IntPolynomial& p, const Progression& domain, int s,
                              const EnumerateOptions& options = {}, const SolutionSink& sink = {});

/// Solutions of the equation for f over the box [1,B].
CountSummary enumerate(const IntPolynomial& f, int s, std::int64_t B, const EnumerateOptions& options = {},
                       const SolutionSink& sink = {});

/// Same enumeration carried out on g over image_domain(df, B); emitted tuples are y-coordinates.
CountSummary enumerate_on_image(const DepressedForm& df, int s, std::int64_t B,
                                const EnumerateOptions& options = {}, const SolutionSink& sink = {});

/// Unordered pairs a < b of domain points with g(a) = g(b).
std::vector<std::pair<std::int64_t, std::int64_t>> coincidence_pairs(const IntPolynomial& g, const Progression& domain);

/// Bytes the sum table for (s, domain size) needs; used by the memory guard.
std::uint64_t estimated_table_bytes(int s, std::uint64_t domain_size, bool wide_keys);

}  // namespace paucity
