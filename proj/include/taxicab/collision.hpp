#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "taxicab/bigint.hpp"
#include "taxicab/recurrence.hpp"

namespace taxicab {

// Bounds for the two-way power-sum search. The first box bounds the pair
// written on the left of S_k^e + S_l^e = S_m^e + S_n^e, the second box
// the right; a record's lexicographically smaller pair is matched against
// the first box.
struct SearchConfig {
  SequenceKind kind = SequenceKind::Fibonacci;
  unsigned exponent = 3;                // e >= 2
  std::uint64_t max_first_index = 0;    // bound for pair_a's larger index
  std::uint64_t max_second_index = 0;   // bound for pair_b's larger index
  std::uint64_t min_index = 1;          // 0 admitted only on request
  unsigned workers = 1;
};

// Unordered index pair, stored with hi >= lo.
struct IndexPair {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// Two distinct index pairs with exactly equal power sums. `trivial` marks
// records whose term-value multisets coincide (index aliasing such as
// F_1 = F_2), as opposed to genuinely different decompositions.
struct CollisionRecord {
  BigInt value;
  IndexPair pair_a;  // lexicographically smaller pair
  IndexPair pair_b;
  bool trivial = false;
  friend bool operator==(const CollisionRecord&, const CollisionRecord&) = default;
};

// Enumerates all unordered pairs within bounds, groups exactly equal sums,
// and emits each cross-pair collision once, sorted by (value, pair_a,
// pair_b). A sum-group must contain two pairs with distinct larger
// indices to count: groups that differ only through a value alias in the
// smaller slot (F_1 = F_2) carry a single decomposition shape and are
// skipped. Exact integer arithmetic throughout.
std::vector<CollisionRecord> search(const SearchConfig& config);

// Independent recheck: recomputes both sums from scratch.
bool verify_record(const CollisionRecord& rec, SequenceKind kind, unsigned exponent);

// True iff both sides use the same multiset of term values.
bool classify_trivial(const CollisionRecord& rec, SequenceKind kind);

}  // namespace taxicab
