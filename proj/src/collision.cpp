#include "taxicab/collision.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

namespace taxicab {

namespace {

void validate(const SearchConfig& c) {
  if (c.exponent < 2) throw std::invalid_argument("search: exponent >= 2 required");
  if (c.max_first_index < c.min_index || c.max_second_index < c.min_index)
    throw std::invalid_argument("search: empty index range");
}

// Power table S_i^e for i in [min_index, up_to], exact.
std::vector<BigInt> power_table(SequenceKind kind, unsigned e, std::uint64_t min_index,
                                std::uint64_t up_to) {
  std::vector<BigInt> powers;
  powers.reserve(up_to - min_index + 1);
  SequenceRange range(kind, min_index);
  for (std::uint64_t i = min_index; i <= up_to; ++i) powers.push_back(pow_int(range.next(), e));
  return powers;
}

}  // namespace

std::vector<CollisionRecord> search(const SearchConfig& config) {
  validate(config);
  const std::uint64_t lo = config.min_index;
  const std::uint64_t hi = std::max(config.max_first_index, config.max_second_index);
  const std::vector<BigInt> powers = power_table(config.kind, config.exponent, lo, hi);
  auto power_of = [&](std::uint64_t i) -> const BigInt& { return powers[i - lo]; };

  // All unordered pair sums. Sharded by the hi index when workers > 1;
  // the merge below is single-threaded and order-independent.
  struct Entry {
    BigInt sum;
    IndexPair pair;
  };
  const std::uint64_t span = hi - lo + 1;
  std::vector<std::vector<Entry>> shards;
  unsigned workers = std::max(1u, config.workers);
  if (workers == 1 || span < 2 * workers) {
    shards.resize(1);
    auto& out = shards[0];
    for (std::uint64_t a = lo; a <= hi; ++a)
      for (std::uint64_t b = lo; b <= a; ++b)
        out.push_back({power_of(a) + power_of(b), IndexPair{a, b}});
  } else {
    shards.resize(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        auto& out = shards[w];
        for (std::uint64_t a = lo + w; a <= hi; a += workers)
          for (std::uint64_t b = lo; b <= a; ++b)
            out.push_back({power_of(a) + power_of(b), IndexPair{a, b}});
      });
    }
    for (auto& t : pool) t.join();
  }

  std::map<BigInt, std::vector<IndexPair>> groups;
  for (auto& shard : shards)
    for (auto& e : shard) groups[e.sum].push_back(e.pair);

  std::vector<CollisionRecord> records;
  for (auto& [sum, pairs] : groups) {
    if (pairs.size() < 2) continue;
    std::sort(pairs.begin(), pairs.end());
    // A group confined to a single larger index never exhibits a second
    // decomposition shape: equality there just renames the smaller term
    // through a value alias (F_1 = F_2). Such groups are not collisions.
    bool two_shapes = false;
    for (std::size_t i = 1; i < pairs.size() && !two_shapes; ++i)
      two_shapes = pairs[i].hi != pairs[0].hi;
    if (!two_shapes) continue;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        // pairs[i] < pairs[j] lexicographically, so pairs[i].hi <= pairs[j].hi.
        if (pairs[i].hi > config.max_first_index) continue;
        if (pairs[j].hi > config.max_second_index) continue;
        CollisionRecord rec{sum, pairs[i], pairs[j], false};
        rec.trivial = classify_trivial(rec, config.kind);
        records.push_back(std::move(rec));
      }
    }
  }
  // groups is ordered by value and pairs are sorted, so records are already
  // in canonical (value, pair_a, pair_b) order.
  return records;
}

bool verify_record(const CollisionRecord& rec, SequenceKind kind, unsigned exponent) {
  if (rec.pair_a == rec.pair_b) return false;
  auto side = [&](const IndexPair& p) -> BigInt {
    return pow_int(seq_value(kind, p.hi), exponent) + pow_int(seq_value(kind, p.lo), exponent);
  };
  BigInt a = side(rec.pair_a);
  return a == side(rec.pair_b) && a == rec.value;
}

bool classify_trivial(const CollisionRecord& rec, SequenceKind kind) {
  auto values = [&](const IndexPair& p) {
    BigInt x = seq_value(kind, p.hi);
    BigInt y = seq_value(kind, p.lo);
    if (x < y) std::swap(x, y);
    return std::make_pair(x, y);
  };
  return values(rec.pair_a) == values(rec.pair_b);
}

}  // namespace taxicab
