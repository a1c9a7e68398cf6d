#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qlab/errors.hpp"

// Brute-force enumeration of ordinary and two-color partitions. Nothing here
// depends on the series engine; these counts are the oracle the series are
// checked against.
namespace qlab::partitions {

inline constexpr int default_cap = 60;

using Count = std::uint64_t;

// Parts in weakly decreasing order.
struct Partition {
  std::vector<int> parts;

  int total() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

enum class Color { red, blue };

struct ColoredPart {
  int value;
  Color color;

  friend bool operator==(const ColoredPart&, const ColoredPart&) = default;
};

// Parts sorted by value, largest first; a red part precedes a blue part of the
// same value.
struct TwoColorPartition {
  std::vector<ColoredPart> parts;

  int total() const;
  friend bool operator==(const TwoColorPartition&, const TwoColorPartition&) = default;
};

// "4+2+2"
std::string to_string(const Partition& p);
// "4_r+2_b+2_b"
std::string to_string(const TwoColorPartition& p);

using PartitionVisitor = std::function<void(std::span<const int> parts)>;

// Calls visit once per partition of n, in ascending lexicographic order of the
// weakly decreasing part sequences. Throws InvalidParameter for n < 1 and
// CapExceeded for n > cap.
void for_each_partition(int n, const PartitionVisitor& visit, int cap = default_cap);

std::vector<Partition> enumerate_partitions(int n, int cap = default_cap);

// Largest part minus number of parts. Throws InvalidPartition if empty.
int rank(const Partition& p);
int rank(std::span<const int> parts);

struct RankStats {
  Count p = 0;
  Count even = 0;
  Count odd = 0;
  Count odd_positive = 0;
};

RankStats rank_stats(int n, int cap = default_cap);

// Total number of smallest parts over all partitions of n.
Count spt(int n, int cap = default_cap);

// Two-color partitions whose smallest part 2m is even and blue, with every red
// part even and in (2m, 4m].
Count count_G(int n, int cap = default_cap);
std::vector<TwoColorPartition> list_G(int n, int cap = default_cap);

// Same, with the smallest part 2m+1 odd and blue.
Count count_Gprime(int n, int cap = default_cap);
std::vector<TwoColorPartition> list_Gprime(int n, int cap = default_cap);

// Total multiplicity of the smallest part over all G-type partitions of n.
Count sptG(int n, int cap = default_cap);

// Partitions of n in which every odd part is less than twice the smallest part.
Count count_omega_interpretation(int n, int cap = default_cap);

bool is_G_partition(const TwoColorPartition& p);
bool is_Gprime_partition(const TwoColorPartition& p);

struct StatRow {
  int n = 0;
  Count p = 0;
  Count Ne = 0;
  Count No = 0;
  Count No_plus = 0;
  Count G = 0;
  Count Gprime = 0;
  Count spt = 0;
  Count sptG = 0;
  Count omega = 0;
};

StatRow stat_row(int n, int cap = default_cap);

// Rows for n = 1..max_n. Throws CapExceeded if max_n > cap.
std::vector<StatRow> stat_table(int max_n, int cap = default_cap);

}  // namespace qlab::partitions
