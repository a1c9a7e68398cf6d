#include "qlab/partitions.hpp"

#include <algorithm>
#include <numeric>

namespace qlab::partitions {

namespace {

void check_n(int n, int cap) {
  if (n < 1) throw InvalidParameter("n must be at least 1, got " + std::to_string(n));
  if (n > cap) throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

// Partitions of `remaining` into parts <= max_part, ascending lexicographic.
void ascend(int remaining, int max_part, std::vector<int>& prefix, const PartitionVisitor& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (int k = 1; k <= std::min(remaining, max_part); ++k) {
    prefix.push_back(k);
    ascend(remaining - k, k, prefix, visit);
    prefix.pop_back();
  }
}

// Multisets drawn from values in [lo, hi] with the given step, summing to
// `remaining`. Parts are emitted in decreasing order.
template <typename Visit>
void multisets(int remaining, int lo, int hi, int step, std::vector<int>& prefix, Visit&& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (int v = hi; v >= lo; v -= step) {
    if (v > remaining) continue;
    prefix.push_back(v);
    multisets(remaining - v, lo, v, step, prefix, visit);
    prefix.pop_back();
  }
}

// Two-color partitions of n with blue smallest part s (s itself forced once),
// blue parts >= s, red parts even in [red_lo, red_hi].
template <typename Visit>
void two_color(int n, int s, int red_lo, int red_hi, Visit&& visit) {
  std::vector<int> red;
  std::vector<int> blue;
  auto with_red = [&](const std::vector<int>& reds) {
    int red_sum = std::accumulate(reds.begin(), reds.end(), 0);
    int blue_rest = n - s - red_sum;
    multisets(blue_rest, s, std::max(blue_rest, s), 1, blue, [&](const std::vector<int>& blues) { visit(reds, blues); });
  };
  int budget = n - s;
  if (red_lo > red_hi) {
    with_red(red);
    return;
  }
  for (int r = 0; r <= budget; ++r) {
    // red sums are even, so odd r has no red multiset
    if (r % 2 != 0) continue;
    multisets(r, red_lo, red_hi, 2, red, with_red);
  }
}

TwoColorPartition assemble(int s, const std::vector<int>& reds, const std::vector<int>& blues) {
  TwoColorPartition out;
  for (int v : reds) out.parts.push_back({v, Color::red});
  for (int v : blues) out.parts.push_back({v, Color::blue});
  out.parts.push_back({s, Color::blue});
  std::stable_sort(out.parts.begin(), out.parts.end(), [](const ColoredPart& a, const ColoredPart& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.color == Color::red && b.color == Color::blue;
  });
  return out;
}

// Visits every G-type (odd == false) or G'-type partition of n as
// (smallest part, red parts, extra blue parts).
template <typename Visit>
void for_each_two_color(int n, bool odd, Visit&& visit) {
  for (int m = odd ? 0 : 1;; ++m) {
    int s = odd ? 2 * m + 1 : 2 * m;
    if (s > n) break;
    two_color(n, s, 2 * m + 2, 4 * m, [&](const std::vector<int>& reds, const std::vector<int>& blues) {
      visit(s, reds, blues);
    });
  }
}

bool two_color_valid(const TwoColorPartition& p, bool odd) {
  if (p.parts.empty()) return false;
  int smallest = p.parts.front().value;
  for (const auto& part : p.parts) {
    if (part.value < 1) return false;
    smallest = std::min(smallest, part.value);
  }
  if ((smallest % 2 != 0) != odd) return false;
  int m = odd ? (smallest - 1) / 2 : smallest / 2;
  bool blue_smallest = false;
  for (const auto& part : p.parts) {
    if (part.color == Color::blue) {
      if (part.value == smallest) blue_smallest = true;
    } else if (part.value % 2 != 0 || part.value <= 2 * m || part.value > 4 * m || part.value <= smallest) {
      return false;
    }
  }
  return blue_smallest;
}

}  // namespace

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int TwoColorPartition::total() const {
  int t = 0;
  for (const auto& part : parts) t += part.value;
  return t;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (int v : p.parts) {
    if (!out.empty()) out += "+";
    out += std::to_string(v);
  }
  return out;
}

std::string to_string(const TwoColorPartition& p) {
  std::string out;
  for (const auto& part : p.parts) {
    if (!out.empty()) out += "+";
    out += std::to_string(part.value) + (part.color == Color::red ? "_r" : "_b");
  }
  return out;
}

void for_each_partition(int n, const PartitionVisitor& visit, int cap) {
  check_n(n, cap);
  std::vector<int> prefix;
  prefix.reserve(n);
  ascend(n, n, prefix, visit);
}

std::vector<Partition> enumerate_partitions(int n, int cap) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const int> parts) { out.push_back({{parts.begin(), parts.end()}}); }, cap);
  return out;
}

int rank(std::span<const int> parts) {
  if (parts.empty()) throw InvalidPartition("rank of an empty partition");
  return *std::max_element(parts.begin(), parts.end()) - static_cast<int>(parts.size());
}

int rank(const Partition& p) { return rank(std::span<const int>(p.parts)); }

RankStats rank_stats(int n, int cap) {
  RankStats s;
  for_each_partition(
      n,
      [&](std::span<const int> parts) {
        int r = rank(parts);
        ++s.p;
        if (r % 2 == 0) {
          ++s.even;
        } else {
          ++s.odd;
          if (r > 0) ++s.odd_positive;
        }
      },
      cap);
  return s;
}

Count spt(int n, int cap) {
  Count total = 0;
  for_each_partition(
      n,
      [&](std::span<const int> parts) {
        int smallest = parts.back();
        total += static_cast<Count>(std::count(parts.begin(), parts.end(), smallest));
      },
      cap);
  return total;
}

Count count_G(int n, int cap) {
  check_n(n, cap);
  Count c = 0;
  for_each_two_color(n, false, [&](int, const auto&, const auto&) { ++c; });
  return c;
}

std::vector<TwoColorPartition> list_G(int n, int cap) {
  check_n(n, cap);
  std::vector<TwoColorPartition> out;
  for_each_two_color(n, false, [&](int s, const auto& reds, const auto& blues) { out.push_back(assemble(s, reds, blues)); });
  return out;
}

Count count_Gprime(int n, int cap) {
  check_n(n, cap);
  Count c = 0;
  for_each_two_color(n, true, [&](int, const auto&, const auto&) { ++c; });
  return c;
}

std::vector<TwoColorPartition> list_Gprime(int n, int cap) {
  check_n(n, cap);
  std::vector<TwoColorPartition> out;
  for_each_two_color(n, true, [&](int s, const auto& reds, const auto& blues) { out.push_back(assemble(s, reds, blues)); });
  return out;
}

Count sptG(int n, int cap) {
  check_n(n, cap);
  Count total = 0;
  for_each_two_color(n, false, [&](int s, const auto&, const std::vector<int>& blues) {
    total += 1 + static_cast<Count>(std::count(blues.begin(), blues.end(), s));
  });
  return total;
}

Count count_omega_interpretation(int n, int cap) {
  Count c = 0;
  for_each_partition(
      n,
      [&](std::span<const int> parts) {
        int smallest = parts.back();
        bool ok = std::all_of(parts.begin(), parts.end(), [&](int v) { return v % 2 == 0 || v < 2 * smallest; });
        if (ok) ++c;
      },
      cap);
  return c;
}

bool is_G_partition(const TwoColorPartition& p) { return two_color_valid(p, false); }
bool is_Gprime_partition(const TwoColorPartition& p) { return two_color_valid(p, true); }

StatRow stat_row(int n, int cap) {
  StatRow row;
  row.n = n;
  RankStats r = rank_stats(n, cap);
  row.p = r.p;
  row.Ne = r.even;
  row.No = r.odd;
  row.No_plus = r.odd_positive;
  row.G = count_G(n, cap);
  row.Gprime = count_Gprime(n, cap);
  row.spt = spt(n, cap);
  row.sptG = sptG(n, cap);
  row.omega = count_omega_interpretation(n, cap);
  return row;
}

std::vector<StatRow> stat_table(int max_n, int cap) {
  if (max_n > cap) throw CapExceeded("max_n = " + std::to_string(max_n) + " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<StatRow> rows;
  for (int n = 1; n <= max_n; ++n) rows.push_back(stat_row(n, cap));
  return rows;
}

}  // namespace qlab::partitions
