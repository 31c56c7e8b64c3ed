#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mlae {

enum class ScheduleKind { kClassical, kLinear, kExponential, kCustom };

/// Lower-case name used on the command line and in CSV output ("classical", "lis", "eis", "custom").
std::string_view to_string(ScheduleKind kind);
/// Inverse of to_string for the generated kinds. Throws std::invalid_argument on unknown names.
ScheduleKind parse_schedule_kind(std::string_view name);

struct ScheduleEntry {
  std::uint64_t amplifications;  // m_k
  std::uint64_t shots;           // N_k

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

/// Ordered amplification depths and shot counts for one estimation run.
class Schedule {
 public:
  /// Custom schedule. Entries must be non-empty with positive shot counts.
  explicit Schedule(std::vector<ScheduleEntry> entries, ScheduleKind kind = ScheduleKind::kCustom);

  const std::vector<ScheduleEntry>& entries() const noexcept { return entries_; }
  ScheduleKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const ScheduleEntry& operator[](std::size_t k) const { return entries_[k]; }

  /// Total oracle calls, sum of N_k (2 m_k + 1).
  std::uint64_t query_count() const noexcept { return queries_; }
  std::uint64_t total_shots() const noexcept;

 private:
  std::vector<ScheduleEntry> entries_;
  ScheduleKind kind_;
  std::uint64_t queries_ = 0;
};

/// M + 1 entries with N_k = shots and m_k given by the kind:
/// classical m_k = 0, LIS m_k = k, EIS m_0 = 0 and m_k = 2^(k-1).
Schedule make_schedule(ScheduleKind kind, std::uint32_t max_index, std::uint64_t shots);

}  // namespace mlae
