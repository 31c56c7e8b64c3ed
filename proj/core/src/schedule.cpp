#include "mlae/schedule.hpp"

#include <stdexcept>

namespace mlae {

std::string_view to_string(ScheduleKind kind) {
  switch (kind) {
    case ScheduleKind::kClassical: return "classical";
    case ScheduleKind::kLinear: return "lis";
    case ScheduleKind::kExponential: return "eis";
    case ScheduleKind::kCustom: return "custom";
  }
  return "custom";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
  if (name == "classical") return ScheduleKind::kClassical;
  if (name == "lis") return ScheduleKind::kLinear;
  if (name == "eis") return ScheduleKind::kExponential;
  throw std::invalid_argument("unknown schedule kind '" + std::string(name) + "'");
}

Schedule::Schedule(std::vector<ScheduleEntry> entries, ScheduleKind kind)
    : entries_(std::move(entries)), kind_(kind) {
  if (entries_.empty()) throw std::invalid_argument("schedule must have at least one entry");
  for (const auto& e : entries_) {
    if (e.shots == 0) throw std::invalid_argument("schedule entries need at least one shot");
    if (e.amplifications > (std::uint64_t{1} << 40)) {
      throw std::invalid_argument("amplification count too large");
    }
    queries_ += e.shots * (2 * e.amplifications + 1);
  }
}

std::uint64_t Schedule::total_shots() const noexcept {
  std::uint64_t n = 0;
  for (const auto& e : entries_) n += e.shots;
  return n;
}

Schedule make_schedule(ScheduleKind kind, std::uint32_t max_index, std::uint64_t shots) {
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (kind == ScheduleKind::kCustom) {
    throw std::invalid_argument("custom schedules are built from explicit entries");
  }
  if (kind == ScheduleKind::kExponential && max_index > 40) {
    throw std::invalid_argument("EIS depth above 40 overflows the query counter");
  }
  std::vector<ScheduleEntry> entries;
  entries.reserve(max_index + 1);
  for (std::uint32_t k = 0; k <= max_index; ++k) {
    std::uint64_t m = 0;
    switch (kind) {
      case ScheduleKind::kClassical: m = 0; break;
      case ScheduleKind::kLinear: m = k; break;
      case ScheduleKind::kExponential: m = k == 0 ? 0 : std::uint64_t{1} << (k - 1); break;
      case ScheduleKind::kCustom: break;
    }
    entries.push_back({m, shots});
  }
  return Schedule(std::move(entries), kind);
}

}  // namespace mlae
