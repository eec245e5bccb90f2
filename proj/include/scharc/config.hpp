#pragma once

#include <cstdint>

namespace scharc {

// Process-wide limit on the number of points any enumerating operation may
// visit (group elements, orbit points, partitions).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

// Throws Errc::CapExceeded when `count` exceeds the current cap.
void require_within_cap(std::uint64_t count, const char* what);

}  // namespace scharc
