#include "scharc/config.hpp"

#include <atomic>
#include <string>

#include "scharc/error.hpp"

namespace scharc {

namespace {
std::atomic<std::uint64_t> g_cap{kDefaultEnumerationCap};
}

std::uint64_t enumeration_cap() { return g_cap.load(); }

void set_enumeration_cap(std::uint64_t cap) { g_cap.store(cap); }

void require_within_cap(std::uint64_t count, const char* what) {
  if (count > g_cap.load())
    throw Error(Errc::CapExceeded, std::string(what) + " needs " + std::to_string(count) +
                                       " points, cap is " + std::to_string(g_cap.load()));
}

}  // namespace scharc
