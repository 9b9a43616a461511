#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

#include "cohen/errors.hpp"

namespace cohen::config {

// Default cap on the number of entries any single table may hold.
inline constexpr std::uint64_t kDefaultMemoryCapEntries = std::uint64_t{1} << 27;

// Default cap on the number of terms the direct exponential sum may touch.
// The direct method is O(q^beta) and exists for cross-validation; callers
// that need a larger sweep pass an explicit cap.
inline constexpr std::uint64_t kDefaultDirectTermCap = 1'000'000;

// Table memory cap in entries. COHEN_MOMENTS_MEM_CAP overrides the default.
inline std::uint64_t memory_cap_entries() {
    static const std::uint64_t cap = [] {
        const char* env = std::getenv("COHEN_MOMENTS_MEM_CAP");
        if (env == nullptr || *env == '\0') return kDefaultMemoryCapEntries;
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) {
            throw DomainError(std::string("COHEN_MOMENTS_MEM_CAP is not a positive integer: ") + env);
        }
        return static_cast<std::uint64_t>(v);
    }();
    return cap;
}

inline void check_table_size(std::uint64_t entries, const char* what) {
    if (entries > memory_cap_entries()) {
        throw ResourceError(std::string(what) + ": " + std::to_string(entries) +
                            " entries exceeds memory cap of " +
                            std::to_string(memory_cap_entries()));
    }
}

}  // namespace cohen::config
