#include "mahonia/errors.hpp"

#include <cstdlib>
#include <optional>
#include <string>

namespace mahonia::detail {

namespace {

std::optional<unsigned long> brute_override() {
    // Read once; immutable afterwards, so concurrent callers are fine.
    static const std::optional<unsigned long> value = []() -> std::optional<unsigned long> {
        const char* raw = std::getenv("MAHONIA_MAX_BRUTE");
        if (raw == nullptr || *raw == '\0') return std::nullopt;
        char* end = nullptr;
        unsigned long v = std::strtoul(raw, &end, 10);
        if (end == raw || *end != '\0') return std::nullopt;
        return v;
    }();
    return value;
}

}  // namespace

void check_enumeration_guard(const char* what, const ExactInt& cost, unsigned long fallback) {
    const unsigned long limit = brute_override().value_or(fallback);
    if (cost > ExactInt(limit)) {
        throw resource_guard_error(std::string(what) + ": would enumerate " + cost.get_str() +
                                   " objects, limit is " + std::to_string(limit) +
                                   " (MAHONIA_MAX_BRUTE overrides)");
    }
}

}  // namespace mahonia::detail
