#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace faultrank {

namespace detail {

template <typename Tag>
struct StrongId {
    std::uint32_t value = 0;

    constexpr StrongId() = default;
    constexpr explicit StrongId(std::uint32_t v) : value(v) {}

    friend constexpr auto operator<=>(StrongId, StrongId) = default;
};

inline std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

/// Parses a positive integer, optionally preceded by a single letter prefix
/// (`prefix`, case-insensitive) such as "F12" or "T3".
inline std::optional<std::uint32_t> parse_positive(std::string_view s, char prefix = '\0') {
    s = trim(s);
    if (prefix != '\0' && !s.empty() && (s.front() == prefix || s.front() == prefix + ('a' - 'A'))) {
        s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 9) return std::nullopt;
    std::uint32_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        v = v * 10 + static_cast<std::uint32_t>(c - '0');
    }
    if (v == 0) return std::nullopt;
    return v;
}

} // namespace detail

struct FaultTag {};
struct TestTag {};

/// Positive integer label of a fault (node of the dependency graph).
using FaultId = detail::StrongId<FaultTag>;
/// Positive integer label of a regression test case.
using TestId = detail::StrongId<TestTag>;

inline std::ostream& operator<<(std::ostream& os, FaultId f) { return os << 'F' << f.value; }
inline std::ostream& operator<<(std::ostream& os, TestId t) { return os << 'T' << t.value; }

inline std::string to_string(FaultId f) { return "F" + std::to_string(f.value); }
inline std::string to_string(TestId t) { return "T" + std::to_string(t.value); }

} // namespace faultrank

template <typename Tag>
struct std::hash<faultrank::detail::StrongId<Tag>> {
    std::size_t operator()(faultrank::detail::StrongId<Tag> id) const noexcept {
        return std::hash<std::uint32_t>{}(id.value);
    }
};
