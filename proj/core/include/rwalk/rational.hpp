#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rwalk {

/// Exact nonnegative rational. The reinforcement increment h is kept as a
/// rational so that walk scores, which are integer combinations of h and 1,
/// compare exactly: a tie is a true tie, never a rounding accident.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    /// Normalized rational num/den; throws std::invalid_argument on den <= 0
    /// or num < 0.
    static Rational of(std::int64_t num, std::int64_t den = 1);

    /// Accepts "9", "2.5" or "7/3".
    static Rational parse(std::string_view text);

    double value() const noexcept {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    /// Canonical text: "9" when integral, "7/3" otherwise.
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace rwalk
