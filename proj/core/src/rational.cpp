#include "rwalk/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace rwalk {

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string("invalid ") + what + ": '" +
                                    std::string(text) + "'");
    }
    return value;
}

}  // namespace

Rational Rational::of(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
    if (num < 0) throw std::invalid_argument("rational must be nonnegative");
    const std::int64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        return of(parse_int(text.substr(0, slash), "numerator"),
                  parse_int(text.substr(slash + 1), "denominator"));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 9) {
            throw std::invalid_argument("invalid decimal: '" + std::string(text) + "'");
        }
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::int64_t w = whole.empty() ? 0 : parse_int(whole, "integer part");
        return of(w * den + parse_int(frac, "fractional part"), den);
    }
    return of(parse_int(text, "integer"));
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace rwalk
