#include "rwalk/policy.hpp"

#include <charconv>
#include <stdexcept>

namespace rwalk {

namespace {

int parse_d(std::string_view text) {
    int d = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), d);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("invalid choice count: '" + std::string(text) + "'");
    }
    return d;
}

}  // namespace

Policy Policy::parse(std::string_view token) {
    std::string_view head = token;
    std::string_view rest;
    if (const auto colon = token.find(':'); colon != std::string_view::npos) {
        head = token.substr(0, colon);
        rest = token.substr(colon + 1);
    }

    Policy p;
    if (head == "srw") {
        if (!rest.empty()) throw std::invalid_argument("srw takes no parameters");
        p = srw();
    } else if (head == "rwc") {
        if (rest.empty()) throw std::invalid_argument("rwc needs a choice count, e.g. rwc:2");
        p = rwc(parse_d(rest));
    } else if (head == "erwc") {
        const auto colon = rest.find(':');
        if (rest.empty() || colon == std::string_view::npos) {
            throw std::invalid_argument("erwc needs d and h, e.g. erwc:2:9");
        }
        p = erwc(parse_d(rest.substr(0, colon)), Rational::parse(rest.substr(colon + 1)));
    } else {
        throw std::invalid_argument("unknown policy '" + std::string(token) +
                                    "' (expected srw, rwc:d or erwc:d:h)");
    }
    p.validate();
    return p;
}

void Policy::validate() const {
    if (d < 1) throw std::invalid_argument("choice count d must be >= 1");
    if (kind == PolicyKind::Erwc && h.num <= h.den) {
        throw std::invalid_argument("reinforcement increment h must be > 1");
    }
}

std::string Policy::name() const {
    switch (kind) {
        case PolicyKind::Srw:
            return "srw";
        case PolicyKind::Rwc:
            return "rwc:" + std::to_string(d);
        case PolicyKind::Erwc:
            return "erwc:" + std::to_string(d) + ":" + h.str();
    }
    return {};
}

}  // namespace rwalk
