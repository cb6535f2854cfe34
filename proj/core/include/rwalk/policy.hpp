#pragma once

#include <string>
#include <string_view>

#include "rwalk/rational.hpp"

namespace rwalk {

enum class PolicyKind { Srw, Rwc, Erwc };

/// Step rule selector. SRW moves uniformly; RWC(d) samples d neighbor
/// candidates and moves to the one minimizing (visits+1)/degree; ERWC(d,h)
/// prefers unvisited candidates and minimizes metric/degree, reinforcing the
/// metric by +h at the chosen node and +1 at the departed node's other
/// neighbors.
struct Policy {
    PolicyKind kind = PolicyKind::Srw;
    int d = 1;                     // candidate draws (RWC, ERWC)
    Rational h = Rational{2, 1};   // reinforcement increment (ERWC), > 1

    static Policy srw() { return {}; }
    static Policy rwc(int d) { return {PolicyKind::Rwc, d, Rational{2, 1}}; }
    static Policy erwc(int d, Rational h) { return {PolicyKind::Erwc, d, h}; }

    /// Parses the colon token form: "srw", "rwc:2", "erwc:2:9" (h may be
    /// "9", "4.5" or "9/2"). Throws std::invalid_argument.
    static Policy parse(std::string_view token);

    /// Throws std::invalid_argument unless d >= 1 and, for ERWC, h > 1.
    void validate() const;

    /// Canonical token form, inverse of parse().
    std::string name() const;
};

}  // namespace rwalk
