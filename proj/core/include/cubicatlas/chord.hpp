// Chords of the unit disk with exact rational endpoints.
#pragma once

#include "cubicatlas/angle.hpp"

#include <compare>

namespace cubicatlas {

// Unordered pair of circle points; stored with a <= b so equality and
// ordering are well-defined. Degenerate iff a == b.
class Chord {
public:
    Chord() = default;
    Chord(Angle x, Angle y) {
        if (y < x) std::swap(x, y);
        a_ = std::move(x);
        b_ = std::move(y);
    }

    const Angle& a() const { return a_; }
    const Angle& b() const { return b_; }

    bool degenerate() const { return a_ == b_; }
    bool has_endpoint(const Angle& x) const { return a_ == x || b_ == x; }
    bool shares_endpoint(const Chord& o) const {
        return has_endpoint(o.a_) || has_endpoint(o.b_);
    }

    bool operator==(const Chord& o) const = default;
    auto operator<=>(const Chord& o) const = default;

    std::string str() const { return a_.str() + " " + b_.str(); }

private:
    Angle a_;
    Angle b_;
};

// Image chord under sigma_d (possibly degenerate).
Chord sigma(const Chord& c, const DegreeMap& d);

// True iff the open geodesics meet in the open disk, i.e. the endpoint
// pairs strictly interleave on the circle. Chords sharing an endpoint do
// not cross; degenerate chords never cross anything.
bool chords_cross(const Chord& c1, const Chord& c2);

// Disjoint as closed segments: no crossing and no shared endpoint.
bool chords_disjoint(const Chord& c1, const Chord& c2);

// Non-degenerate with both endpoints mapping to the same point under sigma_d.
bool is_critical(const Chord& c, const DegreeMap& d);

}  // namespace cubicatlas
