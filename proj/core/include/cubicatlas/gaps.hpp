// Complementary faces of a finite lamination, gap degree, and majors of
// quadratic invariant gaps.
#pragma once

#include "cubicatlas/lamination.hpp"

namespace cubicatlas {

// One complementary face of the disk cut along the leaves. Vertices are
// listed in strictly increasing circular order. edges[i] joins vertices
// that are circularly consecutive in the gap's own vertex set, and
// arc_lengths[i] is the exact length of H_edge (the circle arc spanned by
// the edge on the side away from the gap).
struct Gap {
    std::vector<Angle> vertices;
    std::vector<Chord> edges;
    std::vector<Angle> arc_lengths;   // H_l length per edge, exact
    bool whole_disk = false;          // no vertices at all

    bool has_edge(const Chord& c) const;
};

// Faces of the disk subdivision induced by the (non-crossing) leaves.
// Degenerate leaves contribute boundary vertices only. Throws
// std::invalid_argument when two leaves cross.
std::vector<Gap> gaps(const Lamination& lam);

// Max cardinality of a pairwise disjoint family of critical chords with
// endpoints in the gap's vertex set, interior to the gap, plus one.
// Whole-disk gap: d-1 such chords always fit, so the degree is d.
// Triangle with all edges critical: 3, per the stated exception.
int gap_degree(const Gap& g, const DegreeMap& d);

enum class MajorType { RegularCritical, Periodic };

struct Major {
    Chord edge;
    Angle h_length;
    MajorType type = MajorType::RegularCritical;
    unsigned long period = 0;  // set for periodic majors
};

// Longest edge of a quadratic sigma_3 gap, by H-arc length. Throws
// std::invalid_argument on a tie (the major of an invariant quadratic gap
// is unique, so ties mean bad input), when the maximum is < 1/3, or when
// the edge is neither critical nor periodic.
Major quadratic_gap_major(const Gap& g);

}  // namespace cubicatlas
