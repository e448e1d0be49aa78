// Finite presentations of geodesic laminations under sigma_d, with the
// sibling-invariance and laminational-equivalence checkers.
#pragma once

#include "cubicatlas/chord.hpp"

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cubicatlas {

// Finite set of pairwise non-crossing leaves plus the map degree.
struct Lamination {
    std::set<Chord> leaves;
    int degree = 3;

    bool contains(const Chord& c) const { return leaves.count(c) > 0; }

    // First crossing pair if the leaf set is not a valid lamination.
    std::optional<std::pair<Chord, Chord>> find_crossing() const;
};

// One leaf per line "p/q r/s", '#' comments, header line "d=3".
Lamination parse_lamination(std::istream& in);
Lamination parse_lamination_file(const std::string& path);
std::string format_lamination(const Lamination& lam);

// --- sibling invariance --------------------------------------------------
//
// The three conditions are checked against the finite leaf set:
//  (1) the image of every leaf is in the set (degenerate images count as
//      present, since laminations implicitly carry all singletons);
//  (2) every leaf has an admissible preimage chord: one of the d*d
//      endpoint-preimage combinations either is in the set or at least
//      does not cross any leaf of the set (on finite data the preimage
//      need not have been listed, only be consistent with it);
//  (3) every leaf with non-degenerate image belongs to a family of d
//      pairwise disjoint leaves of the set with the same image.

struct SiblingViolation {
    Chord leaf;
    int condition = 0;  // 1, 2 or 3
    std::string detail;
};

struct SiblingReport {
    bool pass = true;
    std::vector<SiblingViolation> violations;
    std::string to_json() const;
};

SiblingReport check_sibling_invariant(const Lamination& lam);

// --- laminational equivalence axioms --------------------------------------
//
// Checks E2 (convex hulls of distinct classes pairwise unlinked), E3
// (finiteness, trivially true for the input form), D1 (the sigma_d-image
// of every class is a listed class) and D2 (sigma_d respects the cyclic
// order on each class in the consecutive-triple sense). E1 concerns the
// closure of the graph and cannot be tested on finite data; it is
// reported as skipped, never as passed.

struct AxiomViolation {
    std::string axiom;  // "E2", "D1", "D2"
    std::size_t class_index = 0;
    std::size_t other_index = 0;  // used by E2
    std::string detail;
};

struct AxiomReport {
    bool pass = true;
    std::vector<AxiomViolation> violations;
    std::vector<std::string> skipped;  // always contains "E1"
    std::string to_json() const;
};

using AngleClass = std::vector<Angle>;

// Throws std::invalid_argument if the classes are not pairwise disjoint
// as point sets (malformed input, not a failed axiom).
AxiomReport check_equivalence_axioms(const std::vector<AngleClass>& classes,
                                     const DegreeMap& d);

// Two finite circle sets are unlinked iff one lies inside a single arc
// between consecutive points of the other (convex hulls disjoint).
bool classes_unlinked(const AngleClass& a, const AngleClass& b);

// Edges of the convex hull of a finite circle set (consecutive vertices
// in cyclic order; a pair gives one chord, a singleton none).
std::vector<Chord> hull_edges(const AngleClass& cls);

}  // namespace cubicatlas
