#include "cubicatlas/gaps.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cubicatlas {

bool Gap::has_edge(const Chord& c) const {
    return std::find(edges.begin(), edges.end(), c) != edges.end();
}

namespace {

struct DirectedEdge {
    Angle from;
    Angle to;
    bool is_arc = false;
};

}  // namespace

// Face tracing of the disk subdivision. Arc edges run counterclockwise
// only, so every directed edge is traversed by exactly one interior face
// (the disk stays on the left). At a vertex the outgoing departures are
// cyclically ordered by the position of the far endpoint relative to the
// vertex: the ccw arc first (key 0), then chords by (w - v) mod 1.
// Arriving along an edge whose reversal has key K, the walk continues
// along the outgoing edge with the largest key strictly below K; arc
// arrivals (only possible from the predecessor vertex) use K = 1.
std::vector<Gap> gaps(const Lamination& lam) {
    if (auto crossing = lam.find_crossing()) {
        throw std::invalid_argument("gaps: leaves cross: " + crossing->first.str() + " / " +
                                    crossing->second.str());
    }

    std::vector<Angle> verts;
    for (const Chord& c : lam.leaves) {
        verts.push_back(c.a());
        verts.push_back(c.b());
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    if (verts.empty()) {
        Gap whole;
        whole.whole_disk = true;
        return {whole};
    }

    std::vector<DirectedEdge> edges;
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({verts[i], verts[(i + 1) % n], true});
    }
    for (const Chord& c : lam.leaves) {
        if (c.degenerate()) continue;
        edges.push_back({c.a(), c.b(), false});
        edges.push_back({c.b(), c.a(), false});
    }

    // Outgoing edges per vertex, sorted by departure key. The arc keeps
    // key 0; a chord to w gets key (w - from) mod 1, which is in (0,1).
    std::map<Angle, std::vector<std::pair<Angle, std::size_t>>> outgoing;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        Angle key = edges[e].is_arc ? Angle() : (edges[e].to - edges[e].from);
        outgoing[edges[e].from].emplace_back(key, e);
    }
    for (auto& [v, list] : outgoing) {
        std::sort(list.begin(), list.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
    }

    auto next_edge = [&](std::size_t e) -> std::size_t {
        const DirectedEdge& in = edges[e];
        const auto& list = outgoing.at(in.to);
        if (in.is_arc) {
            // Reversal key would be a full turn: pick the largest key.
            return list.back().second;
        }
        Angle rev_key = in.from - in.to;
        std::size_t best = list.front().second;  // arc, key 0, always below
        for (const auto& [key, idx] : list) {
            if (key < rev_key) best = idx;
            else break;
        }
        return best;
    };

    std::vector<bool> visited(edges.size(), false);
    std::vector<Gap> result;
    for (std::size_t start = 0; start < edges.size(); ++start) {
        if (visited[start]) continue;
        Gap gap;
        std::size_t e = start;
        do {
            visited[e] = true;
            gap.vertices.push_back(edges[e].from);
            if (!edges[e].is_arc) {
                gap.edges.emplace_back(edges[e].from, edges[e].to);
                gap.arc_lengths.push_back(edges[e].to - edges[e].from);
            }
            e = next_edge(e);
        } while (e != start);
        std::sort(gap.vertices.begin(), gap.vertices.end());
        gap.vertices.erase(std::unique(gap.vertices.begin(), gap.vertices.end()), gap.vertices.end());
        result.push_back(std::move(gap));
    }
    return result;
}

namespace {

int max_disjoint_family(const std::vector<Chord>& candidates) {
    int best = 0;
    std::vector<const Chord*> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (std::size_t k = from; k < candidates.size(); ++k) {
            bool ok = true;
            for (const Chord* c : chosen) {
                if (!chords_disjoint(*c, candidates[k])) { ok = false; break; }
            }
            if (!ok) continue;
            chosen.push_back(&candidates[k]);
            extend(k + 1);
            chosen.pop_back();
        }
    };
    extend(0);
    return best;
}

}  // namespace

int gap_degree(const Gap& g, const DegreeMap& d) {
    if (g.whole_disk) {
        // d-1 disjoint critical chords always fit in the full disk, and d
        // never do (their spanned arcs would cover the whole circle).
        return d.d;
    }

    if (g.vertices.size() == 3 && g.edges.size() == 3) {
        bool all_critical = true;
        for (const Chord& e : g.edges) {
            if (!is_critical(e, d)) { all_critical = false; break; }
        }
        if (all_critical) return 3;
    }

    std::vector<Chord> candidates;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            Chord c(g.vertices[i], g.vertices[j]);
            if (!is_critical(c, d)) continue;
            if (g.has_edge(c)) continue;  // boundary chords do not count
            candidates.push_back(std::move(c));
        }
    }
    return max_disjoint_family(candidates) + 1;
}

Major quadratic_gap_major(const Gap& g) {
    if (g.edges.empty()) throw std::invalid_argument("quadratic_gap_major: gap has no edges");
    if (g.edges.size() != g.arc_lengths.size()) {
        throw std::invalid_argument("quadratic_gap_major: arc lengths not aligned with edges");
    }

    std::size_t best = 0;
    bool tie = false;
    for (std::size_t i = 1; i < g.edges.size(); ++i) {
        if (g.arc_lengths[i] == g.arc_lengths[best]) {
            tie = true;
        } else if (g.arc_lengths[best] < g.arc_lengths[i]) {
            best = i;
            tie = false;
        }
    }
    if (tie) throw std::invalid_argument("quadratic_gap_major: tie among longest edges");

    Major major;
    major.edge = g.edges[best];
    major.h_length = g.arc_lengths[best];
    if (major.h_length < Angle(1, 3)) {
        throw std::invalid_argument("quadratic_gap_major: H-length of longest edge is below 1/3");
    }

    const DegreeMap d3(3);
    if (is_critical(major.edge, d3)) {
        major.type = MajorType::RegularCritical;
        return major;
    }

    // Periodicity is decidable: the orbit of p/q under tripling has at
    // most q points, so the pair orbit is bounded by the denominator
    // product.
    BigInt bound = major.edge.a().den() * major.edge.b().den();
    Chord cur = major.edge;
    for (BigInt k = 1; k <= bound; ++k) {
        cur = sigma(cur, d3);
        if (cur == major.edge) {
            major.type = MajorType::Periodic;
            major.period = k.convert_to<unsigned long>();
            return major;
        }
    }
    throw std::invalid_argument("quadratic_gap_major: major is neither critical nor periodic");
}

}  // namespace cubicatlas
