#include "cubicatlas/lamination.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cubicatlas {

Chord sigma(const Chord& c, const DegreeMap& d) {
    return Chord(sigma(c.a(), d), sigma(c.b(), d));
}

bool chords_cross(const Chord& c1, const Chord& c2) {
    if (c1.degenerate() || c2.degenerate()) return false;
    if (c1.shares_endpoint(c2)) return false;
    // Canonical order gives a < b, so the open arc (a,b) is a plain
    // interval; the chords cross iff exactly one endpoint of c2 is in it.
    int inside = 0;
    if (c2.a().strictly_inside_arc(c1.a(), c1.b())) ++inside;
    if (c2.b().strictly_inside_arc(c1.a(), c1.b())) ++inside;
    return inside == 1;
}

bool chords_disjoint(const Chord& c1, const Chord& c2) {
    return !c1.shares_endpoint(c2) && !chords_cross(c1, c2);
}

bool is_critical(const Chord& c, const DegreeMap& d) {
    if (c.degenerate()) return false;
    return sigma(c.a(), d) == sigma(c.b(), d);
}

std::optional<std::pair<Chord, Chord>> Lamination::find_crossing() const {
    for (auto i = leaves.begin(); i != leaves.end(); ++i) {
        for (auto j = std::next(i); j != leaves.end(); ++j) {
            if (chords_cross(*i, *j)) return std::make_pair(*i, *j);
        }
    }
    return std::nullopt;
}

Lamination parse_lamination(std::istream& in) {
    Lamination lam;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first, second;
        if (!(ls >> first)) continue;
        if (first.rfind("d=", 0) == 0) {
            lam.degree = std::stoi(first.substr(2));
            if (lam.degree < 2) throw std::invalid_argument("lamination: degree must be >= 2");
            continue;
        }
        if (!(ls >> second)) throw std::invalid_argument("lamination: expected two angles per leaf line");
        lam.leaves.insert(Chord(Angle::parse(first), Angle::parse(second)));
    }
    return lam;
}

Lamination parse_lamination_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("lamination: cannot open " + path);
    return parse_lamination(in);
}

std::string format_lamination(const Lamination& lam) {
    std::ostringstream out;
    out << "d=" << lam.degree << "\n";
    for (const Chord& c : lam.leaves) out << c.str() << "\n";
    return out.str();
}

namespace {

// All d*d candidate preimage chords of `target` under sigma_d: one
// endpoint over each preimage of target.a(), one over each of target.b().
std::vector<Chord> preimage_candidates(const Chord& target, const DegreeMap& d) {
    std::vector<Chord> out;
    const Angle& a = target.a();
    const Angle& b = target.b();
    for (int i = 0; i < d.d; ++i) {
        Angle pa((a.num() + i * a.den()), a.den() * d.d);
        for (int j = 0; j < d.d; ++j) {
            Angle pb((b.num() + j * b.den()), b.den() * d.d);
            out.emplace_back(pa, pb);
        }
    }
    return out;
}

}  // namespace

SiblingReport check_sibling_invariant(const Lamination& lam) {
    SiblingReport report;
    const DegreeMap d(lam.degree);

    for (const Chord& leaf : lam.leaves) {
        Chord image = sigma(leaf, d);

        // (1) forward closure; degenerate images are implicitly present.
        if (!image.degenerate() && !lam.contains(image)) {
            report.violations.push_back({leaf, 1, "image " + image.str() + " absent from the set"});
        }

        // (2) admissible preimage: already listed, or at least one of the
        // endpoint-preimage combinations is compatible with the leaf set.
        bool has_preimage = false;
        for (const Chord& cand : preimage_candidates(leaf, d)) {
            if (cand.degenerate()) continue;
            if (lam.contains(cand)) { has_preimage = true; break; }
            bool clashes = false;
            for (const Chord& other : lam.leaves) {
                if (chords_cross(cand, other)) { clashes = true; break; }
            }
            if (!clashes) { has_preimage = true; break; }
        }
        if (!has_preimage) {
            report.violations.push_back({leaf, 2, "no admissible sigma-preimage chord"});
        }

        // (3) d pairwise disjoint siblings in the set, leaf included.
        if (!image.degenerate()) {
            std::vector<Chord> same_image;
            for (const Chord& other : lam.leaves) {
                if (sigma(other, d) == image) same_image.push_back(other);
            }
            // Backtracking search for a disjoint family of size d containing leaf.
            std::vector<Chord> chosen{leaf};
            std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
                if (chosen.size() == static_cast<std::size_t>(d.d)) return true;
                for (std::size_t k = from; k < same_image.size(); ++k) {
                    const Chord& cand = same_image[k];
                    if (cand == leaf) continue;
                    bool ok = true;
                    for (const Chord& c : chosen) {
                        if (!chords_disjoint(c, cand)) { ok = false; break; }
                    }
                    if (!ok) continue;
                    chosen.push_back(cand);
                    if (extend(k + 1)) return true;
                    chosen.pop_back();
                }
                return false;
            };
            if (!extend(0)) {
                report.violations.push_back(
                    {leaf, 3, "no " + std::to_string(d.d) + " disjoint siblings with image " + image.str()});
            }
        }
    }

    report.pass = report.violations.empty();
    return report;
}

std::string SiblingReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations) {
        j["violations"].push_back({{"leaf", v.leaf.str()}, {"condition", v.condition}, {"detail", v.detail}});
    }
    return j.dump(2);
}

std::vector<Chord> hull_edges(const AngleClass& cls) {
    std::vector<Angle> sorted(cls.begin(), cls.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Chord> edges;
    if (sorted.size() < 2) return edges;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        edges.emplace_back(sorted[i], sorted[(i + 1) % sorted.size()]);
    }
    if (sorted.size() == 2) edges.pop_back();  // a pair is a single chord
    return edges;
}

bool classes_unlinked(const AngleClass& a, const AngleClass& b) {
    std::vector<Angle> sa(a.begin(), a.end());
    std::sort(sa.begin(), sa.end());
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    if (sa.size() < 2) return true;  // a point or empty set links nothing
    // b must fit inside one arc between consecutive points of a.
    for (std::size_t i = 0; i < sa.size(); ++i) {
        const Angle& lo = sa[i];
        const Angle& hi = sa[(i + 1) % sa.size()];
        bool all_in = true;
        for (const Angle& x : b) {
            if (!x.strictly_inside_arc(lo, hi)) { all_in = false; break; }
        }
        if (all_in) return true;
    }
    return false;
}

namespace {

// Sorted distinct representatives of a class, circular order.
std::vector<Angle> cyclic_sorted(const AngleClass& cls) {
    std::vector<Angle> v(cls.begin(), cls.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::string class_str(const AngleClass& cls) {
    std::string s = "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
        if (i) s += ", ";
        s += cls[i].str();
    }
    return s + "}";
}

}  // namespace

AxiomReport check_equivalence_axioms(const std::vector<AngleClass>& classes, const DegreeMap& d) {
    AxiomReport report;
    report.skipped.push_back("E1");  // closed graph: not decidable on finite data

    std::vector<std::vector<Angle>> sorted;
    sorted.reserve(classes.size());
    for (const auto& c : classes) sorted.push_back(cyclic_sorted(c));

    // Input validation: pairwise disjoint point sets.
    std::set<Angle> seen;
    for (const auto& c : sorted) {
        for (const Angle& x : c) {
            if (!seen.insert(x).second) {
                throw std::invalid_argument("check_equivalence_axioms: classes overlap at " + x.str());
            }
        }
    }

    // E2: unlinked hulls.
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (!classes_unlinked(sorted[i], sorted[j])) {
                report.violations.push_back({"E2", i, j, "hulls of " + class_str(classes[i]) + " and " +
                                                            class_str(classes[j]) + " are linked"});
            }
        }
    }

    // D1: image of each class is a listed class.
    auto find_class = [&](const std::vector<Angle>& image) -> bool {
        for (const auto& c : sorted) {
            if (c == image) return true;
        }
        return false;
    };
    std::vector<std::vector<Angle>> images;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        AngleClass img;
        for (const Angle& x : sorted[i]) img.push_back(sigma(x, d));
        images.push_back(cyclic_sorted(img));
        if (!find_class(images.back())) {
            report.violations.push_back({"D1", i, 0, "sigma-image of " + class_str(classes[i]) + " is not a listed class"});
        }
    }

    // D2: sigma acts on each class as a cyclic-order-preserving covering:
    // walking the class once counterclockwise must walk its image
    // monotonically, one position per step. Vacuous for |image| <= 1 and
    // for classes of size <= 2.
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto& cls = sorted[i];
        const auto& img = images[i];
        if (cls.size() <= 2 || img.size() <= 1) continue;
        std::size_t r = img.size();
        if (cls.size() % r != 0) {
            report.violations.push_back({"D2", i, 0, "class size not a multiple of image size"});
            continue;
        }
        auto index_of = [&](const Angle& x) -> std::size_t {
            return static_cast<std::size_t>(std::lower_bound(img.begin(), img.end(), x) - img.begin());
        };
        bool ok = true;
        std::size_t prev = index_of(sigma(cls[0], d));
        for (std::size_t k = 1; k <= cls.size(); ++k) {
            std::size_t cur = index_of(sigma(cls[k % cls.size()], d));
            if (cur != (prev + 1) % r) { ok = false; break; }
            prev = cur;
        }
        if (!ok) {
            report.violations.push_back({"D2", i, 0, "sigma does not preserve consecutive triples on " + class_str(classes[i])});
        }
    }

    report.pass = report.violations.empty();
    return report;
}

std::string AxiomReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    j["skipped"] = skipped;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : violations) {
        j["violations"].push_back({{"axiom", v.axiom},
                                   {"class", v.class_index},
                                   {"other", v.other_index},
                                   {"detail", v.detail}});
    }
    return j.dump(2);
}

}  // namespace cubicatlas
