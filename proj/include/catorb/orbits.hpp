#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catorb/counting.hpp"
#include "catorb/partition.hpp"

namespace catorb {

enum class Provenance { DOnly, TauOnly, Both };

inline const char* tag_name(Provenance p) {
    switch (p) {
        case Provenance::DOnly: return "d";
        case Provenance::TauOnly: return "tau";
        default: return "both";
    }
}

struct OmegaSpec {
    int m;
};

struct TaggedElement {
    Partition mu;
    Provenance tag;
};

// One level set of an orbit: P^l(lambda) or P^l(Omega_m), elements sorted
// descending-lex. dedup_count / desd_matched audit the per-parent descendant
// route against the definitional one; for square roots the builder throws if
// they ever disagree (the disjoint-descendant theorem as a runtime check),
// for other roots the flags simply record what happened.
struct OrbitLevel {
    int level = 1;
    bool omega = false;
    Partition root{std::vector<int>{1}};
    int k = 1;
    int m = 0;
    std::vector<TaggedElement> elements;
    long long dedup_count = 0;
    bool desd_matched = true;

    std::size_t size() const { return elements.size(); }
    bool contains(const Partition& p) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), p,
                                   [](const TaggedElement& e, const Partition& q) { return DescLex{}(e.mu, q); });
        return it != elements.end() && it->mu == p;
    }
};

// d(mu) at level l: (mu:1), ..., (mu:mu_l), then tau_{l+1}(mu:1).
inline std::vector<Partition> descendants(const Partition& mu, int level) {
    if (mu.size() != level) throw std::invalid_argument("descendants: partition must have `level` parts");
    if (mu.first() > level) throw BoundViolation{mu.first(), level};
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(mu.last()) + 1);
    for (int j = 1; j <= mu.last(); ++j) out.push_back(append_part(mu, j));
    out.push_back(tau_complement(out.front(), level + 1));
    return out;
}

namespace detail {

using TagMap = std::map<Partition, unsigned, DescLex>;  // bit 0: d-part, bit 1: tau-part

inline Provenance tag_of(unsigned bits) {
    return bits == 3 ? Provenance::Both : (bits == 1 ? Provenance::DOnly : Provenance::TauOnly);
}

// One definitional step: D = all appends of the previous level, T = tau_bound(D).
// Also audits the descendant route (appends plus tau(first append) per parent).
inline TagMap orbit_step(const TagMap& prev, int tau_bound, long long& dedup_count, bool& desd_matched) {
    TagMap next;
    std::vector<Partition> desc_route;
    long long candidates = 0;
    for (const auto& [mu, bits] : prev) {
        (void)bits;
        for (int j = 1; j <= mu.last(); ++j) {
            Partition child = append_part(mu, j);
            next[child] |= 1u;
            desc_route.push_back(child);
        }
        desc_route.push_back(tau_complement(append_part(mu, 1), tau_bound));
        candidates += mu.last() + 1;
    }
    std::vector<Partition> tau_images;
    for (const auto& [mu, bits] : next)
        if (bits & 1u) tau_images.push_back(tau_complement(mu, tau_bound));
    for (auto& t : tau_images) next[std::move(t)] |= 2u;

    std::sort(desc_route.begin(), desc_route.end(), DescLex{});
    desc_route.erase(std::unique(desc_route.begin(), desc_route.end()), desc_route.end());
    dedup_count += candidates - static_cast<long long>(desc_route.size());
    if (desc_route.size() != next.size() ||
        !std::equal(desc_route.begin(), desc_route.end(), next.begin(),
                    [](const Partition& a, const auto& kv) { return a == kv.first; }))
        desd_matched = false;
    return next;
}

inline std::vector<TaggedElement> flatten(const TagMap& m) {
    std::vector<TaggedElement> out;
    out.reserve(m.size());
    for (const auto& [mu, bits] : m) out.push_back({mu, tag_of(bits)});
    return out;
}

}  // namespace detail

// P^l(lambda) for lambda with k parts, each <= k. Base level {lambda, tau_k
// lambda} (seed tagged d, its image tau, both if fixed); afterwards each level
// is D = appends, T = tau_l(D), tagged by membership.
inline OrbitLevel build_orbit(const Partition& lam, int k, int level) {
    if (lam.size() != k) throw std::invalid_argument("build_orbit: lambda must have exactly k parts");
    if (lam.first() > k) throw BoundViolation{lam.first(), k};
    if (level < k) throw std::invalid_argument("build_orbit: level must be >= k");

    detail::TagMap cur;
    cur[lam] |= 1u;
    cur[tau_complement(lam, k)] |= 2u;

    OrbitLevel out;
    out.level = level;
    out.root = lam;
    out.k = k;
    for (int l = k + 1; l <= level; ++l)
        cur = detail::orbit_step(cur, l, out.dedup_count, out.desd_matched);
    if (is_square(lam, k) && (out.dedup_count != 0 || !out.desd_matched))
        throw std::logic_error("build_orbit: descendant sets collided for a square root");
    out.elements = detail::flatten(cur);
    return out;
}

// P^l(Omega_m): base level Omega_m = {(1),...,(m)} with d-part = tau-part =
// Omega_m, tau bound l+m-1 at level l.
inline OrbitLevel build_omega_orbit(OmegaSpec spec, int level) {
    if (spec.m < 1) throw std::invalid_argument("build_omega_orbit: m must be >= 1");
    if (level < 1) throw std::invalid_argument("build_omega_orbit: level must be >= 1");

    detail::TagMap cur;
    for (int j = 1; j <= spec.m; ++j) cur[Partition({j})] = 3u;

    OrbitLevel out;
    out.level = level;
    out.omega = true;
    out.m = spec.m;
    for (int l = 2; l <= level; ++l)
        cur = detail::orbit_step(cur, l + spec.m - 1, out.dedup_count, out.desd_matched);
    out.elements = detail::flatten(cur);
    return out;
}

inline OrbitLevel build_omega_orbit(int m, int level) { return build_omega_orbit(OmegaSpec{m}, level); }

enum class StepKind { D, Tau };

struct Classification {
    Partition root;
    int k;
    std::vector<StepKind> steps;
};

// Walk mu down to its square root: drop the last part while mu_1 < l (d-step),
// otherwise reflect first (tau-step). Stops at the unique square partition
// whose orbit contains mu; the root is named by the descending-lex minimum of
// its tau-pair.
inline Classification classify_root(Partition mu) {
    if (mu.first() > mu.size()) throw BoundViolation{mu.first(), mu.size()};
    std::vector<StepKind> steps;
    while (!is_square(mu, mu.size())) {
        int l = mu.size();
        if (mu.first() < l) {
            mu = drop_last(mu);
            steps.push_back(StepKind::D);
        } else {
            mu = drop_last(tau_complement(mu, l));
            steps.push_back(StepKind::Tau);
        }
    }
    int k = mu.size();
    Partition t = tau_complement(mu, k);
    return {std::min(mu, t), k, std::move(steps)};
}

struct CoverReport {
    int level = 1;
    bool classify_ok = true;
    bool disjoint_ok = true;
    bool sizes_ok = true;
    Int expected_total = 0;
    Int actual_total = 0;
    std::vector<std::pair<Partition, std::size_t>> orbit_sizes;  // canonical root -> size
    std::vector<std::string> failures;
    bool ok() const { return classify_ok && disjoint_ok && sizes_ok; }
};

// Theorem check: P^l is the disjoint union of the orbits of all square roots
// with k <= l, and classify_root sends every element into its own orbit.
inline CoverReport verify_cover(int level) {
    if (level < 1) throw std::invalid_argument("verify_cover: level must be >= 1");
    CoverReport rep;
    rep.level = level;
    rep.expected_total = binomial(2 * level - 1, level);

    std::map<Partition, OrbitLevel, DescLex> orbits;
    for (int k = 1; k <= level; ++k)
        for (const Partition& lam : enumerate_box(k, k)) {
            if (!is_square(lam, k)) continue;
            Partition canon = std::min(lam, tau_complement(lam, k));
            if (!orbits.count(canon)) orbits.emplace(canon, build_orbit(canon, k, level));
        }

    std::map<Partition, const Partition*, DescLex> owner;
    for (const auto& [root, orb] : orbits) {
        rep.orbit_sizes.emplace_back(root, orb.size());
        rep.actual_total += orb.size();
        for (const auto& el : orb.elements) {
            auto [it, fresh] = owner.emplace(el.mu, &root);
            if (!fresh) {
                rep.disjoint_ok = false;
                rep.failures.push_back("element " + el.mu.str() + " lies in orbits of " + it->second->str() +
                                       " and " + root.str());
            }
        }
    }
    if (rep.actual_total != rep.expected_total) {
        rep.sizes_ok = false;
        rep.failures.push_back("orbit sizes sum to " + rep.actual_total.str() + ", expected " +
                               rep.expected_total.str());
    }
    for (const Partition& mu : enumerate_box(level, level)) {
        Classification c = classify_root(mu);
        auto it = orbits.find(c.root);
        if (it == orbits.end() || !it->second.contains(mu)) {
            rep.classify_ok = false;
            rep.failures.push_back("classify_root(" + mu.str() + ") = " + c.root.str() +
                                   " but the orbit does not contain it");
        }
    }
    return rep;
}

struct QOrbit {
    Partition lam{std::vector<int>{1}};
    std::vector<std::vector<Partition>> levels;  // Q^1 .. Q^depth, each sorted descending-lex
    std::vector<long long> collisions;           // dedup events per level
    std::vector<std::size_t> cardinalities;

    long long total_collisions() const {
        long long t = 0;
        for (long long c : collisions) t += c;
        return t;
    }
    std::string cardinality_line() const {
        std::string s;
        for (std::size_t i = 0; i < cardinalities.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(cardinalities[i]);
        }
        return s;
    }
};

// Q-orbits of an arbitrary seed: level bound lam_1 + lam_k + l - 2 at depth l
// (depth 1 gives the lam_1 + lam_k - 1 base bound). No descendant shortcut is
// valid here, so levels are built from the definition with explicit dedup and
// the collision counter reports every duplicate generation event.
inline QOrbit build_q_orbit(const Partition& lam, int depth) {
    if (depth < 1) throw std::invalid_argument("build_q_orbit: depth must be >= 1");
    QOrbit q;
    q.lam = lam;
    int base_bound = lam.first() + lam.last() - 1;

    std::vector<Partition> base{lam, tau_complement(lam, base_bound)};
    std::sort(base.begin(), base.end(), DescLex{});
    base.erase(std::unique(base.begin(), base.end()), base.end());
    q.collisions.push_back(2 - static_cast<long long>(base.size()));
    q.levels.push_back(std::move(base));

    for (int l = 2; l <= depth; ++l) {
        std::vector<Partition> next;
        long long candidates = 0;
        for (const Partition& mu : q.levels.back()) {
            for (int j = 1; j <= mu.last(); ++j) next.push_back(append_part(mu, j));
            candidates += mu.last();
        }
        int bound = lam.first() + lam.last() + l - 2;
        std::size_t d_count = next.size();
        for (std::size_t i = 0; i < d_count; ++i) next.push_back(tau_complement(next[i], bound));
        candidates += static_cast<long long>(d_count);
        std::sort(next.begin(), next.end(), DescLex{});
        next.erase(std::unique(next.begin(), next.end()), next.end());
        q.collisions.push_back(candidates - static_cast<long long>(next.size()));
        q.levels.push_back(std::move(next));
    }
    for (const auto& lv : q.levels) q.cardinalities.push_back(lv.size());
    return q;
}

}  // namespace catorb
