#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "catorb/orbits.hpp"
#include "catorb/symfunc.hpp"
#include "catorb/trees.hpp"

namespace catorb {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const OrbitLevel& lv) {
    json elements = json::array();
    for (const auto& e : lv.elements)
        elements.push_back({{"parts", e.mu.parts()}, {"tag", tag_name(e.tag)}});
    json out;
    if (lv.omega) {
        out["m"] = lv.m;
    } else {
        out["root"] = lv.root.parts();
        out["k"] = lv.k;
    }
    out["level"] = lv.level;
    out["elements"] = std::move(elements);
    return out;
}

inline json to_json(const TreeNode& n) {
    json label;
    if (n.label.is_pair)
        label = {{"kind", "pair"}, {"i", n.label.a}, {"j", n.label.b}};
    else
        label = {{"kind", "single"}, {"r", n.label.a}};
    json children = json::array();
    for (const TreeNode& c : n.children) children.push_back(to_json(c));
    return json{{"partition", n.partition.parts()},
                {"level", n.level},
                {"kind", kind_name(n.kind)},
                {"label", std::move(label)},
                {"children", std::move(children)}};
}

inline json to_json(const OrbitTree& t) {
    json roots = json::array();
    for (const TreeNode& r : t.roots) roots.push_back(to_json(r));
    return json{{"forest", t.forest}, {"roots", std::move(roots)}};
}

inline json to_json(const CanonicalNode& n) {
    json label;
    if (n.label.is_pair)
        label = {{"kind", "pair"}, {"i", n.label.a}, {"j", n.label.b}};
    else
        label = {{"kind", "single"}, {"r", n.label.a}};
    json children = json::array();
    for (const CanonicalNode& c : n.children) children.push_back(to_json(c));
    return json{{"label", std::move(label)}, {"children", std::move(children)}};
}

inline json to_json(const GradedReport& rep) {
    json degrees = json::array();
    for (const auto& d : rep.degrees)
        degrees.push_back({{"D", d.D},
                           {"rows", d.rows},
                           {"cols", d.cols},
                           {"rank", d.rank},
                           {"predicted", d.predicted.convert_to<long long>()}});
    json spanning = json::array();
    for (const auto& s : rep.spanning)
        spanning.push_back({{"mu", s.mu.parts()}, {"solvable", s.solvable}});
    return json{{"ell", rep.ell},
                {"m", rep.m},
                {"r", rep.r},
                {"convention", convention_name(rep.convention)},
                {"degrees", std::move(degrees)},
                {"independence", rep.independence},
                {"spanning", std::move(spanning)},
                {"rank_count_match", rep.rank_count_match}};
}

inline json to_json(const Classification& c) {
    json steps = json::array();
    for (StepKind s : c.steps) steps.push_back(s == StepKind::D ? "d" : "tau");
    return json{{"root", c.root.parts()}, {"k", c.k}, {"steps", std::move(steps)}};
}

inline json to_json(const QOrbit& q) {
    json levels = json::array();
    for (const auto& lv : q.levels) {
        json row = json::array();
        for (const Partition& p : lv) row.push_back(p.parts());
        levels.push_back(std::move(row));
    }
    return json{{"lambda", q.lam.parts()},
                {"levels", std::move(levels)},
                {"cardinalities", q.cardinalities},
                {"collisions", q.collisions}};
}

}  // namespace catorb
