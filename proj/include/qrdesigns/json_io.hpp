#pragma once

#include <string>

#include <json.hpp>

#include "designs.hpp"
#include "gf2poly.hpp"
#include "harmonic.hpp"
#include "jacobi.hpp"
#include "linear_code.hpp"
#include "proj_geom.hpp"

namespace qrd {

// Coordinate label: finite points by number, infinity as "inf".
inline nlohmann::json label_json(int point, int p) {
    if (point == p) return "inf";
    return point;
}

inline nlohmann::json to_json(const LinearCode& C) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : C.rows()) rows.push_back(r.to_string());
    return {{"n", C.length()}, {"k", C.dimension()}, {"rows", rows}};
}

inline nlohmann::json to_json(const Gf2Poly& g) { return g.to_string(); }

// {n, t, T, terms: [{m0, m1, n0, n1, coeff}]}, terms sorted by (m1, n1).
inline nlohmann::json to_json(const JacobiTable& J, int p) {
    nlohmann::json T = nlohmann::json::array();
    for (int i : J.T) T.push_back(label_json(i, p));
    nlohmann::json terms = nlohmann::json::array();
    for (int m1 = 0; m1 <= J.t; ++m1)
        for (int n1 = 0; n1 <= J.n - J.t; ++n1) {
            long long c = J.at(m1, n1);
            if (!c) continue;
            terms.push_back({{"m0", J.t - m1},
                             {"m1", m1},
                             {"n0", J.n - J.t - n1},
                             {"n1", n1},
                             {"coeff", c}});
        }
    return {{"n", J.n}, {"t", J.t}, {"T", T}, {"terms", terms}};
}

// {p, representatives, sizes, labels}; labels indexed by colex rank.
inline nlohmann::json to_json(const OrbitPartition& part) {
    nlohmann::json reps = nlohmann::json::array();
    for (const auto& r : part.representatives) {
        nlohmann::json t = nlohmann::json::array();
        for (int x : r) t.push_back(label_json(x, part.p));
        reps.push_back(t);
    }
    return {{"p", part.p},
            {"representatives", reps},
            {"sizes", {part.sizes[0], part.sizes[1]}},
            {"labels", part.labels}};
}

inline nlohmann::json to_json(const Rat& r) {
    if (r.is_integer()) return r.num;
    return r.to_string();
}

inline nlohmann::json to_json(const HarmonicEnumerator& w) {
    nlohmann::json coeff = nlohmann::json::array();
    for (int ell = 0; ell <= w.n; ++ell)
        if (!w.coeff[ell].is_zero()) coeff.push_back({{"ell", ell}, {"coeff", to_json(w.coeff[ell])}});
    return {{"n", w.n}, {"coeff", coeff}};
}

inline nlohmann::json to_json(const DesignVerdict& v) {
    nlohmann::json j = {{"t", v.t}, {"status", to_string(v.status)}};
    if (v.lambda) j["lambda"] = to_json(*v.lambda);
    if (!v.witness.empty()) j["witness"] = v.witness;
    return j;
}

// {p, code, shell, blocks, verdicts}
inline nlohmann::json design_report_json(int p, const std::string& code_name, const DesignReport& rep) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : rep.verdicts) verdicts.push_back(to_json(v));
    nlohmann::json j = {{"p", p},
                        {"code", code_name},
                        {"shell", rep.shell_weight},
                        {"blocks", rep.block_count},
                        {"verdicts", verdicts}};
    if (rep.cc1 >= 0) j["covering_counts"] = {rep.cc1, rep.cc2};
    if (rep.dedup_flagged) j["deduplicated_full_support"] = true;
    return j;
}

}  // namespace qrd
