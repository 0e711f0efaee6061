#pragma once

#include <json.hpp>

#include "sl3cv/betti.hpp"
#include "sl3cv/character_variety.hpp"
#include "sl3cv/gaussian.hpp"
#include "sl3cv/integral_points.hpp"

namespace sl3cv {

// Exact values serialize as strings ("p/q"); JSON numbers would silently
// round. Matrices are row-major length-9 arrays.
inline nlohmann::json json_rat(const Rational& q) {
    return rat_str(q);
}

inline nlohmann::json json_mat(const Mat3& m) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : m.e) a.push_back(rat_str(x));
    return a;
}

inline nlohmann::json json_mat(const Mat3c& m) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : m.e) a.push_back(to_string(x));
    return a;
}

inline nlohmann::json json_point(const CharacterPoint& p) {
    return nlohmann::json::array({rat_str(p.x), rat_str(p.y), rat_str(p.z)});
}

inline nlohmann::json json_pair(const RepPair& r) {
    return {{"gamma1", json_mat(r.a1().mat())},
            {"gamma2", json_mat(r.a2().mat())},
            {"gamma3", json_mat(r.a3().mat())}};
}

inline nlohmann::json json_witness(const IntegralWitness& w) {
    nlohmann::json src;
    if (std::holds_alternative<long>(w.source)) {
        src = {{"family", "c1"}, {"n", std::get<long>(w.source)}};
    } else {
        const auto& t = std::get<DiophantineTriple>(w.source);
        src = {{"family", "c2"},
               {"k", t.k.get_str()},
               {"l", t.l.get_str()},
               {"m", t.m.get_str()}};
    }
    return {{"source", src},
            {"rep", json_pair(w.rep)},
            {"character", json_point(w.character)},
            {"component", to_string(w.component)}};
}

}  // namespace sl3cv
