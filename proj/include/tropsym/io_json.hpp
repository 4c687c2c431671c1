#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "tropsym/dynamics.hpp"
#include "tropsym/tableau.hpp"

namespace tropsym {

using nlohmann::json;

inline json tableau_to_json(const Tableau& t) {
    return json{{"k", t.k()}, {"n", t.n()}, {"cols", t.cols()}};
}

inline Tableau tableau_from_json(const json& j) {
    return Tableau(j.at("k").get<int>(), j.at("n").get<int>(),
                   j.at("cols").get<std::vector<std::vector<int>>>());
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline json orbit_entry_to_json(const OrbitEntry& e) {
    json word = json::array();
    for (const auto& f : e.word) word.push_back(f.str());
    return json{{"g", e.g}, {"degree", e.degree}, {"word", word}};
}

inline json fixed_point_to_json(const FixedPointReport& r) {
    json j{{"g", r.g},
           {"tableau", tableau_to_json(r.tableau)},
           {"rank", r.rank},
           {"stability", stability_name(r.stability)}};
    if (r.stability == Stability::Stable) {
        j["witness"] = {{"iterations", r.witness.iterations},
                        {"final_distance", r.witness.final_distance}};
    } else if (r.stability == Stability::Unstable) {
        j["witness"] = {{"iterations", r.witness.iterations},
                        {"divergent_start", r.witness.divergent_start}};
    }
    return j;
}

} // namespace tropsym
