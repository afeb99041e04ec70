#pragma once
/**
 * @file io.hpp
 * @brief JSON and command-line text formats: quaternions, slice-function descriptors,
 *        regions and series specs.
 */

#include <charconv>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "geometry.hpp"
#include "kernels.hpp"
#include "quaternion.hpp"
#include "series.hpp"
#include "star.hpp"

namespace finestruct {

using json = nlohmann::json;

inline json to_json(const Quaternion& q) { return json::array({q.q0, q.q1, q.q2, q.q3}); }

inline Quaternion quaternion_from_json(const json& j) {
    if (j.is_number()) return Quaternion{j.get<double>()};
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("quaternion must be [q0,q1,q2,q3]");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

/// "a,b,c,d" (a single number is read as a real quaternion).
inline Quaternion parse_quaternion(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        try {
            v.push_back(std::stod(item, &pos));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad quaternion component: '" + item + "'");
        }
        if (item.find_first_not_of(" \t", pos) != std::string::npos)
            throw std::invalid_argument("bad quaternion component: '" + item + "'");
    }
    if (v.size() == 1) return Quaternion{v[0]};
    if (v.size() != 4) throw std::invalid_argument("quaternion needs 4 comma-separated components");
    return {v[0], v[1], v[2], v[3]};
}

inline ImaginaryUnit parse_unit(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stod(item));
    if (v.size() != 3) throw std::invalid_argument("imaginary unit needs 3 comma-separated components");
    auto I = ImaginaryUnit::from({0.0, v[0], v[1], v[2]});
    if (!I) throw std::invalid_argument("imaginary unit must be non-zero");
    return *I;
}

inline std::string format_quaternion(const Quaternion& q) { return to_json(q).dump(); }

// ---------------------------------------------------------------------------
// Slice-function descriptors

/**
 * {"kind":"monomial_sum","coeffs":[[...],...]} or {"kind":"kernel","name":"S_L_inv","p":[...]}.
 * The shorthand "q^k" is accepted for a single monomial.
 */
inline SliceFunction slice_function_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "monomial_sum") {
        std::vector<Quaternion> c;
        for (const auto& x : j.at("coeffs")) c.push_back(quaternion_from_json(x));
        return SliceFunction::polynomial(std::move(c));
    }
    if (kind == "kernel") {
        const KernelId id = parse_kernel(j.at("name").get<std::string>());
        if (id != KernelId::S_L_inv_I && id != KernelId::S_L_inv_II)
            throw std::invalid_argument("only S_L_inv is a slice function of q");
        const Quaternion p = quaternion_from_json(j.at("p"));
        return SliceFunction::from_values([p](const Quaternion& q) { return S_L_inv(p, q); });
    }
    throw std::invalid_argument("unknown slice function kind: " + kind);
}

inline SliceFunction parse_slice_function(const std::string& text) {
    static const std::regex mono(R"(\s*q\s*(?:\^\s*(\d+))?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, mono)) {
        const int k = m[1].matched ? std::stoi(m[1].str()) : 1;
        std::vector<Quaternion> c(k + 1);
        c[k] = 1.0;
        return SliceFunction::polynomial(std::move(c));
    }
    try {
        return slice_function_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad function descriptor: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Regions

inline json to_json(const Region& r) {
    json j{{"tag", std::string(region_name(r.tag))}, {"p", to_json(r.p)}};
    switch (r.tag) {
        case RegionTag::sigma_ball:
        case RegionTag::cassini_ball: j["R"] = r.r_outer; break;
        case RegionTag::star_dome: j["r"] = r.r_outer; break;
        case RegionTag::star_shell: j["R1"] = r.r_inner; j["R2"] = r.r_outer; break;
        case RegionTag::cassini_shell: j["r1"] = r.r_inner; j["r2"] = r.r_outer; break;
    }
    return j;
}

inline Region region_from_json(const json& j) {
    const RegionTag tag = parse_region_tag(j.at("tag").get<std::string>());
    const Quaternion p = quaternion_from_json(j.at("p"));
    switch (tag) {
        case RegionTag::sigma_ball:
        case RegionTag::cassini_ball: return Region::ball(tag, p, j.at("R").get<double>());
        case RegionTag::star_dome: return Region::ball(tag, p, j.contains("r") ? j["r"].get<double>() : j.at("R").get<double>());
        case RegionTag::star_shell: return Region::shell(tag, p, j.at("R1").get<double>(), j.at("R2").get<double>());
        case RegionTag::cassini_shell: return Region::shell(tag, p, j.at("r1").get<double>(), j.at("r2").get<double>());
    }
    throw std::invalid_argument("bad region");
}

// ---------------------------------------------------------------------------
// Series specs

inline json to_json(const SeriesSpec& s) {
    json c = json::object();
    for (const auto& [k, a] : s.coeffs) c[std::to_string(k)] = to_json(a);
    return {{"kind", std::string(series_kind_name(s.kind))}, {"center", to_json(s.center)}, {"coeffs", c}, {"N", s.N}};
}

inline SeriesSpec series_from_json(const json& j) {
    SeriesSpec s;
    s.kind = parse_series_kind(j.at("kind").get<std::string>());
    s.center = quaternion_from_json(j.at("center"));
    s.N = j.value("N", 32);
    const json& c = j.at("coeffs");
    if (c.is_array()) {
        for (std::size_t k = 0; k < c.size(); ++k) s.coeffs[static_cast<int>(k)] = quaternion_from_json(c[k]);
    } else {
        for (const auto& [key, val] : c.items()) {
            int k = 0;
            const auto r = std::from_chars(key.data(), key.data() + key.size(), k);
            if (r.ec != std::errc{} || r.ptr != key.data() + key.size())
                throw std::invalid_argument("coefficient index must be an integer: " + key);
            s.coeffs[k] = quaternion_from_json(val);
        }
    }
    s.validate();
    return s;
}

inline json to_json(const FineSeries& f) {
    json c = json::object();
    for (const auto& [k, a] : f.coeffs) c[std::to_string(k)] = to_json(a);
    return {{"op", std::string(op_name(f.op))},
            {"source", std::string(series_kind_name(f.source))},
            {"center", to_json(f.center.p)},
            {"basis", fine_basis_name(f)},
            {"coeffs", c},
            {"N", f.N}};
}

}  // namespace finestruct
