#pragma once
/**
 * @file families.hpp
 * @brief Polynomial families of the fine structure, one- and two-variable, and Fueter polynomials.
 *
 * Defining sums are the primary evaluation path. The closed forms divide by the
 * vector part of q and serve as cross-checks away from the real axis.
 * Negative indices evaluate to 0 (empty sums), which keeps recurrences uniform at n = 0.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "quaternion.hpp"
#include "star.hpp"

namespace finestruct {

enum class Family { H, CA, P2, Pneg, S, R, Fueter, Ht, Qt, P2t, Hcal, Mcal, R2 };

inline constexpr std::array<std::pair<Family, std::string_view>, 13> kFamilyNames{{
    {Family::H, "H"},       {Family::CA, "CA"},     {Family::P2, "P2"},     {Family::Pneg, "Pneg"},
    {Family::S, "S"},       {Family::R, "R"},       {Family::Fueter, "Fueter"}, {Family::Ht, "Ht"},
    {Family::Qt, "Qt"},     {Family::P2t, "P2t"},   {Family::Hcal, "Hcal"}, {Family::Mcal, "Mcal"},
    {Family::R2, "R2"},
}};

inline std::string_view family_name(Family f) {
    for (auto [id, name] : kFamilyNames)
        if (id == f) return name;
    return "?";
}

inline Family parse_family(std::string_view s) {
    for (auto [id, name] : kFamilyNames)
        if (name == s) return id;
    throw std::invalid_argument("unknown family tag: " + std::string(s));
}

inline bool is_two_variable(Family f) {
    switch (f) {
        case Family::Ht: case Family::Qt: case Family::P2t:
        case Family::Hcal: case Family::Mcal: case Family::R2:
            return true;
        default:
            return false;
    }
}

namespace detail {

inline Quaternion qa_qbarb(const Quaternion& q, int a, int b) {
    return pow(q, static_cast<unsigned>(a)) * pow(conj(q), static_cast<unsigned>(b));
}

inline Quaternion H(int n, const Quaternion& q) {
    if (n < 0) return {};
    Quaternion s{};
    for (int k = 1; k <= n + 1; ++k) s += pow(conj(q), k - 1) * pow(q, n + 1 - k);
    return s / (n + 1.0);
}

inline Quaternion CA(int n, const Quaternion& q) {
    if (n < 0) return {};
    Quaternion s{};
    for (int j = 0; j <= n; ++j) s += (n - j + 1.0) * qa_qbarb(q, n - j, j);
    return s * (2.0 / ((n + 1.0) * (n + 2.0)));
}

inline Quaternion Pneg(int n, const Quaternion& q) {
    Quaternion s{};
    for (int i = 1; i <= n; ++i) s += pow(conj(q), n - i) * pow(q, i - 1);
    return s;
}

inline Quaternion S(int n, const Quaternion& q) {
    Quaternion s{};
    for (int j = 0; j <= n; ++j) s += (n - j + 0.0) * pow(conj(q), n - j) * pow(q, j);
    return s;
}

inline Quaternion R(int n, const Quaternion& q) {
    if (n < 0) return {};
    Quaternion s = n * pow(conj(q), n + 1);
    for (int i = 0; i <= n - 1; ++i) s += pow(conj(q), n - i) * pow(q, i + 1);
    return s;
}

inline Quaternion Ht(int n, const Quaternion& q, const StarCenter& p) {
    if (n < 0) return {};
    Quaternion s{};
    for (int k = 1; k <= n + 1; ++k) s += star_pair(p, q, n + 1 - k, k - 1);
    return s / (n + 1.0);
}

inline Quaternion Qt(int n, const Quaternion& q, const StarCenter& p) {
    if (n < 0) return {};
    Quaternion s{};
    for (int j = 0; j <= n; ++j) s += (n - j + 1.0) * star_pair(p, q, n - j, j);
    return s * (2.0 / ((n + 1.0) * (n + 2.0)));
}

inline Quaternion Hcal(int n, const Quaternion& q, const StarCenter& p) {
    Quaternion s{};
    for (int k = 1; k <= n; ++k) s += star_pair(p, q, k - 1, n - k);
    return s;
}

inline Quaternion Mcal(int n, const Quaternion& q, const StarCenter& p) {
    Quaternion s{};
    for (int j = 0; j <= n; ++j) s += (n - j + 0.0) * star_pair(p, q, j, n - j);
    return s;
}

inline Quaternion R2(int n, const Quaternion& q, const StarCenter& p) {
    if (n < 0) return {};
    Quaternion s = n * star_pair(p, q, 0, n + 1);
    for (int k = 0; k <= n - 1; ++k) s += star_pair(p, q, k + 1, n - k);
    return s;
}

}  // namespace detail

/// Defining-sum evaluation. Two-variable tags require a center; one-variable tags reject one.
inline Quaternion eval_family(Family id, int n, const Quaternion& q, const std::optional<StarCenter>& p = {}) {
    if (id == Family::Fueter) throw std::invalid_argument("Fueter polynomials take a multi-index");
    if (is_two_variable(id) != p.has_value())
        throw std::invalid_argument(std::string("family ") + std::string(family_name(id)) +
                                    (p ? " takes no center" : " requires a center"));
    switch (id) {
        case Family::H: return detail::H(n, q);
        case Family::CA: return detail::CA(n, q);
        case Family::P2: return n < 0 ? Quaternion{} : pow(q, n) + detail::H(n, q);
        case Family::Pneg: return detail::Pneg(n, q);
        case Family::S: return detail::S(n, q);
        case Family::R: return detail::R(n, q);
        case Family::Ht: return detail::Ht(n, q, *p);
        case Family::Qt: return detail::Qt(n, q, *p);
        case Family::P2t: return n < 0 ? Quaternion{} : star_power(*p, q, n) + detail::Ht(n, q, *p);
        case Family::Hcal: return detail::Hcal(n, q, *p);
        case Family::Mcal: return detail::Mcal(n, q, *p);
        case Family::R2: return detail::R2(n, q, *p);
        default: break;
    }
    throw std::invalid_argument("unknown family");
}

/// Closed forms through q̲^{-1}; q must be non-real. Index n >= 0 (>= 1 where the sum is empty at 0).
inline Quaternion eval_family_closed(Family id, int n, const Quaternion& q, const std::optional<StarCenter>& p = {}) {
    if (is_real(q)) throw real_axis_error("closed form requires a non-real q");
    if (is_two_variable(id) && !p) throw std::invalid_argument("family requires a center");
    const Quaternion qb = conj(q);
    const Quaternion w = inv(vec(q));  // q̲^{-1}
    const double m2 = norm2(q);
    const auto P = [&](int k) { return star_power(*p, q, k); };
    const auto Pb = [&](int k) { return conj_star_power(*p, q, k); };
    switch (id) {
        case Family::H:
            return -1.0 * w * (pow(qb, n + 1) - pow(q, n + 1)) / (2.0 * (n + 1));
        case Family::CA:
            return w / (2.0 * (n + 1) * (n + 2)) * (2.0 * (n + 2) * pow(q, n + 1) + w * (pow(qb, n + 2) - pow(q, n + 2)));
        case Family::P2:
            return pow(q, n) + eval_family_closed(Family::H, n, q);
        case Family::Pneg:
            return 0.5 * w * (pow(q, n) - pow(qb, n));
        case Family::S:
            return 0.25 * w * (-2.0 * n * pow(qb, n + 1) + m2 * w * (pow(q, n) - pow(qb, n)));
        case Family::R:
            return n * pow(qb, n + 1) + 0.5 * m2 * w * (pow(q, n) - pow(qb, n));
        case Family::Ht:
            return -1.0 * w * (Pb(n + 1) - P(n + 1)) / (2.0 * (n + 1));
        case Family::Qt:
            return w / (2.0 * (n + 2) * (n + 1)) * (2.0 * (n + 2) * P(n + 1) + w * (Pb(n + 2) - P(n + 2)));
        case Family::P2t:
            return P(n) - w / (2.0 * (n + 1)) * (Pb(n + 1) - P(n + 1));
        case Family::Hcal:
            return 0.5 * w * (P(n) - Pb(n));
        case Family::Mcal:
            return 0.25 * w * (-2.0 * n * Pb(n + 1) + w * (P(n) - Pb(n)) * qc(p->p, q));
        case Family::R2:
            return n * Pb(n + 1) + 0.5 * w * (P(n) - Pb(n)) * qc(p->p, q);
        default: break;
    }
    throw std::invalid_argument("no closed form for this family");
}

// ---------------------------------------------------------------------------
// Fueter polynomials

using MultiIndex = std::array<int, 3>;

inline constexpr int kMaxFueterDegree = 8;

/// (xi_1, xi_2, xi_3) with xi_i = q_i - e_i q_0.
inline std::array<Quaternion, 3> fueter_variables(const Quaternion& q) {
    return {Quaternion{q.q1, -q.q0, 0, 0}, Quaternion{q.q2, 0, -q.q0, 0}, Quaternion{q.q3, 0, 0, -q.q0}};
}

/// (1/|nu|!) sum over distinct orderings of prod (q0 e_l - q_l).
inline Quaternion eval_fueter_polynomial(const MultiIndex& nu, const Quaternion& q) {
    if (std::any_of(nu.begin(), nu.end(), [](int m) { return m < 0; }))
        throw std::invalid_argument("multi-index entries must be non-negative");
    const int m = nu[0] + nu[1] + nu[2];
    if (m > kMaxFueterDegree) throw std::invalid_argument("Fueter polynomial degree above 8 not supported");
    std::vector<int> lambda;
    for (int l = 0; l < 3; ++l) lambda.insert(lambda.end(), nu[l], l + 1);
    const auto xi = fueter_variables(q);
    Quaternion s{};
    do {
        Quaternion t{1.0};
        for (int l : lambda) t = t * (-xi[l - 1]);
        s += t;
    } while (std::next_permutation(lambda.begin(), lambda.end()));
    double fact = 1.0;
    for (int k = 2; k <= m; ++k) fact *= k;
    return s / fact;
}

}  // namespace finestruct
