#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "linear_system.hpp"
#include "mi_bundle.hpp"

namespace sdmawc {

/// Region identifiers: scheme-1 variants (R11..R13), scheme-2 variants
/// (R21..R23), the no-key wiretap region R3, and the degraded-message-set
/// regions in the (R1,R0) plane.
enum class RegionId { R11, R12, R13, R21, R22, R23, R3, D11, D12, D21, D22, D3 };

inline const std::array<std::pair<RegionId, const char*>, 12>& region_id_table() {
    static const std::array<std::pair<RegionId, const char*>, 12> table = {{
        {RegionId::R11, "R11"}, {RegionId::R12, "R12"}, {RegionId::R13, "R13"},
        {RegionId::R21, "R21"}, {RegionId::R22, "R22"}, {RegionId::R23, "R23"},
        {RegionId::R3, "R3"},   {RegionId::D11, "D11"}, {RegionId::D12, "D12"},
        {RegionId::D21, "D21"}, {RegionId::D22, "D22"}, {RegionId::D3, "D3"},
    }};
    return table;
}

inline std::string region_name(RegionId id) {
    for (const auto& [rid, name] : region_id_table())
        if (rid == id) return name;
    return "?";
}

inline std::optional<RegionId> parse_region_id(const std::string& s) {
    for (const auto& [rid, name] : region_id_table())
        if (s == name) return rid;
    return std::nullopt;
}

inline bool is_scheme1(RegionId id) {
    return id == RegionId::R11 || id == RegionId::R12 || id == RegionId::R13 ||
           id == RegionId::R3;
}
inline bool is_scheme2(RegionId id) {
    return id == RegionId::R21 || id == RegionId::R22 || id == RegionId::R23;
}
inline bool is_degraded(RegionId id) {
    return id == RegionId::D11 || id == RegionId::D12 || id == RegionId::D21 ||
           id == RegionId::D22 || id == RegionId::D3;
}

namespace region_detail {

/// Key-rate cap of the scheme-1 variant: I(V;Y) minus the variant's
/// eavesdropper-plus-auxiliary term.
inline double scheme1_key_cap(const MiBundle& m, RegionId id) {
    switch (id) {
        case RegionId::R11:
        case RegionId::R3:
            return m.i_vy - m.i_v_uz;
        case RegionId::R12:
            return m.i_vy - m.i_v_zuu1;
        case RegionId::R13:
            return m.i_vy - m.i_v_zuu2;
        default:
            throw std::invalid_argument("scheme1_key_cap: not a scheme-1 region");
    }
}

}  // namespace region_detail

/// Emit the exact inequality list of the requested region over named
/// coordinates: (R1,R2,R11,R21) for scheme 1, (R1,R2,R11,R12,R21,R22) for
/// scheme 2, (R1,R0) for the degraded regions. min{a,b} bounds expand to two
/// rows; nonnegativity rows are included; strict rows carry a marker but are
/// used as closed (closure semantics). For R3 the key coordinates are pinned
/// to 0 and the eavesdropper terms lose their S conditioning.
inline LinearConstraintSystem region_system(const MiBundle& m, RegionId id) {
    LinearConstraintSystem sys;
    const double rsum_a = m.a12;
    const double rsum_b = m.a_all - m.i_vs;

    if (is_scheme1(id)) {
        sys.family = RegionFamily::Scheme1;
        sys.coords = {"R1", "R2", "R11", "R21"};
        const bool no_state = (id == RegionId::R3);
        const double key_cap = region_detail::scheme1_key_cap(m, id);
        const double e1 = no_state ? m.b1_nos : m.b1;
        const double e2 = no_state ? m.b2_nos : m.b2;
        const double e12 = no_state ? m.b12_nos : m.b12;
        const double e2c1 = no_state ? m.b2_c1_nos : m.b2_c1;
        const double e1c2 = no_state ? m.b1_c2_nos : m.b1_c2;

        sys.named_bounds = {{"A1", m.a1},       {"A2", m.a2},   {"RSUM_A", rsum_a},
                            {"RSUM_B", rsum_b}, {"K", key_cap}};

        if (id == RegionId::R11 || id == RegionId::R3) {
            sys.named_bounds["B1"] = e1;
            sys.named_bounds["B2"] = e2;
            sys.named_bounds["B12"] = e12;
            sys.add({{"R1", 1}, {"R11", -1}}, m.a1 - e1);
            sys.add({{"R1", 1}}, m.a1);
            sys.add({{"R2", 1}, {"R21", -1}}, m.a2 - e2);
            sys.add({{"R2", 1}}, m.a2);
            sys.add({{"R1", 1}, {"R2", 1}}, rsum_a);
            sys.add({{"R1", 1}, {"R2", 1}}, rsum_b);
            sys.add({{"R1", 1}, {"R2", 1}, {"R11", -1}, {"R21", -1}}, rsum_a - e12);
            sys.add({{"R1", 1}, {"R2", 1}, {"R11", -1}, {"R21", -1}}, rsum_b - e12);
        } else if (id == RegionId::R12) {
            sys.named_bounds["B2C1"] = e2c1;
            sys.add({{"R1", 1}, {"R11", -1}}, 0.0);
            sys.add({{"R1", 1}}, m.a1);
            sys.add({{"R2", 1}, {"R21", -1}}, m.a2 - e2c1);
            sys.add({{"R2", 1}}, m.a2);
            sys.add({{"R1", 1}, {"R2", 1}}, rsum_a);
            sys.add({{"R1", 1}, {"R2", 1}}, rsum_b);
            sys.add({{"R1", 1}, {"R2", 1}, {"R21", -1}}, rsum_a - e2c1);
            sys.add({{"R1", 1}, {"R2", 1}, {"R21", -1}}, rsum_b - e2c1);
            sys.add({{"R1", 1}, {"R2", 1}, {"R11", -1}, {"R21", -1}}, m.a2 - e2c1);
        } else {  // R13
            sys.named_bounds["B1C2"] = e1c2;
            sys.add({{"R1", 1}, {"R11", -1}}, m.a1 - e1c2);
            sys.add({{"R1", 1}}, m.a1);
            sys.add({{"R2", 1}, {"R21", -1}}, 0.0);
            sys.add({{"R2", 1}}, m.a2);
            sys.add({{"R1", 1}, {"R2", 1}}, rsum_a);
            sys.add({{"R1", 1}, {"R2", 1}}, rsum_b);
            sys.add({{"R1", 1}, {"R2", 1}, {"R11", -1}}, rsum_a - e1c2);
            sys.add({{"R1", 1}, {"R2", 1}, {"R11", -1}}, rsum_b - e1c2);
            sys.add({{"R1", 1}, {"R2", 1}, {"R11", -1}, {"R21", -1}}, m.a1 - e1c2);
        }
        sys.add({{"R11", 1}, {"R21", 1}}, key_cap);
        sys.add({{"R1", -1}}, 0.0);
        sys.add({{"R2", -1}}, 0.0);
        sys.add({{"R11", -1}}, 0.0);
        sys.add({{"R21", -1}}, 0.0);
        if (id == RegionId::R3) {  // key coordinates pinned to zero
            sys.add({{"R11", 1}}, 0.0);
            sys.add({{"R21", 1}}, 0.0);
            sys.named_bounds["PINNED"] = 1.0;
        }
        return sys;
    }

    if (is_scheme2(id)) {
        sys.family = RegionFamily::Scheme2;
        sys.coords = {"R1", "R2", "R11", "R12", "R21", "R22"};
        if (id == RegionId::R21) {
            sys.add({{"R1", 1}, {"R11", -1}}, m.s2_a1 - m.s2_b1);
            sys.add({{"R1", 1}, {"R12", 1}}, m.s2_a1);
            sys.add({{"R2", 1}, {"R21", -1}}, m.s2_a2 - m.s2_b2);
            sys.add({{"R2", 1}, {"R22", 1}}, m.s2_a2);
            sys.add({{"R1", 1}, {"R2", 1}},
                    m.s2_a12 - m.s2_b12 + m.h_s_z - m.h_s_yu1u2);
            sys.add({{"R1", 1}, {"R2", 1}}, m.s2_a12 - m.h_s_yu1u2);
        } else if (id == RegionId::R22) {
            sys.add({{"R1", 1}, {"R11", -1}}, 0.0);
            sys.add({{"R1", 1}, {"R12", 1}}, m.s2_a1);
            sys.add({{"R2", 1}, {"R21", -1}}, m.s2_a2 - m.s2_b2_c1);
            sys.add({{"R2", 1}, {"R22", 1}}, m.s2_a2);
            sys.add({{"R1", 1}, {"R2", 1}},
                    m.s2_a2 - m.s2_b2_c1 + m.h_s_zu1 - m.h_s_yu1u2);
            sys.add({{"R1", 1}, {"R2", 1}}, m.s2_a12 - m.h_s_yu1u2);
        } else {  // R23
            sys.add({{"R1", 1}, {"R11", -1}}, m.s2_a1 - m.s2_b1_c2);
            sys.add({{"R1", 1}, {"R12", 1}}, m.s2_a1);
            sys.add({{"R2", 1}, {"R21", -1}}, 0.0);
            sys.add({{"R2", 1}, {"R22", 1}}, m.s2_a2);
            sys.add({{"R1", 1}, {"R2", 1}},
                    m.s2_a1 - m.s2_b1_c2 + m.h_s_zu2 - m.h_s_yu1u2);
            sys.add({{"R1", 1}, {"R2", 1}}, m.s2_a12 - m.h_s_yu1u2);
        }
        // Secret-key budget from the state (strict in the paper, closed here)
        sys.add({{"R11", 1}, {"R12", 1}, {"R21", 1}, {"R22", 1}}, m.h_s_z, /*strict=*/true);
        // State-description rate must exceed H(S|Y,U1,U2)
        sys.add({{"R12", -1}, {"R22", -1}}, -m.h_s_yu1u2, /*strict=*/true);
        for (const char* c : {"R1", "R2", "R11", "R12", "R21", "R22"})
            sys.add({{c, -1.0}}, 0.0);
        return sys;
    }

    // Degraded message sets: coordinates (R1, R0), no free split rates.
    sys.family = RegionFamily::Degraded;
    sys.coords = {"R1", "R0"};
    switch (id) {
        case RegionId::D11:
            sys.add({{"R1", 1}}, m.a1 - m.b1_c2 + m.r_sk);
            sys.add({{"R1", 1}}, m.a1);
            sys.add({{"R0", 1}, {"R1", 1}}, rsum_b - m.b1_c2 + m.r_sk);
            sys.add({{"R0", 1}, {"R1", 1}}, rsum_b);
            break;
        case RegionId::D12:
            sys.add({{"R1", 1}}, m.r_sk);
            sys.add({{"R1", 1}}, m.a1);
            sys.add({{"R0", 1}, {"R1", 1}}, rsum_b);
            break;
        case RegionId::D21:
            sys.add({{"R1", 1}}, m.d_a1 - m.b1_c2 - m.h_s_uu1u2y + m.h_s_zuu2);
            sys.add({{"R1", 1}}, m.d_a1 - m.h_s_uu1u2y);
            sys.add({{"R0", 1}, {"R1", 1}}, m.d_sum - m.b1_c2 - m.h_s_uu1u2y + m.h_s_zuu2);
            sys.add({{"R0", 1}, {"R1", 1}}, m.d_sum - m.h_s_uu1u2y);
            break;
        case RegionId::D22:
            sys.add({{"R1", 1}}, m.h_s_zuu2 - m.h_s_uu1u2y);
            sys.add({{"R1", 1}}, m.d_a1 - m.h_s_uu1u2y);
            sys.add({{"R0", 1}, {"R1", 1}}, m.d_sum - m.h_s_uu1u2y);
            break;
        case RegionId::D3:  // D11 with zero key rate and S-free eavesdropper term
            sys.add({{"R1", 1}}, m.a1 - m.b1_c2_nos);
            sys.add({{"R1", 1}}, m.a1);
            sys.add({{"R0", 1}, {"R1", 1}}, rsum_b - m.b1_c2_nos);
            sys.add({{"R0", 1}, {"R1", 1}}, rsum_b);
            break;
        default:
            throw std::invalid_argument("region_system: unhandled region id");
    }
    sys.add({{"R1", -1}}, 0.0);
    sys.add({{"R0", -1}}, 0.0);
    return sys;
}

namespace region_detail {

/// Closed-form projection of the scheme-1 systems onto (R1,R2): the split
/// rates enter only through lower bounds, so eliminating them turns
/// max(0, .) sums against the key cap K into a fixed list of half-planes.
inline RatePolygon scheme1_closed_form(const LinearConstraintSystem& sys) {
    const auto& nb = sys.named_bounds;
    auto get = [&](const char* k) { return nb.at(k); };
    const double a1 = get("A1"), a2 = get("A2"), rsa = get("RSUM_A"), rsb = get("RSUM_B"),
                 k = get("K");
    if (k < 0.0) return RatePolygon();  // key budget infeasible
    std::vector<HalfPlane> hp = {
        {1, 0, a1, false}, {0, 1, a2, false}, {1, 1, rsa, false}, {1, 1, rsb, false}};
    if (nb.count("B12")) {  // R11-family (also R3, with splits pinned)
        const double b1 = get("B1"), b2 = get("B2"), b12 = get("B12");
        const bool pinned = nb.count("PINNED") > 0;
        const double cap = pinned ? 0.0 : k;
        hp.push_back({1, 0, a1 - b1 + cap, false});
        hp.push_back({0, 1, a2 - b2 + cap, false});
        hp.push_back({1, 1, (a1 - b1) + (a2 - b2) + cap, false});
        hp.push_back({1, 1, rsa - b12 + cap, false});
        hp.push_back({1, 1, rsb - b12 + cap, false});
    } else if (nb.count("B2C1")) {  // R12: lower bounds R11 >= R1
        const double b = get("B2C1");
        hp.push_back({1, 0, k, false});
        hp.push_back({1, 1, k + a2 - b, false});
        hp.push_back({2, 1, k + rsa - b, false});
        hp.push_back({2, 1, k + rsb - b, false});
    } else {  // R13: lower bounds R21 >= R2
        const double b = get("B1C2");
        hp.push_back({0, 1, k, false});
        hp.push_back({1, 1, k + a1 - b, false});
        hp.push_back({1, 2, k + rsa - b, false});
        hp.push_back({1, 2, k + rsb - b, false});
    }
    return RatePolygon::from_halfplanes(hp);
}

}  // namespace region_detail

/// Closure of the projection of the feasible set onto the rate plane:
/// closed form for the scheme-1 families, generic Fourier-Motzkin otherwise.
/// Degraded systems are already two-dimensional.
inline RatePolygon project_polytope(const LinearConstraintSystem& sys) {
    if (sys.family == RegionFamily::Degraded) return system_to_polygon(sys, "R1", "R0");
    if (sys.family == RegionFamily::Scheme1 && !sys.named_bounds.empty())
        return region_detail::scheme1_closed_form(sys);
    return system_to_polygon(fm_project(sys, {"R1", "R2"}), "R1", "R2");
}

/// Scheme-1 polygon with every eavesdropper constraint dropped (the no-
/// secrecy reduction): only the main-channel bounds remain.
inline RatePolygon scheme1_no_secrecy_polygon(const MiBundle& m) {
    std::vector<HalfPlane> hp = {{1, 0, m.a1, false},
                                 {0, 1, m.a2, false},
                                 {1, 1, m.a12, false},
                                 {1, 1, m.a_all - m.i_vs, false}};
    return RatePolygon::from_halfplanes(hp);
}

}  // namespace sdmawc
