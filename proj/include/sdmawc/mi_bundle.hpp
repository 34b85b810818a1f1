#pragma once

#include <string>

#include "channel.hpp"
#include "probability.hpp"

namespace sdmawc {

/// Every information term (bits) the rate-region systems consume, computed
/// once from the nine-variable joint. Differences such as rSK are clamped at
/// zero: a nonpositive key rate means no key, not a negative rate.
struct MiBundle {
    // Coding scheme 1 terms
    double a1 = 0;        ///< I(U1;Y|V,U,U2)
    double a2 = 0;        ///< I(U2;Y|V,U,U1)
    double a12 = 0;       ///< I(U1,U2;Y|V,U)
    double a_all = 0;     ///< I(V,U,U1,U2;Y)
    double i_vs = 0;      ///< I(V;S)
    double i_vy = 0;      ///< I(V;Y)
    double i_v_uz = 0;    ///< I(V;U,Z)
    double i_v_zuu1 = 0;  ///< I(V;Z,U,U1)
    double i_v_zuu2 = 0;  ///< I(V;Z,U,U2)
    double b1 = 0;        ///< I(U1;Z|S,U)
    double b2 = 0;        ///< I(U2;Z|S,U)
    double b12 = 0;       ///< I(U1,U2;Z|S,U)
    double b2_c1 = 0;     ///< I(U2;Z|S,U,U1)
    double b1_c2 = 0;     ///< I(U1;Z|S,U,U2)
    // State-free eavesdropper terms (region R3 / D3)
    double b1_nos = 0;     ///< I(U1;Z|U)
    double b2_nos = 0;     ///< I(U2;Z|U)
    double b12_nos = 0;    ///< I(U1,U2;Z|U)
    double b2_c1_nos = 0;  ///< I(U2;Z|U,U1)
    double b1_c2_nos = 0;  ///< I(U1;Z|U,U2)
    // Coding scheme 2 terms
    double s2_a1 = 0;      ///< I(U1;Y|U2)
    double s2_a2 = 0;      ///< I(U2;Y|U1)
    double s2_a12 = 0;     ///< I(U1,U2;Y)
    double s2_b1 = 0;      ///< I(U1;Z|S)
    double s2_b2 = 0;      ///< I(U2;Z|S)
    double s2_b12 = 0;     ///< I(U1,U2;Z|S)
    double s2_b2_c1 = 0;   ///< I(U2;Z|S,U1)
    double s2_b1_c2 = 0;   ///< I(U1;Z|S,U2)
    double h_s_z = 0;      ///< H(S|Z)
    double h_s_zu1 = 0;    ///< H(S|Z,U1)
    double h_s_zu2 = 0;    ///< H(S|Z,U2)
    double h_s_yu1u2 = 0;  ///< H(S|Y,U1,U2)
    // Degraded message set terms
    double r_sk = 0;        ///< max(0, I(V;Y) - I(V;Z,U,U2))
    double d_a1 = 0;        ///< I(U1;Y|U,U2)
    double d_sum = 0;       ///< I(U,U1,U2;Y)
    double h_s_uu1u2y = 0;  ///< H(S|U,U1,U2,Y)
    double h_s_zuu2 = 0;    ///< H(S|Z,U,U2)
};

/// Compute the full bundle. The joint must carry all nine variables
/// (S,V,U,U1,U2,X1,X2,Y,Z).
inline MiBundle mi_bundle(const LabeledJointPmf& joint) {
    for (const auto& name : joint_variable_names())
        if (!joint.has_variable(name))
            throw std::invalid_argument("mi_bundle: joint is missing variable " + name);
    using V = std::vector<std::string>;
    MiBundle m;
    m.a1 = joint.mutual_information({"U1"}, {"Y"}, {"V", "U", "U2"});
    m.a2 = joint.mutual_information({"U2"}, {"Y"}, {"V", "U", "U1"});
    m.a12 = joint.mutual_information({"U1", "U2"}, {"Y"}, {"V", "U"});
    m.a_all = joint.mutual_information({"V", "U", "U1", "U2"}, {"Y"}, {});
    m.i_vs = joint.mutual_information({"V"}, {"S"}, {});
    m.i_vy = joint.mutual_information({"V"}, {"Y"}, {});
    m.i_v_uz = joint.mutual_information({"V"}, {"U", "Z"}, {});
    m.i_v_zuu1 = joint.mutual_information({"V"}, {"Z", "U", "U1"}, {});
    m.i_v_zuu2 = joint.mutual_information({"V"}, {"Z", "U", "U2"}, {});
    m.b1 = joint.mutual_information({"U1"}, {"Z"}, {"S", "U"});
    m.b2 = joint.mutual_information({"U2"}, {"Z"}, {"S", "U"});
    m.b12 = joint.mutual_information({"U1", "U2"}, {"Z"}, {"S", "U"});
    m.b2_c1 = joint.mutual_information({"U2"}, {"Z"}, {"S", "U", "U1"});
    m.b1_c2 = joint.mutual_information({"U1"}, {"Z"}, {"S", "U", "U2"});
    m.b1_nos = joint.mutual_information({"U1"}, {"Z"}, {"U"});
    m.b2_nos = joint.mutual_information({"U2"}, {"Z"}, {"U"});
    m.b12_nos = joint.mutual_information({"U1", "U2"}, {"Z"}, {"U"});
    m.b2_c1_nos = joint.mutual_information({"U2"}, {"Z"}, {"U", "U1"});
    m.b1_c2_nos = joint.mutual_information({"U1"}, {"Z"}, {"U", "U2"});
    m.s2_a1 = joint.mutual_information({"U1"}, {"Y"}, {"U2"});
    m.s2_a2 = joint.mutual_information({"U2"}, {"Y"}, {"U1"});
    m.s2_a12 = joint.mutual_information({"U1", "U2"}, {"Y"}, {});
    m.s2_b1 = joint.mutual_information({"U1"}, {"Z"}, {"S"});
    m.s2_b2 = joint.mutual_information({"U2"}, {"Z"}, {"S"});
    m.s2_b12 = joint.mutual_information({"U1", "U2"}, {"Z"}, {"S"});
    m.s2_b2_c1 = joint.mutual_information({"U2"}, {"Z"}, {"S", "U1"});
    m.s2_b1_c2 = joint.mutual_information({"U1"}, {"Z"}, {"S", "U2"});
    m.h_s_z = joint.entropy(V{"S"}, V{"Z"});
    m.h_s_zu1 = joint.entropy(V{"S"}, V{"Z", "U1"});
    m.h_s_zu2 = joint.entropy(V{"S"}, V{"Z", "U2"});
    m.h_s_yu1u2 = joint.entropy(V{"S"}, V{"Y", "U1", "U2"});
    m.r_sk = std::max(0.0, m.i_vy - m.i_v_zuu2);
    m.d_a1 = joint.mutual_information({"U1"}, {"Y"}, {"U", "U2"});
    m.d_sum = joint.mutual_information({"U", "U1", "U2"}, {"Y"}, {});
    m.h_s_uu1u2y = joint.entropy(V{"S"}, V{"U", "U1", "U2", "Y"});
    m.h_s_zuu2 = joint.entropy(V{"S"}, V{"Z", "U", "U2"});
    return m;
}

}  // namespace sdmawc
