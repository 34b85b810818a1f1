#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "probability.hpp"

namespace sdmawc {

/// State distribution P_S plus memoryless transition kernel
/// W : X1 x X2 x S -> Y x Z.
struct ChannelModel {
    int card_x1 = 0, card_x2 = 0, card_s = 0, card_y = 0, card_z = 0;
    std::vector<double> state_dist;  // [s]
    std::vector<double> kernel;      // [x1][x2][s][y][z]

    double w(int x1, int x2, int s, int y, int z) const {
        return kernel[(((static_cast<std::size_t>(x1) * card_x2 + x2) * card_s + s) * card_y + y) *
                          card_z +
                      z];
    }

    void validate() const {
        if (card_x1 < 1 || card_x2 < 1 || card_s < 1 || card_y < 1 || card_z < 1)
            throw std::invalid_argument("ChannelModel: alphabet sizes must be >= 1");
        if (state_dist.size() != static_cast<std::size_t>(card_s))
            throw std::invalid_argument("ChannelModel: state_dist length mismatch");
        double ps = 0.0;
        for (double p : state_dist) {
            if (p < 0.0) throw std::invalid_argument("ChannelModel: negative state probability");
            ps += p;
        }
        if (std::abs(ps - 1.0) > kNormalizationTol)
            throw std::invalid_argument("ChannelModel: state_dist does not sum to 1");
        const std::size_t expect = static_cast<std::size_t>(card_x1) * card_x2 * card_s * card_y *
                                   static_cast<std::size_t>(card_z);
        if (kernel.size() != expect)
            throw std::invalid_argument("ChannelModel: kernel shape mismatch");
        for (int x1 = 0; x1 < card_x1; ++x1)
            for (int x2 = 0; x2 < card_x2; ++x2)
                for (int s = 0; s < card_s; ++s) {
                    double total = 0.0;
                    for (int y = 0; y < card_y; ++y)
                        for (int z = 0; z < card_z; ++z) {
                            const double p = w(x1, x2, s, y, z);
                            if (p < 0.0)
                                throw std::invalid_argument("ChannelModel: negative kernel entry");
                            total += p;
                        }
                    if (std::abs(total - 1.0) > kNormalizationTol)
                        throw std::invalid_argument("ChannelModel: kernel slice not normalized");
                }
    }
};

/// The auxiliary factorization P_{V|S} P_U P_{U1|U} P_{U2|U}
/// P_{X1|U,U1,S} P_{X2|U,U2,S}.
struct AuxChain {
    int card_v = 1, card_u = 1, card_u1 = 1, card_u2 = 1;
    std::vector<double> p_v_given_s;    // [s][v]
    std::vector<double> p_u;            // [u]
    std::vector<double> p_u1_given_u;   // [u][u1]
    std::vector<double> p_u2_given_u;   // [u][u2]
    std::vector<double> p_x1;           // [u][u1][s][x1]
    std::vector<double> p_x2;           // [u][u2][s][x2]

    double pv(int s, int v) const { return p_v_given_s[static_cast<std::size_t>(s) * card_v + v]; }
    double pu1(int u, int u1) const {
        return p_u1_given_u[static_cast<std::size_t>(u) * card_u1 + u1];
    }
    double pu2(int u, int u2) const {
        return p_u2_given_u[static_cast<std::size_t>(u) * card_u2 + u2];
    }
    double px1(int u, int u1, int s, int x1, int card_s, int card_x1) const {
        return p_x1[((static_cast<std::size_t>(u) * card_u1 + u1) * card_s + s) * card_x1 + x1];
    }
    double px2(int u, int u2, int s, int x2, int card_s, int card_x2) const {
        return p_x2[((static_cast<std::size_t>(u) * card_u2 + u2) * card_s + s) * card_x2 + x2];
    }

    void validate(const ChannelModel& ch) const {
        auto check_kernel = [](const std::vector<double>& w, std::size_t slices,
                               std::size_t targets, const char* what) {
            if (w.size() != slices * targets)
                throw std::invalid_argument(std::string(what) + ": shape mismatch");
            for (std::size_t s = 0; s < slices; ++s) {
                double total = 0.0;
                for (std::size_t t = 0; t < targets; ++t) {
                    if (w[s * targets + t] < 0.0)
                        throw std::invalid_argument(std::string(what) + ": negative entry");
                    total += w[s * targets + t];
                }
                if (std::abs(total - 1.0) > kNormalizationTol)
                    throw std::invalid_argument(std::string(what) + ": slice not normalized");
            }
        };
        if (card_v < 1 || card_u < 1 || card_u1 < 1 || card_u2 < 1)
            throw std::invalid_argument("AuxChain: cardinalities must be >= 1");
        check_kernel(p_v_given_s, static_cast<std::size_t>(ch.card_s), card_v, "p_v_given_s");
        check_kernel(p_u, 1, card_u, "p_u");
        check_kernel(p_u1_given_u, card_u, card_u1, "p_u1_given_u");
        check_kernel(p_u2_given_u, card_u, card_u2, "p_u2_given_u");
        check_kernel(p_x1, static_cast<std::size_t>(card_u) * card_u1 * ch.card_s, ch.card_x1,
                     "p_x1_given_u_u1_s");
        check_kernel(p_x2, static_cast<std::size_t>(card_u) * card_u2 * ch.card_s, ch.card_x2,
                     "p_x2_given_u_u2_s");
    }

    /// P_V(v) = sum_s P_S(s) P_{V|S}(v|s).
    std::vector<double> marginal_v(const ChannelModel& ch) const {
        std::vector<double> out(static_cast<std::size_t>(card_v), 0.0);
        for (int s = 0; s < ch.card_s; ++s)
            for (int v = 0; v < card_v; ++v) out[v] += ch.state_dist[s] * pv(s, v);
        return out;
    }
};

/// Names and order of the full nine-variable joint.
inline const std::vector<std::string>& joint_variable_names() {
    static const std::vector<std::string> names = {"S",  "V",  "U", "U1", "U2",
                                                   "X1", "X2", "Y", "Z"};
    return names;
}

/// Joint over (S,V,U,U1,U2,X1,X2,Y,Z) implied by the channel and the
/// auxiliary factorization.
inline LabeledJointPmf assemble_joint(const ChannelModel& ch, const AuxChain& aux) {
    ch.validate();
    aux.validate(ch);
    const int cs = ch.card_s, cv = aux.card_v, cu = aux.card_u, cu1 = aux.card_u1,
              cu2 = aux.card_u2, cx1 = ch.card_x1, cx2 = ch.card_x2, cy = ch.card_y,
              cz = ch.card_z;
    std::vector<Alphabet> vars = {{"S", cs},   {"V", cv},   {"U", cu},
                                  {"U1", cu1}, {"U2", cu2}, {"X1", cx1},
                                  {"X2", cx2}, {"Y", cy},   {"Z", cz}};
    std::vector<double> w;
    w.reserve(static_cast<std::size_t>(cs) * cv * cu * cu1 * cu2 * cx1 * cx2 * cy * cz);
    for (int s = 0; s < cs; ++s)
        for (int v = 0; v < cv; ++v)
            for (int u = 0; u < cu; ++u)
                for (int u1 = 0; u1 < cu1; ++u1)
                    for (int u2 = 0; u2 < cu2; ++u2) {
                        const double base = ch.state_dist[s] * aux.pv(s, v) * aux.p_u[u] *
                                            aux.pu1(u, u1) * aux.pu2(u, u2);
                        for (int x1 = 0; x1 < cx1; ++x1) {
                            const double b1 = base * aux.px1(u, u1, s, x1, cs, cx1);
                            for (int x2 = 0; x2 < cx2; ++x2) {
                                const double b2 = b1 * aux.px2(u, u2, s, x2, cs, cx2);
                                for (int y = 0; y < cy; ++y)
                                    for (int z = 0; z < cz; ++z)
                                        w.push_back(b2 * ch.w(x1, x2, s, y, z));
                            }
                        }
                    }
    return LabeledJointPmf(std::move(vars), std::move(w));
}

/// Per-symbol eavesdropper kernel P(z | u,u1,u2,s) with the channel inputs
/// marginalized out. Used by the exact leakage enumeration.
inline std::vector<double> eavesdropper_symbol_kernel(const ChannelModel& ch,
                                                      const AuxChain& aux) {
    const int cs = ch.card_s, cu = aux.card_u, cu1 = aux.card_u1, cu2 = aux.card_u2,
              cz = ch.card_z;
    std::vector<double> out(static_cast<std::size_t>(cu) * cu1 * cu2 * cs * cz, 0.0);
    for (int u = 0; u < cu; ++u)
        for (int u1 = 0; u1 < cu1; ++u1)
            for (int u2 = 0; u2 < cu2; ++u2)
                for (int s = 0; s < cs; ++s)
                    for (int x1 = 0; x1 < ch.card_x1; ++x1)
                        for (int x2 = 0; x2 < ch.card_x2; ++x2) {
                            const double px = aux.px1(u, u1, s, x1, cs, ch.card_x1) *
                                              aux.px2(u, u2, s, x2, cs, ch.card_x2);
                            if (px == 0.0) continue;
                            for (int y = 0; y < ch.card_y; ++y)
                                for (int z = 0; z < cz; ++z)
                                    out[(((static_cast<std::size_t>(u) * cu1 + u1) * cu2 + u2) *
                                             cs +
                                         s) *
                                            cz +
                                        z] += px * ch.w(x1, x2, s, y, z);
                        }
    return out;
}

}  // namespace sdmawc
