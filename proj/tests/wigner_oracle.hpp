// Test-side oracle for angular momentum coupling, deliberately independent
// of the library's Racah-formula route:
//   - Clebsch-Gordan coefficients from an explicit ladder-operator
//     construction (stretched state + lowering + Gram-Schmidt),
//   - 3j symbols from the CG phase relation,
//   - 6j symbols from the four-3j contraction.
// All quantum numbers doubled. Accuracy ~1e-13 for the small j used in tests.
#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <tuple>
#include <vector>

namespace oracle {

// coefficients <m1 m2 | J M> for fixed (j1, j2): key (J2, M2, m12, m22)
using CgTable = std::map<std::tuple<int, int, int, int>, double>;

inline const CgTable& cg_table(int j1, int j2) {
    static std::map<std::pair<int, int>, CgTable> cache;
    const auto key = std::make_pair(j1, j2);
    if (const auto it = cache.find(key); it != cache.end())
        return it->second;

    CgTable table;
    // basis of the (m1, m2) product space restricted to fixed M = m1 + m2
    const auto basis_for = [&](int M) {
        std::vector<std::pair<int, int>> basis;
        for (int m1 = -j1; m1 <= j1; m1 += 2) {
            const int m2 = M - m1;
            if (std::abs(m2) <= j2)
                basis.emplace_back(m1, m2);
        }
        return basis;
    };
    for (int J = j1 + j2; J >= std::abs(j1 - j2); J -= 2) {
        // build |J, J>: the unit vector in the M = J slice orthogonal to
        // every |J', J> with J' > J (all already recorded in `table`)
        const auto basis = basis_for(J);
        std::vector<double> vec(basis.size(), 0.0);
        if (J == j1 + j2) {
            vec[0] = 1.0; // stretched state |j1, j2>, single basis element
        } else {
            vec[0] = 1.0;
            for (int Jp = j1 + j2; Jp > J; Jp -= 2) {
                double dot = 0;
                for (std::size_t i = 0; i < basis.size(); ++i)
                    if (const auto it = table.find({Jp, J, basis[i].first, basis[i].second});
                        it != table.end())
                        dot += vec[i] * it->second;
                for (std::size_t i = 0; i < basis.size(); ++i)
                    if (const auto it = table.find({Jp, J, basis[i].first, basis[i].second});
                        it != table.end())
                        vec[i] -= dot * it->second;
            }
            double norm = 0;
            for (double x : vec)
                norm += x * x;
            norm = std::sqrt(norm);
            for (double& x : vec)
                x /= norm;
            // Condon-Shortley: the coefficient at m1 = j1 (last basis
            // element, m1 ascending) is positive
            if (vec.back() < 0)
                for (double& x : vec)
                    x = -x;
        }

        // record and lower all the way down to M = -J
        std::map<int, std::vector<double>> states; // M2 -> vector (this J only)
        states[J] = vec;
        for (int M = J; M > -J; M -= 2) {
            const auto from = basis_for(M);
            const auto to = basis_for(M - 2);
            const auto& src = states[M];
            std::vector<double> dst(to.size(), 0.0);
            // J- = J1- + J2-; J-|j m> = sqrt(j(j+1) - m(m-1)) |j, m-1>
            const auto lower_amp = [](int j, int m) {
                return std::sqrt(0.25 * (j * (j + 2.0) - m * (m - 2.0)));
            };
            for (std::size_t i = 0; i < from.size(); ++i) {
                const auto [m1, m2] = from[i];
                if (src[i] == 0.0)
                    continue;
                if (m1 - 2 >= -j1) {
                    const auto target = std::make_pair(m1 - 2, m2);
                    for (std::size_t k = 0; k < to.size(); ++k)
                        if (to[k] == target)
                            dst[k] += src[i] * lower_amp(j1, m1);
                }
                if (m2 - 2 >= -j2) {
                    const auto target = std::make_pair(m1, m2 - 2);
                    for (std::size_t k = 0; k < to.size(); ++k)
                        if (to[k] == target)
                            dst[k] += src[i] * lower_amp(j2, m2);
                }
            }
            const double amp = std::sqrt(0.25 * (J * (J + 2.0) - M * (M - 2.0)));
            for (double& x : dst)
                x /= amp;
            states[M - 2] = dst;
        }
        for (const auto& [M, state] : states) {
            const auto b = basis_for(M);
            for (std::size_t i = 0; i < b.size(); ++i)
                table[{J, M, b[i].first, b[i].second}] = state[i];
        }
    }
    return cache.emplace(key, std::move(table)).first->second;
}

inline double cg(int j1, int m1, int j2, int m2, int J, int M) {
    if (m1 + m2 != M || std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(M) > J)
        return 0.0;
    if (J > j1 + j2 || J < std::abs(j1 - j2) || (j1 + j2 + J) % 2 != 0)
        return 0.0;
    const auto& table = cg_table(j1, j2);
    const auto it = table.find({J, M, m1, m2});
    return it == table.end() ? 0.0 : it->second;
}

inline double threej(int j1, int j2, int j3, int m1, int m2, int m3) {
    // (j1 j2 j3; m1 m2 m3) = (-1)^(j1-j2-m3) <j1 m1 j2 m2 | j3, -m3> / sqrt(2 j3 + 1)
    if (m1 + m2 + m3 != 0)
        return 0.0;
    const int e2 = j1 - j2 - m3;
    if (e2 % 2 != 0)
        return 0.0;
    const int sign = ((e2 / 2) % 2 + 2) % 2 == 0 ? 1 : -1;
    return sign * cg(j1, m1, j2, m2, j3, -m3) / std::sqrt(j3 + 1.0);
}

inline double sixj(int j1, int j2, int j3, int j4, int j5, int j6) {
    // contraction of four 3j symbols over all projections
    double sum = 0.0;
    for (int m1 = -j1; m1 <= j1; m1 += 2)
        for (int m2 = -j2; m2 <= j2; m2 += 2)
            for (int m3 = -j3; m3 <= j3; m3 += 2) {
                const double t1 = threej(j1, j2, j3, -m1, -m2, -m3);
                if (t1 == 0.0)
                    continue;
                for (int m4 = -j4; m4 <= j4; m4 += 2)
                    for (int m5 = -j5; m5 <= j5; m5 += 2)
                        for (int m6 = -j6; m6 <= j6; m6 += 2) {
                            const double t2 = threej(j1, j5, j6, m1, -m5, m6);
                            if (t2 == 0.0)
                                continue;
                            const double t3 = threej(j4, j2, j6, m4, m2, -m6);
                            if (t3 == 0.0)
                                continue;
                            const double t4 = threej(j4, j5, j3, -m4, m5, m3);
                            if (t4 == 0.0)
                                continue;
                            const int e2 = (j1 - m1) + (j2 - m2) + (j3 - m3) + (j4 - m4) +
                                           (j5 - m5) + (j6 - m6);
                            const int sign = ((e2 / 2) % 2 + 2) % 2 == 0 ? 1 : -1;
                            sum += sign * t1 * t2 * t3 * t4;
                        }
            }
    return sum;
}

} // namespace oracle
