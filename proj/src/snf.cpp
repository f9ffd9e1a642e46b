#include "rephom/snf.hpp"

#include <algorithm>
#include <cstdlib>

namespace rephom {

namespace {

bool find_pivot(const std::vector<std::vector<mpz_class>>& a, int t, int& pr, int& pc) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    bool found = false;
    mpz_class best;
    for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c) {
            if (sgn(a[r][c]) == 0) continue;
            mpz_class v = abs(a[r][c]);
            if (!found || v < best) {
                found = true;
                best = v;
                pr = r;
                pc = c;
            }
        }
    return found;
}

} // namespace

std::vector<mpz_class> snf_oracle(std::vector<std::vector<mpz_class>> a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    const int steps = std::min(rows, cols);
    std::vector<mpz_class> divisors;

    for (int t = 0; t < steps; ++t) {
        int pr = 0, pc = 0;
        if (!find_pivot(a, t, pr, pc)) break;
        std::swap(a[t], a[pr]);
        for (int r = 0; r < rows; ++r) std::swap(a[r][t], a[r][pc]);

        for (;;) {
            // Reduce column t by the pivot.
            bool changed = false;
            for (int r = t + 1; r < rows; ++r) {
                if (sgn(a[r][t]) == 0) continue;
                mpz_class quot;
                mpz_fdiv_q(quot.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (int c = t; c < cols; ++c) a[r][c] -= quot * a[t][c];
                if (sgn(a[r][t]) != 0) {
                    // remainder became the smaller pivot
                    std::swap(a[t], a[r]);
                    changed = true;
                }
            }
            if (changed) continue;
            // Reduce row t by the pivot.
            for (int c = t + 1; c < cols; ++c) {
                if (sgn(a[t][c]) == 0) continue;
                mpz_class quot;
                mpz_fdiv_q(quot.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
                for (int r = t; r < rows; ++r) a[r][c] -= quot * a[r][t];
                if (sgn(a[t][c]) != 0) {
                    for (int r = t; r < rows; ++r) std::swap(a[r][t], a[r][c]);
                    changed = true;
                }
            }
            if (!changed) break;
        }

        // Pivot now divides-out its row and column; enforce divisibility of
        // the remaining block by folding offending rows into row t.
        bool restart = false;
        for (int r = t + 1; r < rows && !restart; ++r)
            for (int c = t + 1; c < cols && !restart; ++c)
                if (sgn(a[r][c] % a[t][t]) != 0) {
                    for (int cc = t; cc < cols; ++cc) a[t][cc] += a[r][cc];
                    restart = true;
                }
        if (restart) {
            --t;
            continue;
        }
        divisors.push_back(abs(a[t][t]));
    }
    return divisors;
}

} // namespace rephom
