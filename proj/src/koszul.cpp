#include "rephom/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>

#include "rephom/chain_complex.hpp"
#include "rephom/parallel.hpp"
#include "rephom/scalar.hpp"

namespace rephom {

namespace {

using PolyMat = std::vector<std::vector<MultiPoly>>;

PolyMat poly_identity(int n_vars, int n) {
    PolyMat m(n, std::vector<MultiPoly>(n, MultiPoly(n_vars)));
    for (int i = 0; i < n; ++i) m[i][i] = MultiPoly::constant(n_vars, 1);
    return m;
}

PolyMat poly_mul(const PolyMat& a, const PolyMat& b) {
    const int n = static_cast<int>(a.size());
    const int nv = a[0][0].n_vars();
    PolyMat out(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    return out;
}

// Generic matrix of variables var_offset .. var_offset + n^2 - 1, row-major.
PolyMat generic_matrix(int n_vars, int n, int var_offset) {
    PolyMat m(n, std::vector<MultiPoly>(n, MultiPoly(n_vars)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = MultiPoly::variable(n_vars, var_offset + i * n + j);
    return m;
}

MultiPoly poly_det(const PolyMat& a) {
    // Laplace expansion; n <= 3 in practice.
    const int n = static_cast<int>(a.size());
    const int nv = a[0][0].n_vars();
    if (n == 1) return a[0][0];
    MultiPoly det(nv);
    for (int j = 0; j < n; ++j) {
        PolyMat minor(n - 1, std::vector<MultiPoly>(n - 1, MultiPoly(nv)));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = a[r][c];
            }
        }
        MultiPoly term = a[0][j] * poly_det(minor);
        det = det + term * ((j % 2 == 0) ? 1 : -1);
    }
    return det;
}

PolyMat poly_adjugate(const PolyMat& a) {
    const int n = static_cast<int>(a.size());
    const int nv = a[0][0].n_vars();
    PolyMat adj(n, std::vector<MultiPoly>(n, MultiPoly(nv)));
    if (n == 1) {
        adj[0][0] = MultiPoly::constant(nv, 1);
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyMat minor(n - 1, std::vector<MultiPoly>(n - 1, MultiPoly(nv)));
            int rr = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc++] = a[r][c];
                }
                ++rr;
            }
            adj[j][i] = poly_det(minor) * (((i + j) % 2 == 0) ? 1 : -1);
        }
    return adj;
}

std::string var_name(const std::string& base, int n, int flat) {
    if (n == 1) return base;
    return base + std::to_string(flat / n + 1) + std::to_string(flat % n + 1);
}

} // namespace

KoszulModel torus_model(const AlgGroup& g) {
    if (g.factors.size() != 1)
        fail(ErrorCode::Unsupported, "torus Koszul model takes a single group factor");
    const auto fa = g.factors[0];
    KoszulModel m;
    if (fa.kind == AlgGroup::Kind::Torus) {
        const int r = fa.n;
        m.n_even = 2 * r;
        m.n_odd = r;
        m.odd_weight = 2;
        for (int i = 0; i < r; ++i) m.even_names.push_back("x" + std::to_string(i + 1));
        for (int i = 0; i < r; ++i) m.even_names.push_back("y" + std::to_string(i + 1));
        for (int i = 0; i < r; ++i) {
            m.odd_names.push_back("t" + std::to_string(i + 1));
            m.relations.push_back(MultiPoly(m.n_even)); // diagonal matrices commute
        }
        for (int i = 0; i < r; ++i) {
            m.localized_dets.push_back("x" + std::to_string(i + 1));
            m.localized_dets.push_back("y" + std::to_string(i + 1));
        }
        return m;
    }
    const int n = fa.n;
    m.n_even = 2 * n * n;
    m.odd_weight = 2;
    auto X = generic_matrix(m.n_even, n, 0);
    auto Y = generic_matrix(m.n_even, n, n * n);
    for (int k = 0; k < n * n; ++k) m.even_names.push_back(var_name("x", n, k));
    for (int k = 0; k < n * n; ++k) m.even_names.push_back(var_name("y", n, k));
    // commutator [X, Y]
    auto XY = poly_mul(X, Y), YX = poly_mul(Y, X);
    PolyMat comm(n, std::vector<MultiPoly>(n, MultiPoly(m.n_even)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) comm[i][j] = XY[i][j] - YX[i][j];
    if (fa.kind == AlgGroup::Kind::GL) {
        m.n_odd = n * n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                m.odd_names.push_back(var_name("t", n, i * n + j));
                m.relations.push_back(comm[i][j]);
            }
    } else {
        // SL(n): project onto the E_ij (i != j) and H_i coordinates; the
        // commutator is trace-free so nothing is lost.
        m.n_odd = n * n - 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) {
                    m.odd_names.push_back(var_name("t", n, i * n + j));
                    m.relations.push_back(comm[i][j]);
                }
        MultiPoly partial(m.n_even);
        for (int i = 0; i < n - 1; ++i) {
            partial = partial + comm[i][i];
            m.odd_names.push_back("h" + std::to_string(i + 1));
            m.relations.push_back(partial);
        }
    }
    m.localized_dets.push_back("det(X)");
    m.localized_dets.push_back("det(Y)");
    return m;
}

KoszulModel surface_model(const AlgGroup& g, int genus) {
    if (g.factors.size() != 1 || g.factors[0].kind != AlgGroup::Kind::GL)
        fail(ErrorCode::Unsupported, "surface Koszul model is built for GL(n)");
    if (genus < 1) fail(ErrorCode::ConfigError, "genus must be >= 1");
    const int n = g.factors[0].n;
    KoszulModel m;
    m.n_even = 2 * genus * n * n;
    m.n_odd = n * n;
    for (int i = 0; i < genus; ++i) {
        for (int k = 0; k < n * n; ++k)
            m.even_names.push_back(var_name("x", n, k) +
                                   (genus > 1 ? "_" + std::to_string(i + 1) : ""));
        for (int k = 0; k < n * n; ++k)
            m.even_names.push_back(var_name("y", n, k) +
                                   (genus > 1 ? "_" + std::to_string(i + 1) : ""));
    }
    // prod_i X_i Y_i adj(X_i) adj(Y_i) - (prod_i det X_i det Y_i) Id
    PolyMat prod = poly_identity(m.n_even, n);
    MultiPoly dets = MultiPoly::constant(m.n_even, 1);
    for (int i = 0; i < genus; ++i) {
        auto Xi = generic_matrix(m.n_even, n, 2 * i * n * n);
        auto Yi = generic_matrix(m.n_even, n, (2 * i + 1) * n * n);
        prod = poly_mul(poly_mul(poly_mul(poly_mul(prod, Xi), Yi), poly_adjugate(Xi)),
                        poly_adjugate(Yi));
        dets = dets * poly_det(Xi) * poly_det(Yi);
        m.localized_dets.push_back("det(X_" + std::to_string(i + 1) + ")");
        m.localized_dets.push_back("det(Y_" + std::to_string(i + 1) + ")");
    }
    {
        std::ostringstream os;
        os << "prod_i det(X_i)det(Y_i)";
        m.cleared_factor = os.str();
    }
    m.odd_weight = 2 * genus * n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m.odd_names.push_back(var_name("T", n, i * n + j));
            MultiPoly rel = prod[i][j];
            if (i == j) rel = rel - dets;
            m.relations.push_back(rel);
        }
    return m;
}

bool koszul_d_squared_zero(const KoszulModel& m) {
    // d(theta_i theta_j) = rel_i theta_j - rel_j theta_i, so d^2 = rel_i rel_j
    // - rel_j rel_i, which must vanish identically.
    for (int i = 0; i < m.n_odd; ++i)
        for (int j = i + 1; j < m.n_odd; ++j)
            if (!(m.relations[i] * m.relations[j] - m.relations[j] * m.relations[i]).is_zero())
                return false;
    return true;
}

namespace {

// Basis of the homological-degree-a piece: subsets of odd generators of size
// a, each tensored with the monomials filling the remaining internal degree.
std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

GradedBetti truncated_homology(const KoszulModel& m, int max_internal_degree, long long budget) {
    for (int i = 0; i < m.n_odd; ++i) {
        int deg = 0;
        if (!m.relations[i].homogeneous(&deg))
            fail(ErrorCode::ConfigError, "relation " + std::to_string(i) + " is not homogeneous");
        if (!m.relations[i].is_zero() && deg != m.odd_weight)
            fail(ErrorCode::ConfigError,
                 "relation degree does not match the odd-variable weight");
    }

    GradedBetti out;
    out.max_internal_degree = max_internal_degree;

    // Budget check up front, so the error reports the offending dimensions.
    for (int w = 0; w <= max_internal_degree; ++w)
        for (int a = 0; a <= m.n_odd; ++a) {
            const int poly_deg = w - a * m.odd_weight;
            if (poly_deg < 0) continue;
            long long subsets = 1;
            for (int i = 1; i <= a; ++i) subsets = subsets * (m.n_odd - a + i) / i;
            long long dim = subsets * count_monomials(m.n_even, poly_deg);
            if (dim > budget)
                fail(ErrorCode::BudgetExceeded,
                     "graded piece (degree " + std::to_string(a) + ", weight " + std::to_string(w) +
                         ") has dimension " + std::to_string(dim) + " > budget " +
                         std::to_string(budget));
        }

    RationalField Q;
    std::vector<std::map<std::pair<int, int>, int>> partial(
        static_cast<std::size_t>(max_internal_degree) + 1);
    std::vector<std::map<std::pair<int, int>, long long>> partial_dims(
        static_cast<std::size_t>(max_internal_degree) + 1);

    parallel_for_index(static_cast<std::size_t>(max_internal_degree) + 1, [&](std::size_t wi) {
        const int w = static_cast<int>(wi);
        // bases per homological degree
        std::vector<std::vector<std::pair<std::vector<int>, Monomial>>> basis(m.n_odd + 1);
        std::vector<std::map<std::pair<std::vector<int>, Monomial>, int>> index(m.n_odd + 1);
        for (int a = 0; a <= m.n_odd; ++a) {
            const int poly_deg = w - a * m.odd_weight;
            if (poly_deg < 0) continue;
            for (const auto& subset : subsets_of_size(m.n_odd, a))
                for (const auto& mono : monomials_of_degree(m.n_even, poly_deg)) {
                    index[a][{subset, mono}] = static_cast<int>(basis[a].size());
                    basis[a].push_back({subset, mono});
                }
        }
        std::vector<int> ranks(m.n_odd + 2, 0);
        for (int a = 1; a <= m.n_odd; ++a) {
            if (basis[a].empty() || basis[a - 1].empty()) continue;
            SparseMat<mpq_class> d(static_cast<int>(basis[a - 1].size()),
                                   static_cast<int>(basis[a].size()));
            for (std::size_t col = 0; col < basis[a].size(); ++col) {
                const auto& [subset, mono] = basis[a][col];
                for (std::size_t t = 0; t < subset.size(); ++t) {
                    const int gen = subset[t];
                    if (m.relations[gen].is_zero()) continue;
                    std::vector<int> rest;
                    for (std::size_t u = 0; u < subset.size(); ++u)
                        if (u != t) rest.push_back(subset[u]);
                    const long long sign = (t % 2 == 0) ? 1 : -1;
                    for (const auto& [rm, rc] : m.relations[gen].terms()) {
                        Monomial prod{std::vector<int>(m.n_even)};
                        for (int v = 0; v < m.n_even; ++v) prod.exp[v] = mono.exp[v] + rm.exp[v];
                        auto hit = index[a - 1].find({rest, prod});
                        if (hit == index[a - 1].end())
                            fail(ErrorCode::ComplexInvalid, "Koszul differential left the window");
                        auto cur = d.get(Q, hit->second, static_cast<int>(col));
                        d.set(Q, hit->second, static_cast<int>(col),
                              cur + mpq_class(static_cast<long>(sign * rc)));
                    }
                }
            }
            ranks[a] = rank(Q, d);
        }
        for (int a = 0; a <= m.n_odd; ++a) {
            if (basis[a].empty()) continue;
            partial_dims[wi][{a, w}] = static_cast<long long>(basis[a].size());
            const int betti = static_cast<int>(basis[a].size()) - ranks[a] - ranks[a + 1];
            if (betti != 0) partial[wi][{a, w}] = betti;
        }
    });

    for (const auto& block : partial)
        for (const auto& [key, v] : block) out.betti[key] = v;
    for (const auto& block : partial_dims)
        for (const auto& [key, v] : block) out.piece_dims[key] = v;
    return out;
}

std::vector<long long> hr_torus_closed_form(int r, int g) {
    if (r < 1 || g < 1) fail(ErrorCode::ConfigError, "closed form needs r >= 1, g >= 1");
    std::vector<long long> ranks(static_cast<std::size_t>(r) + 1, 0);
    for (int i = 0; i <= r; ++i) {
        long long c = 1;
        for (int k = 1; k <= i; ++k) c = c * (r - i + k) / k;
        ranks[static_cast<std::size_t>(i)] = c;
    }
    return ranks;
}

} // namespace rephom
