#include "asq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

#include "asq/eig.hpp"

namespace asq {

namespace {

constexpr double kGroupGapRel = 1e-6;  // eigenvalue-grouping threshold, relative

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa draw; bit-identical across platforms.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct Group {
    std::vector<int> cols;
};

// Mean Rayleigh quotient of A over the group's columns, and the max residual
// of A acting as that scalar.
std::pair<double, double> scalar_action(const CMatrix& a, const CMatrix& q, const Group& g) {
    const int n = a.rows();
    const int m = static_cast<int>(g.cols.size());
    CMatrix y(n, m);
    for (int j = 0; j < m; ++j) {
        const int col = g.cols[j];
        for (int r = 0; r < n; ++r) {
            cplx acc = 0.0;
            for (int c = 0; c < n; ++c) acc += a(r, c) * q(c, col);
            y(r, j) = acc;
        }
    }
    double theta = 0.0;
    for (int j = 0; j < m; ++j) {
        const int col = g.cols[j];
        cplx ip = 0.0;
        for (int r = 0; r < n; ++r) ip += std::conj(q(r, col)) * y(r, j);
        theta += ip.real();
    }
    theta /= m;
    double res = 0.0;
    for (int j = 0; j < m; ++j) {
        const int col = g.cols[j];
        for (int r = 0; r < n; ++r) res = std::max(res, std::abs(y(r, j) - theta * q(r, col)));
    }
    return {theta, res};
}

// Split a group along the eigenvalue gaps of the restricted operator
// Q_g^dag A Q_g, rotating the group's columns into the sub-eigenbasis.
std::vector<Group> split_group(const CMatrix& a, CMatrix& q, const Group& g, double gap) {
    const int n = a.rows();
    const int m = static_cast<int>(g.cols.size());
    CMatrix restricted(m, m);
    CMatrix y(n, m);
    for (int j = 0; j < m; ++j) {
        const int col = g.cols[j];
        for (int r = 0; r < n; ++r) {
            cplx acc = 0.0;
            for (int c = 0; c < n; ++c) acc += a(r, c) * q(c, col);
            y(r, j) = acc;
        }
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            cplx acc = 0.0;
            for (int r = 0; r < n; ++r) acc += std::conj(q(r, g.cols[i])) * y(r, j);
            restricted(i, j) = acc;
        }

    EigResult sub = herm_eig(restricted, Tolerance{1e-8 * std::max(1.0, restricted.max_abs())});

    // q columns of the group <- q_group * sub.vectors
    CMatrix rotated(n, m);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < m; ++j) {
            cplx acc = 0.0;
            for (int i = 0; i < m; ++i) acc += q(r, g.cols[i]) * sub.vectors(i, j);
            rotated(r, j) = acc;
        }
    for (int j = 0; j < m; ++j)
        for (int r = 0; r < n; ++r) q(r, g.cols[j]) = rotated(r, j);

    std::vector<Group> out;
    Group cur;
    cur.cols.push_back(g.cols[0]);
    for (int j = 1; j < m; ++j) {
        if (sub.values[j] - sub.values[j - 1] > gap) {
            out.push_back(cur);
            cur.cols.clear();
        }
        cur.cols.push_back(g.cols[j]);
    }
    out.push_back(cur);
    return out;
}

}  // namespace

SpectralData decompose(const AssociationScheme& s, std::uint64_t seed, Tolerance tol) {
    if (!s.is_symmetric())
        throw Error(ErrorCode::NotSymmetric, "decompose requires a symmetric scheme");

    const int n = s.n;
    const int d = s.d;
    std::vector<CMatrix> adj(d + 1);
    for (int k = 0; k <= d; ++k) adj[k] = adjacency_matrix(s, k);

    std::mt19937_64 rng(seed);
    CMatrix m(n, n);
    for (int k = 0; k <= d; ++k) {
        const double c = uniform01(rng);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) m(x, y) += c * adj[k](x, y);
    }

    EigResult eig = herm_eig(m, Tolerance{1e-10 * std::max(1.0, m.max_abs())});
    CMatrix q = eig.vectors;

    // Initial grouping by eigenvalue gaps of the random combination.
    const double mgap = kGroupGapRel * std::max(1.0, m.max_abs());
    std::vector<Group> groups;
    {
        Group cur;
        cur.cols.push_back(0);
        for (int i = 1; i < n; ++i) {
            if (eig.values[i] - eig.values[i - 1] > mgap) {
                groups.push_back(cur);
                cur.cols.clear();
            }
            cur.cols.push_back(i);
        }
        groups.push_back(cur);
    }

    // Certify scalar action of every A_k on every group; refine on failure.
    const int max_passes = 4 + d;
    bool certified = false;
    for (int pass = 0; pass < max_passes && !certified; ++pass) {
        bool any_fail = false;
        for (int k = 1; k <= d; ++k) {
            const double agap = kGroupGapRel * std::max(1.0, adj[k].max_abs());
            std::vector<Group> next;
            for (const Group& g : groups) {
                if (g.cols.size() == 1) {
                    next.push_back(g);
                    continue;
                }
                auto [theta, res] = scalar_action(adj[k], q, g);
                (void)theta;
                if (res <= tol.eps) {
                    next.push_back(g);
                } else {
                    any_fail = true;
                    auto parts = split_group(adj[k], q, g, agap);
                    for (auto& part : parts) next.push_back(std::move(part));
                }
            }
            groups = std::move(next);
        }
        certified = !any_fail;
    }
    if (!certified)
        throw Error(ErrorCode::DecompositionUnstable, "eigenspace refinement did not converge");

    // Eigenvalue table per group, then merge groups with identical columns
    // (a random combination cannot split a common eigenspace, but certify).
    auto theta_of = [&](const Group& g) {
        std::vector<double> th(d + 1);
        for (int k = 0; k <= d; ++k) th[k] = scalar_action(adj[k], q, g).first;
        return th;
    };
    std::vector<std::vector<double>> thetas;
    thetas.reserve(groups.size());
    for (const Group& g : groups) thetas.push_back(theta_of(g));

    double merge_tol = 0.0;
    for (int k = 0; k <= d; ++k) merge_tol = std::max(merge_tol, kGroupGapRel * adj[k].max_abs());
    std::vector<Group> merged;
    std::vector<std::vector<double>> merged_thetas;
    std::vector<bool> used(groups.size(), false);
    for (size_t a = 0; a < groups.size(); ++a) {
        if (used[a]) continue;
        Group g = groups[a];
        for (size_t b = a + 1; b < groups.size(); ++b) {
            if (used[b]) continue;
            double diff = 0.0;
            for (int k = 0; k <= d; ++k) diff = std::max(diff, std::abs(thetas[a][k] - thetas[b][k]));
            if (diff <= merge_tol) {
                g.cols.insert(g.cols.end(), groups[b].cols.begin(), groups[b].cols.end());
                used[b] = true;
            }
        }
        merged.push_back(g);
        merged_thetas.push_back(thetas[a]);
    }
    groups = std::move(merged);
    thetas = std::move(merged_thetas);

    if (static_cast<int>(groups.size()) != d + 1)
        throw Error(ErrorCode::DecompositionUnstable,
                    "expected " + std::to_string(d + 1) + " eigenspaces, found " +
                        std::to_string(groups.size()));

    // Pin index 0 to the Perron eigenspace (the one containing all-ones).
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    int perron = -1;
    double best_proj = -1.0;
    for (size_t gidx = 0; gidx < groups.size(); ++gidx) {
        double proj = 0.0;
        for (int col : groups[gidx].cols) {
            cplx ip = 0.0;
            for (int r = 0; r < n; ++r) ip += std::conj(q(r, col)) * inv_sqrt_n;
            proj += std::norm(ip);
        }
        if (proj > best_proj) {
            best_proj = proj;
            perron = static_cast<int>(gidx);
        }
    }
    if (perron < 0 || best_proj < 1.0 - 1e-6 || groups[perron].cols.size() != 1)
        throw Error(ErrorCode::DecompositionUnstable, "Perron eigenspace not identified");

    std::vector<int> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (x == perron) return y != perron;
        if (y == perron) return false;
        for (int k = 1; k <= d; ++k) {
            if (thetas[x][k] != thetas[y][k]) return thetas[x][k] > thetas[y][k];
        }
        return false;
    });

    SpectralData sd;
    sd.n = n;
    sd.d = d;
    sd.group_offsets.assign(d + 2, 0);
    sd.eigenbasis = CMatrix(n, n);
    sd.multiplicities.resize(d + 1);
    sd.idempotents.assign(d + 1, CMatrix());
    sd.eigentable.assign(d + 1, std::vector<double>(d + 1, 0.0));

    int row = 0;
    for (int i = 0; i <= d; ++i) {
        const Group& g = groups[order[i]];
        sd.group_offsets[i] = row;
        sd.multiplicities[i] = static_cast<int>(g.cols.size());
        CMatrix e(n, n);
        for (int col : g.cols) {
            for (int r = 0; r < n; ++r) sd.eigenbasis(row, r) = q(r, col);
            ++row;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) e(a, b) += q(a, col) * std::conj(q(b, col));
        }
        sd.idempotents[i] = std::move(e);
        for (int k = 0; k <= d; ++k) sd.eigentable[k][i] = thetas[order[i]][k];
    }
    sd.group_offsets[d + 1] = row;

    return sd;
}

PseudocyclicProfile pseudocyclic_profile(const SpectralData& sd) {
    PseudocyclicProfile prof;
    if (sd.d < 1 || sd.multiplicities[0] != 1) return prof;
    const int t = sd.multiplicities[1];
    for (int i = 1; i <= sd.d; ++i)
        if (sd.multiplicities[i] != t) return prof;
    prof.is_pseudocyclic = true;
    prof.t = t;
    return prof;
}

std::vector<std::vector<int>> eigenvalue_product_classes(const CMatrix& theta, double tol) {
    const int rows = theta.rows();
    const int cols = theta.cols();
    auto same_class = [&](int i, int ip) {
        for (int k = 0; k < rows; ++k)
            for (int l = 0; l < rows; ++l) {
                const cplx a = std::conj(theta(k, i)) * theta(l, i);
                const cplx b = std::conj(theta(k, ip)) * theta(l, ip);
                if (std::abs(a - b) > tol) return false;
            }
        return true;
    };
    std::vector<int> cls(cols, -1);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < cols; ++i) {
        if (cls[i] >= 0) continue;
        const int id = static_cast<int>(classes.size());
        cls[i] = id;
        classes.push_back({i});
        for (int j = i + 1; j < cols; ++j)
            if (cls[j] < 0 && same_class(i, j)) {
                cls[j] = id;
                classes[id].push_back(j);
            }
    }
    return classes;
}

std::vector<std::vector<int>> eigenvalue_products(const SpectralData& sd, Tolerance tol) {
    const int dd = sd.d + 1;
    CMatrix theta(dd, dd);
    for (int k = 0; k < dd; ++k)
        for (int i = 0; i < dd; ++i) theta(k, i) = sd.eigentable[k][i];
    return eigenvalue_product_classes(theta, tol.eps);
}

VerificationReport spectral_invariants(const AssociationScheme& s, const SpectralData& sd,
                                       Tolerance tol) {
    VerificationReport rep;
    const int n = sd.n;
    const int d = sd.d;

    double idem_res = 0.0;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            CMatrix prod = sd.idempotents[i] * sd.idempotents[j];
            if (i == j) prod -= sd.idempotents[i];
            idem_res = std::max(idem_res, prod.max_abs());
        }
    rep.add("spectral_idempotency", idem_res, tol.eps);

    CMatrix sum(n, n);
    for (const CMatrix& e : sd.idempotents) sum += e;
    rep.add("spectral_resolution_of_identity", max_abs_diff(sum, CMatrix::identity(n)), tol.eps);

    double recon_res = 0.0;
    for (int k = 0; k <= d; ++k) {
        CMatrix approx(n, n);
        for (int i = 0; i <= d; ++i) {
            const double th = sd.eigentable[k][i];
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) approx(a, b) += th * sd.idempotents[i](a, b);
        }
        recon_res = std::max(recon_res, max_abs_diff(approx, adjacency_matrix(s, k)));
    }
    rep.add("spectral_reconstruction", recon_res, tol.eps);

    double unit_row = 0.0;
    for (int i = 0; i <= d; ++i) unit_row = std::max(unit_row, std::abs(sd.eigentable[0][i] - 1.0));
    rep.add("spectral_theta_row0_unit", unit_row, tol.eps);

    long long dup_columns = 0;
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            double diff = 0.0;
            for (int k = 0; k <= d; ++k)
                diff = std::max(diff, std::abs(sd.eigentable[k][i] - sd.eigentable[k][j]));
            if (diff <= tol.eps) ++dup_columns;
        }
    rep.add("spectral_columns_distinct", static_cast<double>(dup_columns), 0.0);

    long long mult_sum = 0;
    for (int m : sd.multiplicities) mult_sum += m;
    rep.add("spectral_multiplicities_sum", static_cast<double>(std::llabs(mult_sum - n)), 0.0);
    rep.add("spectral_perron_multiplicity",
            static_cast<double>(std::llabs(sd.multiplicities[0] - 1LL)), 0.0);

    const auto nums = intersection_numbers(s);
    double val_res = 0.0;
    for (int k = 0; k <= d; ++k)
        val_res = std::max(val_res,
                           std::abs(sd.eigentable[k][0] - static_cast<double>(nums.valencies[k])));
    rep.add("spectral_theta_col0_valencies", val_res, tol.eps);

    return rep;
}

}  // namespace asq
