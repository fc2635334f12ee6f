#include "nervemorse/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace nervemorse {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const BigInt& bkj = other.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

namespace {

struct SnfState {
    IntegerMatrix a;
    IntegerMatrix u;  // row transform, m x m, unimodular
    IntegerMatrix v;  // column transform, n x n, unimodular

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    // row i -= q * row j
    void add_row(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
    }
    // col i -= q * col j
    void add_col(std::size_t i, std::size_t j, const BigInt& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    }
};

// smallest nonzero entry by absolute value in the trailing submatrix
bool find_pivot(const IntegerMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            const BigInt& e = a.at(i, j);
            if (e == 0) continue;
            BigInt mag = abs(e);
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntegerMatrix& input) {
    const std::size_t m = input.rows(), n = input.cols();
    SnfState s{input, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};

    std::size_t t = 0;
    while (t < m && t < n) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(s.a, t, pi, pj)) break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        for (;;) {
            // clear column t below the pivot; a nonzero remainder becomes the
            // new, smaller pivot and we start over
            bool disturbed = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.a.at(i, t) == 0) continue;
                BigInt q = s.a.at(i, t) / s.a.at(t, t);
                s.add_row(i, t, q);
                if (s.a.at(i, t) != 0) {
                    s.swap_rows(t, i);
                    disturbed = true;
                }
            }
            if (disturbed) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.a.at(t, j) == 0) continue;
                BigInt q = s.a.at(t, j) / s.a.at(t, t);
                s.add_col(j, t, q);
                if (s.a.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    disturbed = true;
                    break;
                }
            }
            if (disturbed) continue;

            // pivot must divide the whole trailing submatrix, or the
            // invariant-factor chain breaks
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (s.a.at(i, j) % s.a.at(t, t) != 0) {
                        s.add_row(t, i, BigInt(-1));  // row t += row i
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) break;
        }

        if (s.a.at(t, t) < 0) s.negate_row(t);
        ++t;
    }

    // self-check: the accumulated elementary transforms really diagonalize the input
    IntegerMatrix product = (s.u * input) * s.v;
    if (product != s.a) throw Error("smith_normal_form self-check failed: U*A*V != D");

    SmithResult out;
    out.rank = t;
    out.invariant_factors.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(s.a.at(i, i));
    return out;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& k_complex, int k) {
    if (k < 1) throw Error("boundary_matrix requires k >= 1");
    const std::vector<Face> rows = k_complex.faces(k - 1);
    const std::vector<Face> cols = k_complex.faces(k);

    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

    IntegerMatrix d(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const std::vector<Vertex>& vs = cols[j].vertices();
        int sign = 1;
        for (std::size_t drop = 0; drop < vs.size(); ++drop) {
            std::vector<Vertex> sub;
            sub.reserve(vs.size() - 1);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (i != drop) sub.push_back(vs[i]);
            d.at(row_index.at(Face(std::move(sub))), j) = sign;
            sign = -sign;
        }
    }
    return d;
}

namespace {

long long to_long(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max())
        throw Error("torsion coefficient exceeds long long range");
    return static_cast<long long>(v);
}

// Rewrite a multiset of integers > 1 as invariant factors d_1 | d_2 | ...
std::vector<long long> invariant_factor_form(std::vector<long long> coeffs) {
    std::map<long long, std::vector<int>> exponents_by_prime;
    for (long long c : coeffs) {
        std::map<long long, int> fac;
        for (long long p = 2; p * p <= c; ++p) {
            while (c % p == 0) {
                fac[p]++;
                c /= p;
            }
        }
        if (c > 1) fac[c]++;
        for (auto& [p, e] : fac) exponents_by_prime[p].push_back(e);
    }
    std::size_t chain_len = 0;
    for (auto& [p, es] : exponents_by_prime) {
        std::sort(es.begin(), es.end(), std::greater<>());
        chain_len = std::max(chain_len, es.size());
    }
    // factors[0] is the largest invariant factor; emit ascending
    std::vector<long long> factors(chain_len, 1);
    for (auto& [p, es] : exponents_by_prime) {
        for (std::size_t i = 0; i < es.size(); ++i) {
            long long pw = 1;
            for (int e = 0; e < es[i]; ++e) pw *= p;
            factors[i] *= pw;
        }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& k_complex) {
    HomologyProfile profile;
    if (k_complex.empty()) return profile;

    const int top = k_complex.dim();
    std::vector<std::size_t> counts = k_complex.face_counts();

    // rank of boundary_k for k = 0..top+1; the degree-0 map is the
    // augmentation to the empty face, rank 1 on any nonempty complex
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    rank[0] = 1;
    std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(top) + 2);
    for (int k = 1; k <= top; ++k) {
        SmithResult snf = smith_normal_form(boundary_matrix(k_complex, k));
        rank[static_cast<std::size_t>(k)] = snf.rank;
        factors[static_cast<std::size_t>(k)] = std::move(snf.invariant_factors);
    }

    for (int k = 0; k <= top; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        long long b = static_cast<long long>(counts[ku]) - static_cast<long long>(rank[ku]) -
                      static_cast<long long>(rank[ku + 1]);
        if (b < 0) throw Error("negative Betti number; boundary ranks inconsistent");
        if (b > 0) profile.betti[k] = b;

        std::vector<long long> tors;
        for (const BigInt& d : factors[ku + 1])
            if (d > 1) tors.push_back(to_long(d));
        if (!tors.empty()) profile.torsion[k] = invariant_factor_form(std::move(tors));
    }
    return profile;
}

HomologyProfile wedge_profile(const std::vector<HomologyProfile>& profiles) {
    HomologyProfile out;
    std::map<int, std::vector<long long>> torsion_pool;
    for (const HomologyProfile& p : profiles) {
        for (const auto& [k, b] : p.betti) out.betti[k] += b;
        for (const auto& [k, ts] : p.torsion)
            torsion_pool[k].insert(torsion_pool[k].end(), ts.begin(), ts.end());
    }
    std::erase_if(out.betti, [](const auto& kv) { return kv.second == 0; });
    for (auto& [k, ts] : torsion_pool) out.torsion[k] = invariant_factor_form(std::move(ts));
    return out;
}

}  // namespace nervemorse
