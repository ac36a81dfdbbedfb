#include "toric/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace toric {

IVec ivec(std::initializer_list<long> xs) {
    IVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const IVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IVec scale(const Int& s, const IVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

IVec neg(const IVec& a) { return scale(Int(-1), a); }

Int gcd_of(const IVec& a) {
    Int g = 0;
    for (const auto& x : a) g = gcd(g, abs(x));
    return g;
}

IVec primitive(const IVec& a) {
    Int g = gcd_of(a);
    if (g == 0) return a;
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

bool is_zero(const IVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

QVec to_q(const IVec& a) {
    QVec r;
    r.reserve(a.size());
    for (const auto& x : a) r.emplace_back(x);
    return r;
}

IVec primitive_of(const QVec& a) {
    Int l = 1;
    for (const auto& x : a) l = lcm(l, Int(denominator(x)));
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = numerator(a[i]) * (l / denominator(a[i]));
    return primitive(r);
}

bool is_integral(const QVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return denominator(x) == 1; });
}

IVec to_int(const QVec& a) {
    IVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (denominator(a[i]) != 1) throw Error("NotIntegral", "vector has fractional entries");
        r[i] = numerator(a[i]);
    }
    return r;
}

std::string to_string(const IVec& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ')';
    return os.str();
}

std::string to_string(const Rat& q) {
    std::ostringstream os;
    os << numerator(q) << '/' << denominator(q);
    return os.str();
}

IMat IMat::identity(std::size_t n) {
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IMat IMat::from_rows(const std::vector<IVec>& rs) {
    IMat m(rs.size(), rs.empty() ? 0 : rs[0].size());
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
    return m;
}

IVec IMat::row(std::size_t i) const {
    return IVec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

IMat operator*(const IMat& x, const IMat& y) {
    IMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

IMat transpose(const IMat& m) {
    IMat r(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
    return r;
}

// Bareiss fraction-free elimination
Int determinant(const IMat& m0) {
    if (m0.rows != m0.cols) throw Error("DimensionMismatch", "determinant of a non-square matrix");
    std::size_t n = m0.rows;
    if (n == 0) return 1;
    IMat m = m0;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

namespace {

// reduced row echelon form in place, returns pivot columns
std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> piv;
    if (m.empty()) return piv;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

std::size_t rank(const QMat& m) {
    QMat c = m;
    return rref(c).size();
}

std::size_t rank(const std::vector<IVec>& rows) { return rank(to_q(rows)); }

QMat to_q(const std::vector<IVec>& rows) {
    QMat r;
    for (const auto& v : rows) r.push_back(to_q(v));
    return r;
}

std::vector<QVec> nullspace(const QMat& m) {
    std::vector<QVec> out;
    if (m.empty()) return out;
    QMat c = m;
    auto piv = rref(c);
    std::size_t cols = m[0].size();
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        QVec x(cols, Rat(0));
        x[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = -c[i][f];
        out.push_back(x);
    }
    return out;
}

QMat inverse(const QMat& m) {
    std::size_t n = m.size();
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error("Singular", "matrix is not invertible");
    QMat r(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

namespace {

void swap_rows(IMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}

// row_a += f * row_b
void axpy_row(IMat& m, std::size_t a, const Int& f, std::size_t b) {
    for (std::size_t j = 0; j < m.cols; ++j) m(a, j) += f * m(b, j);
}

void swap_cols(IMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}

void axpy_col(IMat& m, std::size_t a, const Int& f, std::size_t b) {
    for (std::size_t i = 0; i < m.rows; ++i) m(i, a) += f * m(i, b);
}

// floor division for the reduction step
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

}  // namespace

HNFResult hermite_normal_form(const IMat& M) {
    IMat H = M, U = IMat::identity(M.rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < H.cols && r < H.rows; ++c) {
        while (true) {
            std::size_t best = H.rows;
            for (std::size_t i = r; i < H.rows; ++i)
                if (H(i, c) != 0 && (best == H.rows || abs(H(i, c)) < abs(H(best, c)))) best = i;
            if (best == H.rows) break;
            swap_rows(H, r, best);
            swap_rows(U, r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < H.rows; ++i) {
                if (H(i, c) == 0) continue;
                Int q = H(i, c) / H(r, c);
                axpy_row(H, i, -q, r);
                axpy_row(U, i, -q, r);
                if (H(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (r >= H.rows || H(r, c) == 0) continue;
        if (H(r, c) < 0) {
            axpy_row(H, r, Int(-2), r);
            axpy_row(U, r, Int(-2), r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(H(i, c), H(r, c));
            if (q != 0) {
                axpy_row(H, i, -q, r);
                axpy_row(U, i, -q, r);
            }
        }
        ++r;
    }
    return {H, U};
}

bool is_hermite_normal_form(const IMat& H) {
    std::size_t lead_prev = 0;
    bool seen_zero = false, first = true;
    for (std::size_t i = 0; i < H.rows; ++i) {
        std::size_t lead = H.cols;
        for (std::size_t j = 0; j < H.cols; ++j)
            if (H(i, j) != 0) {
                lead = j;
                break;
            }
        if (lead == H.cols) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) return false;
        if (!first && lead <= lead_prev) return false;
        if (H(i, lead) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (H(k, lead) < 0 || H(k, lead) >= H(i, lead)) return false;
        first = false;
        lead_prev = lead;
    }
    return true;
}

SNFResult smith_normal_form(const IMat& M) {
    IMat S = M, U = IMat::identity(M.rows), V = IMat::identity(M.cols);
    std::size_t n = std::min(S.rows, S.cols);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            std::size_t bi = S.rows, bj = S.cols;
            for (std::size_t i = t; i < S.rows; ++i)
                for (std::size_t j = t; j < S.cols; ++j)
                    if (S(i, j) != 0 && (bi == S.rows || abs(S(i, j)) < abs(S(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == S.rows) break;
            swap_rows(S, t, bi);
            swap_rows(U, t, bi);
            swap_cols(S, t, bj);
            swap_cols(V, t, bj);
            bool done = true;
            for (std::size_t i = t + 1; i < S.rows; ++i) {
                if (S(i, t) == 0) continue;
                Int q = S(i, t) / S(t, t);
                axpy_row(S, i, -q, t);
                axpy_row(U, i, -q, t);
                if (S(i, t) != 0) done = false;
            }
            for (std::size_t j = t + 1; j < S.cols; ++j) {
                if (S(t, j) == 0) continue;
                Int q = S(t, j) / S(t, t);
                axpy_col(S, j, -q, t);
                axpy_col(V, j, -q, t);
                if (S(t, j) != 0) done = false;
            }
            if (!done) continue;
            // divisibility of the remaining block
            std::size_t bad = S.rows;
            for (std::size_t i = t + 1; i < S.rows && bad == S.rows; ++i)
                for (std::size_t j = t + 1; j < S.cols; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == S.rows) break;
            axpy_row(S, t, Int(1), bad);
            axpy_row(U, t, Int(1), bad);
        }
        if (S(t, t) < 0) {
            axpy_row(S, t, Int(-2), t);
            axpy_row(U, t, Int(-2), t);
        }
    }
    return {S, U, V};
}

Cone make_cone(std::vector<IVec> gens) {
    if (gens.empty()) throw Error("EmptyCone", "cone needs generators");
    Cone c;
    c.ambient_dim = gens[0].size();
    for (auto& g : gens) {
        if (g.size() != c.ambient_dim) throw Error("DimensionMismatch", "generator length");
        if (is_zero(g)) throw Error("ZeroGenerator", "cone generator is zero");
        c.generators.push_back(primitive(g));
    }
    for (std::size_t i = 0; i < c.generators.size(); ++i)
        for (std::size_t j = i + 1; j < c.generators.size(); ++j)
            if (c.generators[i] == c.generators[j])
                throw Error("ParallelGenerators", "cone generators must be pairwise non-parallel");
    return c;
}

bool is_smooth_cone(const Cone& c) {
    if (rank(c.generators) != c.generators.size())
        throw Error("NonSimplicial", "generator count differs from cone dimension");
    IMat G = IMat::from_rows(c.generators);
    auto snf = smith_normal_form(G);
    for (std::size_t i = 0; i < G.rows; ++i)
        if (abs(snf.S(i, i)) != 1) return false;
    return true;
}

bool operator<(const LatticeNormalForm& a, const LatticeNormalForm& b) {
    if (a.denom != b.denom) return a.denom < b.denom;
    if (a.lattice_hnf != b.lattice_hnf) return a.lattice_hnf < b.lattice_hnf;
    return a.points < b.points;
}

namespace {

template <class F>
void for_each_tuple(std::size_t m, std::size_t len, F&& f) {
    std::vector<std::size_t> idx;
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self) -> void {
        if (idx.size() == len) {
            f(idx);
            return;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (used[i]) continue;
            used[i] = true;
            idx.push_back(i);
            self(self);
            idx.pop_back();
            used[i] = false;
        }
    };
    rec(rec);
}

// columns p[idx[k]] - p[idx[0]], k = 1..n; empty if singular
QMat tuple_basis_inverse(const std::vector<IVec>& pts, const std::vector<std::size_t>& idx) {
    std::size_t n = pts[0].size();
    QMat B(n, QVec(n));
    for (std::size_t k = 1; k <= n; ++k) {
        IVec d = sub(pts[idx[k]], pts[idx[0]]);
        for (std::size_t i = 0; i < n; ++i) B[i][k - 1] = d[i];
    }
    if (rank(B) < n) return {};
    return inverse(B);
}

std::size_t check_full_dim(const std::vector<IVec>& P) {
    if (P.empty()) throw Error("EmptyInput", "empty vertex set");
    std::size_t n = P[0].size();
    std::vector<IVec> diffs;
    for (const auto& p : P) diffs.push_back(sub(p, P[0]));
    if (rank(diffs) != n) throw Error("NotFullDimensional", "vertex set is not full-dimensional");
    return n;
}

}  // namespace

LatticeNormalForm lattice_normal_form(const std::vector<IVec>& P) {
    std::size_t n = check_full_dim(P);
    bool have = false;
    LatticeNormalForm best;
    for_each_tuple(P.size(), n + 1, [&](const std::vector<std::size_t>& idx) {
        QMat Bi = tuple_basis_inverse(P, idx);
        if (Bi.empty()) return;
        LatticeNormalForm nf;
        nf.denom = 1;
        for (const auto& row : Bi)
            for (const auto& x : row) nf.denom = lcm(nf.denom, Int(denominator(x)));
        // generators of the lattice B^{-1} Z^n are the columns of B^{-1}
        IMat G(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                Rat v = Bi[i][j] * Rat(nf.denom);
                G(j, i) = numerator(v);
            }
        IMat H = hermite_normal_form(G).H;
        for (std::size_t i = 0; i < n; ++i) nf.lattice_hnf.push_back(H.row(i));
        for (const auto& p : P) {
            IVec d = sub(p, P[idx[0]]);
            IVec y(n);
            for (std::size_t i = 0; i < n; ++i) {
                Rat s = 0;
                for (std::size_t j = 0; j < n; ++j) s += Bi[i][j] * Rat(d[j]);
                s *= Rat(nf.denom);
                y[i] = numerator(s);
            }
            nf.points.push_back(y);
        }
        std::sort(nf.points.begin(), nf.points.end());
        if (!have || nf < best) {
            best = std::move(nf);
            have = true;
        }
    });
    return best;
}

bool unimodular_equivalent(const std::vector<IVec>& P, const std::vector<IVec>& Q) {
    if (P.empty() || Q.empty() || P[0].size() != Q[0].size())
        throw Error("DimensionMismatch", "vertex sets live in different dimensions");
    if (P.size() != Q.size()) return false;
    return lattice_normal_form(P) == lattice_normal_form(Q);
}

bool find_unimodular_map(const std::vector<IVec>& P, const std::vector<IVec>& Q, IMat& A, IVec& t) {
    if (P.empty() || Q.empty() || P[0].size() != Q[0].size())
        throw Error("DimensionMismatch", "vertex sets live in different dimensions");
    if (P.size() != Q.size()) return false;
    std::size_t n = check_full_dim(P);
    std::vector<std::size_t> base;
    for_each_tuple(P.size(), n + 1, [&](const std::vector<std::size_t>& idx) {
        if (base.empty() && !tuple_basis_inverse(P, idx).empty()) base = idx;
    });
    QMat BPi = tuple_basis_inverse(P, base);
    std::vector<IVec> Qs = Q;
    std::sort(Qs.begin(), Qs.end());
    bool found = false;
    for_each_tuple(Q.size(), n + 1, [&](const std::vector<std::size_t>& idx) {
        if (found) return;
        QMat BQ(n, QVec(n));
        for (std::size_t k = 1; k <= n; ++k) {
            IVec d = sub(Q[idx[k]], Q[idx[0]]);
            for (std::size_t i = 0; i < n; ++i) BQ[i][k - 1] = d[i];
        }
        IMat Am(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rat s = 0;
                for (std::size_t l = 0; l < n; ++l) s += BQ[i][l] * BPi[l][j];
                if (denominator(s) != 1) return;
                Am(i, j) = numerator(s);
            }
        if (abs(determinant(Am)) != 1) return;
        IVec tv(n);
        for (std::size_t i = 0; i < n; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < n; ++j) s += Am(i, j) * P[base[0]][j];
            tv[i] = Q[idx[0]][i] - s;
        }
        std::vector<IVec> img;
        for (const auto& p : P) {
            IVec q(n);
            for (std::size_t i = 0; i < n; ++i) {
                Int s = tv[i];
                for (std::size_t j = 0; j < n; ++j) s += Am(i, j) * p[j];
                q[i] = s;
            }
            img.push_back(q);
        }
        std::sort(img.begin(), img.end());
        if (img == Qs) {
            A = Am;
            t = tv;
            found = true;
        }
    });
    return found;
}

}  // namespace toric
