#include "e36/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace e36 {

LatticeMatrix LatticeMatrix::identity(std::size_t n) {
    LatticeMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

LatticeMatrix LatticeMatrix::from_rows(const std::vector<LatticeVector>& rs) {
    if (rs.empty()) return LatticeMatrix(0, 0);
    LatticeMatrix m(rs.size(), rs[0].size());
    for (std::size_t r = 0; r < rs.size(); ++r) {
        if (rs[r].size() != m.cols) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rs[r][c];
    }
    return m;
}

LatticeVector LatticeMatrix::row(std::size_t r) const {
    return LatticeVector(a.begin() + r * cols, a.begin() + (r + 1) * cols);
}

LatticeVector LatticeMatrix::col(std::size_t c) const {
    LatticeVector v(rows);
    for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

LatticeMatrix LatticeMatrix::transposed() const {
    LatticeMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

LatticeMatrix mat_mul(const LatticeMatrix& A, const LatticeMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul shape");
    LatticeMatrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            if (A.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
        }
    return C;
}

LatticeVector mat_vec(const LatticeMatrix& A, const LatticeVector& v) {
    if (A.cols != v.size()) throw std::invalid_argument("mat_vec shape");
    LatticeVector out(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) out[i] += A.at(i, j) * v[j];
    return out;
}

Int dot(const LatticeVector& a, const LatticeVector& b) {
    assert(a.size() == b.size());
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    assert(a.size() == b.size());
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b) {
    assert(a.size() == b.size());
    LatticeVector o(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) o[i] = a[i] - b[i];
    return o;
}

LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b) {
    assert(a.size() == b.size());
    LatticeVector o(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) o[i] = a[i] + b[i];
    return o;
}

LatticeVector vec_neg(const LatticeVector& a) {
    LatticeVector o(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) o[i] = -a[i];
    return o;
}

bool is_zero(const LatticeVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

LatticeVector primitive(const LatticeVector& v) {
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0 || g == 1) return v;
    LatticeVector o(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) o[i] = v[i] / g;
    return o;
}

RationalVector to_rational(const LatticeVector& v) {
    RationalVector o(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) o[i] = Rational(v[i]);
    return o;
}

LatticeVector primitive_direction(const RationalVector& v) {
    Int lcm = 1;
    for (const Rational& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    LatticeVector w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * Rational(lcm);
        assert(s.get_den() == 1);
        w[i] = s.get_num();
    }
    return primitive(w);
}

// Bareiss fraction-free determinant.
Int det(const LatticeMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("det of non-square");
    std::size_t n = A.rows;
    if (n == 0) return 1;
    LatticeMatrix m = A;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;  // exact by Bareiss
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::size_t rank(const LatticeMatrix& A) {
    std::vector<RationalVector> rows(A.rows);
    for (std::size_t r = 0; r < A.rows; ++r) rows[r] = to_rational(A.row(r));
    return rank(rows);
}

HermiteResult hermite_normal_form(const LatticeMatrix& A) {
    HermiteResult res{A, LatticeMatrix::identity(A.rows), 0};
    LatticeMatrix& H = res.H;
    LatticeMatrix& U = res.U;
    std::size_t r = 0;
    auto rowop_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < H.cols; ++c) std::swap(H.at(i, c), H.at(j, c));
        for (std::size_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    };
    auto rowop_addmul = [&](std::size_t i, std::size_t j, const Int& f) {
        // row_i += f * row_j
        for (std::size_t c = 0; c < H.cols; ++c) H.at(i, c) += f * H.at(j, c);
        for (std::size_t c = 0; c < U.cols; ++c) U.at(i, c) += f * U.at(j, c);
    };
    auto rowop_neg = [&](std::size_t i) {
        for (std::size_t c = 0; c < H.cols; ++c) H.at(i, c) = -H.at(i, c);
        for (std::size_t c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    };
    for (std::size_t col = 0; col < H.cols && r < H.rows; ++col) {
        // eliminate below position (r, col) by gcd steps
        while (true) {
            std::size_t piv = H.rows;
            for (std::size_t i = r; i < H.rows; ++i)
                if (H.at(i, col) != 0 && (piv == H.rows || cmp(abs(H.at(i, col)), abs(H.at(piv, col))) < 0))
                    piv = i;
            if (piv == H.rows) break;  // column zero below
            if (piv != r) rowop_swap(r, piv);
            bool clean = true;
            for (std::size_t i = r + 1; i < H.rows; ++i) {
                if (H.at(i, col) != 0) {
                    Int q = H.at(i, col) / H.at(r, col);  // truncated ok, iterate
                    rowop_addmul(i, r, -q);
                    if (H.at(i, col) != 0) clean = false;
                }
            }
            if (clean) break;
        }
        if (H.at(r, col) == 0) continue;
        if (H.at(r, col) < 0) rowop_neg(r);
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H.at(i, col).get_mpz_t(), H.at(r, col).get_mpz_t());
            if (q != 0) rowop_addmul(i, r, -q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

SmithResult smith_normal_form(const LatticeMatrix& A) {
    SmithResult res{A, LatticeMatrix::identity(A.rows), LatticeMatrix::identity(A.cols), {}};
    LatticeMatrix& S = res.S;
    LatticeMatrix& U = res.U;
    LatticeMatrix& V = res.V;
    std::size_t n = std::min(S.rows, S.cols);
    auto row_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
        for (std::size_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < S.rows; ++r) std::swap(S.at(r, i), S.at(r, j));
        for (std::size_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    };
    auto row_addmul = [&](std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t c = 0; c < S.cols; ++c) S.at(i, c) += f * S.at(j, c);
        for (std::size_t c = 0; c < U.cols; ++c) U.at(i, c) += f * U.at(j, c);
    };
    auto col_addmul = [&](std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t r = 0; r < S.rows; ++r) S.at(r, i) += f * S.at(r, j);
        for (std::size_t r = 0; r < V.rows; ++r) V.at(r, i) += f * V.at(r, j);
    };
    auto row_neg = [&](std::size_t i) {
        for (std::size_t c = 0; c < S.cols; ++c) S.at(i, c) = -S.at(i, c);
        for (std::size_t c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
    };
    for (std::size_t k = 0; k < n; ++k) {
        bool redo = true;
        while (redo) {
            redo = false;
            // find nonzero pivot
            std::size_t pr = S.rows, pc = S.cols;
            for (std::size_t i = k; i < S.rows && pr == S.rows; ++i)
                for (std::size_t j = k; j < S.cols; ++j)
                    if (S.at(i, j) != 0) { pr = i; pc = j; break; }
            if (pr == S.rows) { k = n; break; }
            if (pr != k) row_swap(k, pr);
            if (pc != k) col_swap(k, pc);
            bool again = true;
            while (again) {
                again = false;
                for (std::size_t i = k + 1; i < S.rows; ++i)
                    while (S.at(i, k) != 0) {
                        Int q = S.at(i, k) / S.at(k, k);
                        row_addmul(i, k, -q);
                        if (S.at(i, k) != 0) row_swap(i, k);
                    }
                for (std::size_t j = k + 1; j < S.cols; ++j)
                    while (S.at(k, j) != 0) {
                        Int q = S.at(k, j) / S.at(k, k);
                        col_addmul(j, k, -q);
                        if (S.at(k, j) != 0) { col_swap(j, k); again = true; }
                    }
            }
            // divisibility: S[k][k] must divide everything below-right
            for (std::size_t i = k + 1; i < S.rows && !redo; ++i)
                for (std::size_t j = k + 1; j < S.cols && !redo; ++j)
                    if (S.at(i, j) % S.at(k, k) != 0) {
                        row_addmul(k, i, 1);
                        redo = true;
                    }
        }
        if (k == n) break;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (S.at(k, k) < 0) row_neg(k);
    for (std::size_t k = 0; k < n; ++k)
        if (S.at(k, k) != 0) res.divisors.push_back(S.at(k, k));
    return res;
}

std::vector<LatticeVector> kernel_lattice(const LatticeMatrix& M) {
    // HNF of the transpose with witness: U * M^T = H. Rows of U matching
    // zero rows of H form a kernel basis; re-Hermite for the canonical form.
    HermiteResult h = hermite_normal_form(M.transposed());
    std::vector<LatticeVector> ker;
    for (std::size_t r = h.rank; r < h.H.rows; ++r) ker.push_back(h.U.row(r));
    if (ker.empty()) return ker;
    HermiteResult canon = hermite_normal_form(LatticeMatrix::from_rows(ker));
    std::vector<LatticeVector> out;
    for (std::size_t r = 0; r < canon.rank; ++r) out.push_back(canon.H.row(r));
    return out;
}

namespace {

// Gauss-Jordan; returns pivot columns, reduces rows in place.
std::vector<std::size_t> rref(std::vector<RationalVector>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t nr = m.size(), nc = m[0].size(), r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == nr) continue;
        std::swap(m[r], m[piv]);
        Rational f = m[r][c];
        for (auto& x : m[r]) x /= f;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational g = m[i][c];
            for (std::size_t j = 0; j < nc; ++j) m[i][j] -= g * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<RationalVector> solve_rational(const std::vector<RationalVector>& A,
                                             const RationalVector& b) {
    if (A.empty()) return RationalVector{};
    std::size_t nr = A.size(), nc = A[0].size();
    std::vector<RationalVector> m(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        m[r] = A[r];
        m[r].push_back(b[r]);
    }
    auto pivots = rref(m);
    for (std::size_t r = pivots.size(); r < nr; ++r)
        if (m[r][nc] != 0) return std::nullopt;
    if (!pivots.empty() && pivots.back() == nc) return std::nullopt;
    RationalVector x(nc, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][nc];
    return x;
}

std::optional<RationalVector> solve_rational(const LatticeMatrix& A, const LatticeVector& b) {
    std::vector<RationalVector> rows(A.rows);
    for (std::size_t r = 0; r < A.rows; ++r) rows[r] = to_rational(A.row(r));
    return solve_rational(rows, to_rational(b));
}

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& A) {
    if (A.empty()) return {};
    std::vector<RationalVector> m = A;
    auto pivots = rref(m);
    std::size_t nc = A[0].size();
    std::vector<bool> ispiv(nc, false);
    for (auto c : pivots) ispiv[c] = true;
    std::vector<RationalVector> out;
    for (std::size_t fc = 0; fc < nc; ++fc) {
        if (ispiv[fc]) continue;
        RationalVector v(nc, Rational(0));
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][fc];
        out.push_back(std::move(v));
    }
    return out;
}

std::size_t rank(const std::vector<RationalVector>& rows) {
    std::vector<RationalVector> m = rows;
    return rref(m).size();
}

Rational det(const std::vector<RationalVector>& rows) {
    std::size_t n = rows.size();
    if (n == 0) return Rational(1);
    if (rows[0].size() != n) throw std::invalid_argument("det of non-square");
    std::vector<RationalVector> m = rows;
    Rational d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv == n) return Rational(0);
        if (piv != c) { std::swap(m[piv], m[c]); d = -d; }
        d *= m[c][c];
        Rational inv = Rational(1) / m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return d;
}

}  // namespace e36
