#ifndef AALPHA_MATRIX_HPP
#define AALPHA_MATRIX_HPP

// Dense real symmetric matrices and the small set of operations the library
// is built on: a cyclic Jacobi eigensolver, the block partial transpose, and
// traces of low matrix powers. Everything here works at the n <= ~100 scale;
// robustness and determinism are the contract, not speed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace aalpha {

inline constexpr double kPsdTol = 1e-9;

class SymMatrix {
public:
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows) {
        const std::size_t n = rows.size();
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) {
                throw std::invalid_argument("SymMatrix::from_rows: ragged rows");
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (!std::isfinite(rows[i][j])) {
                    throw std::invalid_argument("SymMatrix::from_rows: non-finite entry");
                }
                if (rows[j][i] != rows[i][j]) {
                    throw std::invalid_argument("SymMatrix::from_rows: not symmetric");
                }
                m.a_[i * n + j] = rows[i][j];
            }
        }
        return m;
    }

    static SymMatrix identity(std::size_t n) {
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    // Writes both (i,j) and (j,i); symmetry holds by construction.
    void set(std::size_t i, std::size_t j, double v) {
        if (i >= n_ || j >= n_) throw std::out_of_range("SymMatrix::set: index");
        if (!std::isfinite(v)) throw std::invalid_argument("SymMatrix::set: non-finite value");
        a_[i * n_ + j] = v;
        a_[j * n_ + i] = v;
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += a_[i * n_ + i];
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (double x : a_) s += x * x;
        return std::sqrt(s);
    }

    friend bool operator==(const SymMatrix& x, const SymMatrix& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

private:
    std::size_t n_;
    std::vector<double> a_;
};

struct Spectrum {
    std::vector<double> values;  // ascending

    double min() const { return values.front(); }
    double max() const { return values.back(); }
};

// Cyclic Jacobi rotations, swept until the off-diagonal norm drops below
// 1e-12 * ||m||_F. Deterministic: fixed sweep order, no pivoting by size.
inline Spectrum eigenvalues_sym(const SymMatrix& m) {
    const std::size_t n = m.size();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

    auto off_norm_sq = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
        return s;
    };

    const double fro = m.frobenius_norm();
    const double target = 1e-12 * fro;
    if (n > 1 && fro > 0.0) {
        for (int sweep = 0; sweep < 100 && off_norm_sq() > target * target; ++sweep) {
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double apq = a[p * n + q];
                    if (apq == 0.0) continue;
                    const double app = a[p * n + p];
                    const double aqq = a[q * n + q];
                    const double theta = (aqq - app) / (2.0 * apq);
                    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    for (std::size_t k = 0; k < n; ++k) {
                        const double akp = a[k * n + p];
                        const double akq = a[k * n + q];
                        a[k * n + p] = c * akp - s * akq;
                        a[k * n + q] = s * akp + c * akq;
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        const double apk = a[p * n + k];
                        const double aqk = a[q * n + k];
                        a[p * n + k] = c * apk - s * aqk;
                        a[q * n + k] = s * apk + c * aqk;
                    }
                }
            }
        }
    }

    Spectrum out;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
    std::sort(out.values.begin(), out.values.end());
    return out;
}

inline double min_eigenvalue(const SymMatrix& m) {
    return eigenvalues_sym(m).min();
}

// Viewing m as d1 x d1 blocks of size d2 x d2, transposes every block in
// place (transposition of the second tensor factor). Symmetric in, symmetric
// out.
inline SymMatrix partial_transpose_matrix(const SymMatrix& m, std::size_t d1, std::size_t d2) {
    if (m.size() != d1 * d2) {
        throw std::invalid_argument("partial_transpose_matrix: dimension mismatch, n != d1*d2");
    }
    SymMatrix out(m.size());
    for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d1; ++j)
            for (std::size_t k = 0; k < d2; ++k)
                for (std::size_t l = 0; l < d2; ++l)
                    if (i * d2 + k <= j * d2 + l)
                        out.set(i * d2 + k, j * d2 + l, m(i * d2 + l, j * d2 + k));
    return out;
}

// trace(m^k) for k in {1,2,3} by direct summation.
inline double trace_power(const SymMatrix& m, int k) {
    const std::size_t n = m.size();
    switch (k) {
        case 1:
            return m.trace();
        case 2: {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) s += m(i, j) * m(i, j);
            return s;
        }
        case 3: {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (m(i, j) == 0.0) continue;
                    double row = 0.0;
                    for (std::size_t l = 0; l < n; ++l) row += m(j, l) * m(l, i);
                    s += m(i, j) * row;
                }
            return s;
        }
        default:
            throw std::invalid_argument("trace_power: k must be 1, 2 or 3");
    }
}

inline bool is_psd(const SymMatrix& m, double tol = kPsdTol) {
    if (tol < 0.0) throw std::invalid_argument("is_psd: negative tolerance");
    return min_eigenvalue(m) >= -tol;
}

}  // namespace aalpha

#endif  // AALPHA_MATRIX_HPP
