#include "qrring/fp_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "qrring/error.hpp"

namespace qrring {

std::vector<std::size_t> rref_in_place(const PrimeField& f, FpMatrix& a, const std::vector<std::size_t>* column_order) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t cols = a.front().size();
    std::vector<std::size_t> order;
    if (column_order) {
        order = *column_order;
    } else {
        order.resize(cols);
        std::iota(order.begin(), order.end(), 0);
    }

    std::size_t r = 0;
    for (std::size_t col : order) {
        if (r == a.size()) break;
        std::size_t sel = r;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[r], a[sel]);
        const FieldElem s = f.inv(a[r][col]);
        for (auto& x : a[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][col] == 0) continue;
            const FieldElem c = a[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                if (a[r][j] != 0) a[i][j] = f.sub(a[i][j], f.mul(c, a[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    a.resize(r);
    return pivots;
}

std::size_t rank(const PrimeField& f, FpMatrix a) { return rref_in_place(f, a).size(); }

FieldElem determinant(const PrimeField& f, FpMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    FieldElem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a[sel][c] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(a[sel], a[c]);
            det = f.neg(det);
        }
        det = f.mul(det, a[c][c]);
        const FieldElem s = f.inv(a[c][c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const FieldElem k = f.mul(a[i][c], s);
            for (std::size_t j = c; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(k, a[c][j]));
        }
    }
    return det;
}

std::optional<FpMatrix> inverse(const PrimeField& f, const FpMatrix& a) {
    const std::size_t n = a.size();
    FpMatrix aug(n, FpRow(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][n + i] = 1;
    }
    auto pivots = rref_in_place(f, aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    FpMatrix inv(n, FpRow(n));
    for (std::size_t i = 0; i < n; ++i) std::copy(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end(), inv[i].begin());
    return inv;
}

FpMatrix multiply(const PrimeField& f, const FpMatrix& a, const FpMatrix& b) {
    if (a.empty()) return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    FpMatrix out(a.size(), FpRow(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
        }
    }
    return out;
}

FpMatrix transpose(const FpMatrix& a) {
    if (a.empty()) return {};
    FpMatrix t(a.front().size(), FpRow(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

FpMatrix identity(std::size_t n) {
    FpMatrix id(n, FpRow(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

FpRow vec_mat(const PrimeField& f, const FpRow& v, const FpMatrix& a) {
    if (v.size() != a.size()) throw Error(ErrorKind::DimensionMismatch, "vector-matrix product shapes");
    FpRow out(a.empty() ? 0 : a.front().size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(v[k], a[k][j]));
    }
    return out;
}

FieldElem dot(const PrimeField& f, const FpRow& a, const FpRow& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot of vectors of different length");
    FieldElem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

std::size_t hamming_weight(const FpRow& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FieldElem x) { return x != 0; }));
}

bool is_zero_matrix(const FpMatrix& a) {
    for (const auto& row : a)
        for (auto x : row)
            if (x != 0) return false;
    return true;
}

}  // namespace qrring
