#include "qrring/gray_map.hpp"

#include <string>

#include "qrring/error.hpp"

namespace qrring {

FpMatrix gray_evaluation_matrix(const ResidueRing& ring) {
    const auto& f = ring.field();
    const int m = ring.m();
    const auto mm = static_cast<std::size_t>(m);
    FpMatrix M(mm, FpRow(mm, 0));
    for (std::size_t k = 0; k < mm; ++k) M[0][k] = 1;
    for (int j = 1; j < m; ++j) {
        // column 0 evaluates at u = 0; column k > 0 at xi^{k-1}
        for (int k = 1; k < m; ++k) {
            const FieldElem point = f.pow(ring.xi(), static_cast<std::uint64_t>(k - 1));
            M[j][k] = f.pow(point, static_cast<std::uint64_t>(j));
        }
    }
    // the last row is (0, 1, 1, ..., 1) since (xi^j)^{m-1} = 1
    for (int k = 1; k < m; ++k)
        if (M[mm - 1][k] != 1) throw Error(ErrorKind::InternalInvariant, "last row of M is not (0,1,...,1)");
    return M;
}

std::optional<FieldElem> orthogonality_scalar(const PrimeField& f, const FpMatrix& V) {
    const FpMatrix g = multiply(f, V, transpose(V));
    const FieldElem lambda = g[0][0];
    if (lambda == 0) return std::nullopt;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g[i][j] != (i == j ? lambda : 0)) return std::nullopt;
    return lambda;
}

GrayMap build_gray(const ResidueRing& ring, const FpMatrix& V) {
    const auto& f = ring.field();
    const auto mm = static_cast<std::size_t>(ring.m());
    if (V.size() != mm) throw Error(ErrorKind::DimensionMismatch, "V must be " + std::to_string(mm) + "x" + std::to_string(mm));
    for (const auto& row : V)
        if (row.size() != mm) throw Error(ErrorKind::DimensionMismatch, "V must be square of order m");

    GrayMap g;
    g.ring_ = ring;
    g.V_ = V;
    for (auto& row : g.V_)
        for (auto& x : row) x %= f.p();
    if (determinant(f, g.V_) == 0) throw Error(ErrorKind::SingularV, "V is singular over F_" + std::to_string(f.p()));

    g.M_ = gray_evaluation_matrix(ring);
    if (determinant(f, g.M_) == 0) throw Error(ErrorKind::InternalInvariant, "M is singular");
    g.MV_ = multiply(f, g.M_, g.V_);
    g.MV_inv_ = *inverse(f, g.MV_);
    g.lambda_ = orthogonality_scalar(f, g.V_);
    g.points_.push_back(0);
    for (int k = 1; k < ring.m(); ++k) g.points_.push_back(f.pow(ring.xi(), static_cast<std::uint64_t>(k - 1)));
    return g;
}

GrayMap build_gray(const ResidueRing& ring) { return build_gray(ring, identity(static_cast<std::size_t>(ring.m()))); }

FpRow GrayMap::phi(const RingElem& r) const {
    ring_.require_owns(r);
    return vec_mat(ring_.field(), r.coeffs, MV_);
}

FpRow GrayMap::phi(const std::vector<RingElem>& v) const {
    FpRow out;
    out.reserve(v.size() * static_cast<std::size_t>(ring_.m()));
    for (const auto& r : v) {
        auto block = phi(r);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

FpRow GrayMap::phi_by_evaluation(const std::vector<RingElem>& v) const {
    FpRow out;
    out.reserve(v.size() * static_cast<std::size_t>(ring_.m()));
    for (const auto& r : v) {
        FpRow evals;
        for (auto pt : points_) evals.push_back(ring_.eval(r, pt));
        auto block = vec_mat(ring_.field(), evals, V_);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<RingElem> GrayMap::phi_inverse(const FpRow& w) const {
    const auto mm = static_cast<std::size_t>(ring_.m());
    if (w.size() % mm != 0) throw Error(ErrorKind::BadLength, "length " + std::to_string(w.size()) + " is not a multiple of m");
    std::vector<RingElem> out;
    out.reserve(w.size() / mm);
    for (std::size_t i = 0; i < w.size(); i += mm) {
        FpRow block(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + mm));
        for (auto& x : block) x %= ring_.p();
        out.push_back(ring_.element(vec_mat(ring_.field(), block, MV_inv_)));
    }
    return out;
}

std::size_t GrayMap::gray_weight(const std::vector<RingElem>& v) const { return hamming_weight(phi(v)); }

std::size_t GrayMap::gray_distance(const std::vector<RingElem>& a, const std::vector<RingElem>& b) const {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "gray_distance of different lengths");
    std::vector<RingElem> diff;
    diff.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff.push_back(ring_.sub(a[i], b[i]));
    return gray_weight(diff);
}

}  // namespace qrring
