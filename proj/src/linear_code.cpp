#include "qrring/linear_code.hpp"

#include <string>

#include "qrring/error.hpp"

namespace qrring {

LinearCode make_code(const PrimeField& f, std::size_t n, FpMatrix rows) {
    for (auto& row : rows) {
        if (row.size() != n) throw Error(ErrorKind::DimensionMismatch, "generator rows of unequal length");
        for (auto& x : row) x %= f.p();
    }
    LinearCode c;
    c.field_ = f;
    c.n_ = n;
    c.pivots_ = rref_in_place(f, rows);
    c.G_ = std::move(rows);
    return c;
}

LinearCode from_rows(const FpMatrix& rows, const PrimeField& f) {
    if (rows.empty()) throw Error(ErrorKind::EmptyCode, "no generator rows");
    LinearCode c = make_code(f, rows.front().size(), rows);
    if (c.k() == 0) throw Error(ErrorKind::EmptyCode, "all generator rows are zero");
    return c;
}

LinearCode from_rows(const FpMatrix& rows, std::int64_t p) { return from_rows(rows, make_field(p)); }

bool LinearCode::contains(const FpRow& v) const {
    if (v.size() != n_) return false;
    FpRow r = v;
    for (auto& x : r) x %= field_.p();
    for (std::size_t i = 0; i < G_.size(); ++i) {
        const FieldElem c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (G_[i][j] != 0) r[j] = field_.sub(r[j], field_.mul(c, G_[i][j]));
    }
    return hamming_weight(r) == 0;
}

FpRow LinearCode::encode(const FpRow& message) const {
    if (message.size() != k()) throw Error(ErrorKind::DimensionMismatch, "message length must equal k");
    return vec_mat(field_, message, G_);
}

LinearCode dual(const LinearCode& c) {
    const auto& f = c.field();
    const std::size_t n = c.n();
    std::vector<bool> is_pivot(n, false);
    for (auto pc : c.pivots()) is_pivot[pc] = true;
    FpMatrix h;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        FpRow row(n, 0);
        row[j] = 1;
        for (std::size_t i = 0; i < c.k(); ++i) row[c.pivots()[i]] = f.neg(c.G()[i][j]);
        h.push_back(std::move(row));
    }
    return make_code(f, n, std::move(h));
}

LinearCode permute_coordinates(const LinearCode& c, const std::vector<std::size_t>& perm) {
    const std::size_t n = c.n();
    if (perm.size() != n) throw Error(ErrorKind::BadPermutation, "permutation length must equal n");
    std::vector<bool> seen(n, false);
    for (auto x : perm) {
        if (x >= n || seen[x]) throw Error(ErrorKind::BadPermutation, "not a permutation of [0, n)");
        seen[x] = true;
    }
    FpMatrix rows(c.k(), FpRow(n, 0));
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][perm[j]] = c.G()[i][j];
    return make_code(c.field(), n, std::move(rows));
}

bool is_self_orthogonal(const LinearCode& c) {
    const auto& f = c.field();
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = i; j < c.k(); ++j)
            if (dot(f, c.G()[i], c.G()[j]) != 0) return false;
    return true;
}

std::optional<std::uint64_t> code_size_capped(const LinearCode& c, std::uint64_t cap) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        if (size > cap / c.field().p()) return std::nullopt;
        size *= c.field().p();
    }
    if (size > cap) return std::nullopt;
    return size;
}

std::string DualityReport::label() const {
    if (self_dual) return "self-dual";
    if (self_orthogonal) return "self-orthogonal";
    if (dual_containing) return "dual-containing";
    if (formally_self_dual.value_or(false)) return "formally-self-dual";
    return "none";
}

std::string DualityReport::formal_status() const {
    if (!formally_self_dual) return "unknown (budget)";
    return *formally_self_dual ? "true" : "false";
}

DualityReport classify_duality(const LinearCode& c, std::uint64_t threshold, unsigned threads) {
    DualityReport r;
    const LinearCode d = dual(c);
    r.self_orthogonal = is_self_orthogonal(c);
    r.self_dual = r.self_orthogonal && 2 * c.k() == c.n();
    r.dual_containing = d.k() == 0 || is_self_orthogonal(d);
    if (2 * c.k() != c.n()) {
        r.formally_self_dual = false;
    } else if (r.self_dual) {
        r.formally_self_dual = true;
    } else if (code_size_capped(c, threshold)) {
        r.formally_self_dual = weight_enumerator(c, threshold, threads) == weight_enumerator(d, threshold, threads);
    }
    return r;
}

}  // namespace qrring
