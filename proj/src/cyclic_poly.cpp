#include "qrring/cyclic_poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qrring/error.hpp"

namespace qrring {

namespace {

void require_same(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw Error(ErrorKind::MixedContext, "polynomials over different fields");
}

void require_same(const CyclicPoly& a, const CyclicPoly& b) {
    if (!(a.field() == b.field()) || a.q() != b.q())
        throw Error(ErrorKind::MixedContext, "cyclic polynomials with different (p, q)");
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(PrimeField field, std::vector<FieldElem> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= field_.p();
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    FieldElem s = field_.inv(lead());
    std::vector<FieldElem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = field_.mul(c_[i], s);
    return Poly(field_, std::move(out));
}

FieldElem Poly::eval(FieldElem a) const {
    FieldElem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, a), *it);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& f = a.field();
    std::vector<FieldElem> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& f = a.field();
    std::vector<FieldElem> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f, {});
    std::vector<FieldElem> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    return Poly(f, std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const auto& f = a.field();
    std::vector<FieldElem> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Poly(f, {}), a};
    std::vector<FieldElem> quot(static_cast<std::size_t>(da - db + 1), 0);
    FieldElem lead_inv = f.inv(b.lead());
    for (int i = da; i >= db; --i) {
        FieldElem c = f.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        if (c == 0) continue;
        quot[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(i - db + j);
            rem[idx] = f.sub(rem[idx], f.mul(c, b.coeffs()[static_cast<std::size_t>(j)]));
        }
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly x_pow_minus_one(const PrimeField& field, std::size_t n) {
    std::vector<FieldElem> c(n + 1, 0);
    c[0] = field.neg(1);
    c[n] = 1;
    return Poly(field, std::move(c));
}

Poly reciprocal(const Poly& h) {
    if (h.is_zero() || h.coeff(0) == 0) throw Error(ErrorKind::ZeroConstantTerm, "reciprocal needs h(0) != 0");
    std::vector<FieldElem> c(h.coeffs().rbegin(), h.coeffs().rend());
    return Poly(h.field(), std::move(c)).monic();
}

// ---------------------------------------------------------------- CyclicPoly

CyclicPoly::CyclicPoly(PrimeField field, std::vector<FieldElem> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (auto& x : c_) x %= field_.p();
}

CyclicPoly CyclicPoly::zero(const PrimeField& field, std::size_t q) {
    return CyclicPoly(field, std::vector<FieldElem>(q, 0));
}

CyclicPoly CyclicPoly::constant(const PrimeField& field, std::size_t q, FieldElem c) {
    std::vector<FieldElem> v(q, 0);
    v[0] = c % field.p();
    return CyclicPoly(field, std::move(v));
}

CyclicPoly CyclicPoly::monomial(const PrimeField& field, std::size_t q, std::size_t power, FieldElem c) {
    std::vector<FieldElem> v(q, 0);
    v[power % q] = c % field.p();
    return CyclicPoly(field, std::move(v));
}

CyclicPoly CyclicPoly::from_poly(const Poly& f, std::size_t q) {
    const auto& fld = f.field();
    std::vector<FieldElem> v(q, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) v[i % q] = fld.add(v[i % q], f.coeffs()[i]);
    return CyclicPoly(fld, std::move(v));
}

CyclicPoly CyclicPoly::scaled(FieldElem s) const {
    std::vector<FieldElem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s % field_.p());
    return CyclicPoly(field_, std::move(v));
}

FieldElem CyclicPoly::eval(FieldElem a) const { return to_poly().eval(a % field_.p()); }

CyclicPoly CyclicPoly::reversed() const {
    const std::size_t q = c_.size();
    std::vector<FieldElem> v(q, 0);
    for (std::size_t i = 0; i < q; ++i) v[(q - i) % q] = c_[i];
    return CyclicPoly(field_, std::move(v));
}

CyclicPoly CyclicPoly::shifted(std::size_t k) const {
    const std::size_t q = c_.size();
    std::vector<FieldElem> v(q, 0);
    for (std::size_t i = 0; i < q; ++i) v[(i + k) % q] = c_[i];
    return CyclicPoly(field_, std::move(v));
}

Poly CyclicPoly::to_poly() const { return Poly(field_, c_); }

bool CyclicPoly::is_zero() const noexcept {
    for (auto x : c_)
        if (x != 0) return false;
    return true;
}

CyclicPoly operator+(const CyclicPoly& a, const CyclicPoly& b) {
    require_same(a, b);
    std::vector<FieldElem> v(a.q());
    for (std::size_t i = 0; i < a.q(); ++i) v[i] = a.field().add(a[i], b[i]);
    return CyclicPoly(a.field(), std::move(v));
}

CyclicPoly operator-(const CyclicPoly& a, const CyclicPoly& b) {
    require_same(a, b);
    std::vector<FieldElem> v(a.q());
    for (std::size_t i = 0; i < a.q(); ++i) v[i] = a.field().sub(a[i], b[i]);
    return CyclicPoly(a.field(), std::move(v));
}

CyclicPoly operator*(const CyclicPoly& a, const CyclicPoly& b) {
    require_same(a, b);
    const auto& f = a.field();
    const std::size_t q = a.q();
    const std::uint64_t p = f.p();
    // accumulate unreduced products, folding before overflow
    std::vector<std::uint64_t> acc(q, 0);
    const std::uint64_t limit = ~std::uint64_t{0} - (p - 1) * (p - 1);
    for (std::size_t i = 0; i < q; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < q; ++j) {
            auto& slot = acc[(i + j) % q];
            slot += static_cast<std::uint64_t>(a[i]) * b[j];
            if (slot > limit) slot %= p;
        }
    }
    std::vector<FieldElem> v(q);
    for (std::size_t i = 0; i < q; ++i) v[i] = static_cast<FieldElem>(acc[i] % p);
    return CyclicPoly(f, std::move(v));
}

bool is_idempotent(const CyclicPoly& f) { return f * f == f; }

CyclicPoly dual_idempotent(const CyclicPoly& e) {
    if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, "dual_idempotent");
    return CyclicPoly::constant(e.field(), e.q(), 1) - e.reversed();
}

std::pair<CyclicPoly, CyclicPoly> intersect_sum_idempotents(const CyclicPoly& e1, const CyclicPoly& e2) {
    if (!is_idempotent(e1) || !is_idempotent(e2))
        throw Error(ErrorKind::NotIdempotent, "intersect_sum_idempotents");
    CyclicPoly prod = e1 * e2;
    return {prod, e1 + e2 - prod};
}

Poly idempotent_to_generator(const CyclicPoly& e) {
    if (!is_idempotent(e)) throw Error(ErrorKind::NotIdempotent, "idempotent_to_generator");
    return gcd(e.to_poly(), x_pow_minus_one(e.field(), e.q()));
}

CyclicPoly multiplier(const CyclicPoly& f, std::int64_t n) {
    const auto q = static_cast<std::int64_t>(f.q());
    if (std::gcd(n, q) != 1) throw Error(ErrorKind::NotCoprime, "multiplier " + std::to_string(n) + " mod " + std::to_string(q));
    std::int64_t nn = ((n % q) + q) % q;
    std::vector<FieldElem> v(f.q(), 0);
    for (std::int64_t i = 0; i < q; ++i) v[static_cast<std::size_t>(nn * i % q)] = f[static_cast<std::size_t>(i)];
    return CyclicPoly(f.field(), std::move(v));
}

std::vector<std::vector<FieldElem>> generator_shifts(const Poly& g, std::size_t q) {
    std::vector<std::vector<FieldElem>> rows;
    if (g.is_zero() || g.degree() >= static_cast<int>(q)) return rows;
    const std::size_t k = q - static_cast<std::size_t>(g.degree());
    rows.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<FieldElem> row(q, 0);
        for (std::size_t i = 0; i < g.coeffs().size(); ++i) row[i + j] = g.coeffs()[i];
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace qrring
