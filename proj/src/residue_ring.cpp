#include "qrring/residue_ring.hpp"

#include <string>

#include "qrring/error.hpp"

namespace qrring {

void ResidueRing::require_owns(const RingElem& a) const {
    if (!owns(a))
        throw Error(ErrorKind::MixedContext, "ring element from (p=" + std::to_string(a.p) + ", m=" +
                                                 std::to_string(a.m) + ") used in ring (p=" +
                                                 std::to_string(p()) + ", m=" + std::to_string(m_) + ")");
}

RingElem ResidueRing::zero() const { return RingElem{p(), m_, std::vector<FieldElem>(static_cast<std::size_t>(m_), 0)}; }

RingElem ResidueRing::one() const { return constant(1); }

RingElem ResidueRing::constant(FieldElem c) const {
    RingElem r = zero();
    r.coeffs[0] = c % p();
    return r;
}

RingElem ResidueRing::u_pow(int k) const {
    RingElem r = zero();
    while (k >= m_) k -= m_ - 1;
    r.coeffs[static_cast<std::size_t>(k)] = 1;
    return r;
}

RingElem ResidueRing::element(std::vector<FieldElem> coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(m_))
        throw Error(ErrorKind::DimensionMismatch, "ring element needs " + std::to_string(m_) + " coefficients");
    for (auto& c : coeffs) c %= p();
    return RingElem{p(), m_, std::move(coeffs)};
}

RingElem ResidueRing::add(const RingElem& a, const RingElem& b) const {
    require_owns(a);
    require_owns(b);
    RingElem r = zero();
    for (int i = 0; i < m_; ++i) r.coeffs[i] = field_.add(a.coeffs[i], b.coeffs[i]);
    return r;
}

RingElem ResidueRing::sub(const RingElem& a, const RingElem& b) const {
    require_owns(a);
    require_owns(b);
    RingElem r = zero();
    for (int i = 0; i < m_; ++i) r.coeffs[i] = field_.sub(a.coeffs[i], b.coeffs[i]);
    return r;
}

RingElem ResidueRing::mul(const RingElem& a, const RingElem& b) const {
    require_owns(a);
    require_owns(b);
    RingElem r = zero();
    for (int i = 0; i < m_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < m_; ++j) {
            int k = i + j;
            // u^k = u^{k-(m-1)} for k >= m
            if (k >= m_) k -= m_ - 1;
            r.coeffs[k] = field_.add(r.coeffs[k], field_.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return r;
}

RingElem ResidueRing::scale(const RingElem& a, FieldElem s) const {
    require_owns(a);
    RingElem r = zero();
    for (int i = 0; i < m_; ++i) r.coeffs[i] = field_.mul(a.coeffs[i], s % p());
    return r;
}

FieldElem ResidueRing::eval(const RingElem& a, FieldElem point) const {
    require_owns(a);
    FieldElem acc = 0;
    for (int i = m_ - 1; i >= 0; --i) acc = field_.add(field_.mul(acc, point), a.coeffs[i]);
    return acc;
}

std::vector<FieldElem> ResidueRing::crt_split(const RingElem& a) const {
    std::vector<FieldElem> out(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) out[i] = eval(a, slot_points_[i]);
    return out;
}

RingElem ResidueRing::crt_join(const std::vector<FieldElem>& slots) const {
    if (slots.size() != static_cast<std::size_t>(m_))
        throw Error(ErrorKind::DimensionMismatch, "crt_join needs " + std::to_string(m_) + " components");
    RingElem r = zero();
    for (int i = 0; i < m_; ++i) {
        if (slots[i] % p() == 0) continue;
        r = add(r, scale(etas_[i], slots[i]));
    }
    return r;
}

RingPoly ResidueRing::poly_add(const RingPoly& a, const RingPoly& b) const {
    if (a.size() != b.size()) throw Error(ErrorKind::MixedContext, "ring polynomials of different length");
    RingPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = add(a[i], b[i]);
    return out;
}

RingPoly ResidueRing::poly_sub(const RingPoly& a, const RingPoly& b) const {
    if (a.size() != b.size()) throw Error(ErrorKind::MixedContext, "ring polynomials of different length");
    RingPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = sub(a[i], b[i]);
    return out;
}

RingPoly ResidueRing::poly_mul(const RingPoly& a, const RingPoly& b) const {
    if (a.size() != b.size()) throw Error(ErrorKind::MixedContext, "ring polynomials of different length");
    const std::size_t q = a.size();
    RingPoly out(q, zero());
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            auto& slot = out[(i + j) % q];
            slot = add(slot, mul(a[i], b[j]));
        }
    return out;
}

RingPoly ResidueRing::lift(const CyclicPoly& f) const {
    if (!(f.field() == field_)) throw Error(ErrorKind::MixedContext, "lift across fields");
    RingPoly out;
    out.reserve(f.q());
    for (auto c : f.coeffs()) out.push_back(constant(c));
    return out;
}

RingPoly ResidueRing::join_components(const std::vector<CyclicPoly>& components) const {
    if (components.size() != static_cast<std::size_t>(m_))
        throw Error(ErrorKind::DimensionMismatch, "join_components needs m components");
    const std::size_t q = components.front().q();
    for (const auto& c : components)
        if (c.q() != q || !(c.field() == field_)) throw Error(ErrorKind::MixedContext, "component mismatch");
    RingPoly out;
    out.reserve(q);
    std::vector<FieldElem> slots(static_cast<std::size_t>(m_));
    for (std::size_t t = 0; t < q; ++t) {
        for (int i = 0; i < m_; ++i) slots[i] = components[i][t];
        out.push_back(crt_join(slots));
    }
    return out;
}

std::vector<CyclicPoly> ResidueRing::split_components(const RingPoly& f) const {
    const std::size_t q = f.size();
    std::vector<std::vector<FieldElem>> comp(static_cast<std::size_t>(m_), std::vector<FieldElem>(q));
    for (std::size_t t = 0; t < q; ++t) {
        auto s = crt_split(f[t]);
        for (int i = 0; i < m_; ++i) comp[i][t] = s[i];
    }
    std::vector<CyclicPoly> out;
    out.reserve(comp.size());
    for (auto& c : comp) out.emplace_back(field_, std::move(c));
    return out;
}

RingElem ResidueRing::dot(const std::vector<RingElem>& a, const std::vector<RingElem>& b) const {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot of vectors of different length");
    RingElem acc = zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = add(acc, mul(a[i], b[i]));
    return acc;
}

ResidueRing make_ring(std::int64_t p, int m) {
    if (m < 2) throw Error(ErrorKind::InvalidParameter, "m must be at least 2");
    ResidueRing ring;
    ring.field_ = make_field(p);
    ring.m_ = m;
    const auto& f = ring.field_;
    if ((f.p() - 1) % static_cast<std::uint32_t>(m - 1) != 0)
        throw Error(ErrorKind::CongruenceViolation,
                    std::to_string(p) + " is not 1 mod " + std::to_string(m - 1));

    ring.xi_ = f.pow(f.alpha(), (f.p() - 1) / static_cast<std::uint32_t>(m - 1));
    const FieldElem inv_m1 = f.inv(static_cast<FieldElem>(m - 1));
    const auto mm = static_cast<std::size_t>(m);

    RingElem eta1{f.p(), m, std::vector<FieldElem>(mm, 0)};
    eta1.coeffs[0] = 1;
    eta1.coeffs[mm - 1] = f.neg(1);
    ring.etas_.push_back(eta1);
    ring.slot_points_.push_back(0);

    // eta_j = (m-1)^{-1} (w u + w^2 u^2 + ... + w^{m-2} u^{m-2} + u^{m-1}), w = xi^{j-2}
    for (int j = 2; j <= m; ++j) {
        const FieldElem w = f.pow(ring.xi_, static_cast<std::uint64_t>(j - 2));
        RingElem eta{f.p(), m, std::vector<FieldElem>(mm, 0)};
        for (int t = 1; t <= m - 2; ++t) eta.coeffs[t] = f.mul(inv_m1, f.pow(w, static_cast<std::uint64_t>(t)));
        eta.coeffs[mm - 1] = f.add(eta.coeffs[mm - 1], inv_m1);
        ring.etas_.push_back(eta);
        ring.slot_points_.push_back(f.inv(w));
    }

    // orthogonal idempotents summing to 1
    RingElem total = ring.zero();
    for (int i = 1; i <= m; ++i) {
        const auto& ei = ring.eta(i);
        if (!(ring.mul(ei, ei) == ei)) throw Error(ErrorKind::InternalInvariant, "eta not idempotent");
        for (int j = i + 1; j <= m; ++j)
            if (!(ring.mul(ei, ring.eta(j)) == ring.zero()))
                throw Error(ErrorKind::InternalInvariant, "etas not orthogonal");
        total = ring.add(total, ei);
    }
    if (!(total == ring.one())) throw Error(ErrorKind::InternalInvariant, "etas do not sum to 1");
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (ring.eval(ring.eta(i), ring.slot_points_[j - 1]) != (i == j ? 1u : 0u))
                throw Error(ErrorKind::InternalInvariant, "eta evaluation points inconsistent");
    return ring;
}

}  // namespace qrring
