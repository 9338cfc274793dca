#include "qrring/qr_base.hpp"

#include <string>

#include "qrring/error.hpp"

namespace qrring {

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> qr_sets(std::int64_t q) {
    if (q < 3 || !is_prime(static_cast<std::uint64_t>(q)))
        throw Error(ErrorKind::NotPrime, "q = " + std::to_string(q) + " is not an odd prime");
    std::vector<bool> square(static_cast<std::size_t>(q), false);
    for (std::int64_t i = 1; i < q; ++i) square[static_cast<std::size_t>(i * i % q)] = true;
    std::vector<std::uint32_t> res, non;
    for (std::int64_t i = 1; i < q; ++i) (square[static_cast<std::size_t>(i)] ? res : non).push_back(static_cast<std::uint32_t>(i));
    return {res, non};
}

CyclicPoly QRContext::repetition_idempotent() const { return h.scaled(field.inv(q % field.p())); }

QRContext make_qr_context(std::int64_t p, std::int64_t q) {
    QRContext ctx;
    ctx.field = make_field(p);
    auto [res, non] = qr_sets(q);
    if (p == q || legendre(p, static_cast<std::uint32_t>(q)) != 1)
        throw Error(ErrorKind::NotQuadraticResidue,
                    std::to_string(p) + " is not a quadratic residue mod " + std::to_string(q));
    const auto& f = ctx.field;
    const auto qq = static_cast<std::size_t>(q);
    ctx.q = static_cast<std::uint32_t>(q);
    ctx.residues = std::move(res);
    ctx.nonresidues = std::move(non);

    std::vector<FieldElem> j1(qq, 0), j2(qq, 0);
    for (auto i : ctx.residues) j1[i] = 1;
    for (auto i : ctx.nonresidues) j2[i] = 1;
    ctx.j1 = CyclicPoly(f, j1);
    ctx.j2 = CyclicPoly(f, j2);
    ctx.h = CyclicPoly::constant(f, qq, 1) + ctx.j1 + ctx.j2;

    const FieldElem qf = f.reduce(q);
    const FieldElem radicand = ctx.q_is_3_mod_4() ? f.neg(qf) : qf;
    auto root = f.sqrt(radicand);
    if (!root || root->first == 0)
        throw Error(ErrorKind::NoSquareRoot, "no theta with theta^2 = " + std::to_string(radicand) + " mod " + std::to_string(p));
    ctx.theta = root->first;

    const FieldElem half = f.inv(2);
    const FieldElem inv_q = f.inv(qf);
    const FieldElem inv_t = f.inv(ctx.theta);
    const FieldElem plus = f.mul(half, f.add(inv_q, inv_t));   // (1/2)(1/q + 1/theta)
    const FieldElem minus = f.mul(half, f.sub(inv_q, inv_t));  // (1/2)(1/q - 1/theta)
    const FieldElem odd_const = f.mul(half, f.add(1, inv_q));
    const FieldElem even_const = f.mul(half, f.sub(1, inv_q));
    const auto c = [&](FieldElem v) { return CyclicPoly::constant(f, qq, v); };

    ctx.d1 = c(odd_const) + ctx.j1.scaled(minus) + ctx.j2.scaled(plus);
    ctx.d2 = c(odd_const) + ctx.j2.scaled(minus) + ctx.j1.scaled(plus);
    ctx.e1 = c(even_const) - ctx.j1.scaled(plus) - ctx.j2.scaled(minus);
    ctx.e2 = c(even_const) - ctx.j2.scaled(plus) - ctx.j1.scaled(minus);

    for (const auto* e : {&ctx.d1, &ctx.d2, &ctx.e1, &ctx.e2})
        if (!is_idempotent(*e)) throw Error(ErrorKind::InternalInvariant, "QR idempotent is not idempotent");
    if (!qr_identities_hold(ctx)) throw Error(ErrorKind::InternalInvariant, "QR idempotent identities fail");
    return ctx;
}

bool qr_identities_hold(const QRContext& ctx) {
    const auto& f = ctx.field;
    const auto one = CyclicPoly::constant(f, ctx.q, 1);
    const auto rep = ctx.repetition_idempotent();
    return ctx.d1 + ctx.d2 == one + rep && ctx.e1 + ctx.e2 == one - rep && ctx.d1 - ctx.e1 == rep &&
           ctx.d2 - ctx.e2 == rep && ctx.d1 * ctx.d2 == rep && (ctx.e1 * ctx.e2).is_zero();
}

}  // namespace qrring
