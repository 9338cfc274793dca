#include "qrring/qr_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qrring/error.hpp"

namespace qrring {

Subset canonical_subset(Subset s, int m) {
    if (s.empty()) throw Error(ErrorKind::EmptySubset, "subset must be nonempty");
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > m)
            throw Error(ErrorKind::InvalidSubset, "index " + std::to_string(s[i]) + " outside 1.." + std::to_string(m));
        if (i > 0 && s[i] == s[i - 1]) throw Error(ErrorKind::InvalidSubset, "repeated index " + std::to_string(s[i]));
    }
    return s;
}

Subset complement(const Subset& s, int m) {
    Subset out;
    for (int i = 1; i <= m; ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
    return out;
}

std::string to_string(IdempotentKind kind) {
    switch (kind) {
        case IdempotentKind::D: return "Q";
        case IdempotentKind::DPrime: return "Q'";
        case IdempotentKind::E: return "S";
        case IdempotentKind::EPrime: return "S'";
    }
    return "?";
}

RingIdempotent build_idempotent(const ResidueRing& ring, const QRContext& qr, const Subset& subset, IdempotentKind kind) {
    if (ring.p() != qr.p())
        throw Error(ErrorKind::ContextMismatch, "ring over F_" + std::to_string(ring.p()) + " with QR data over F_" + std::to_string(qr.p()));
    RingIdempotent out{ring, qr, canonical_subset(subset, ring.m()), kind, {}, {}};

    const bool odd = kind == IdempotentKind::D || kind == IdempotentKind::DPrime;
    const bool primed = kind == IdempotentKind::DPrime || kind == IdempotentKind::EPrime;
    const CyclicPoly& first = odd ? qr.d1 : qr.e1;
    const CyclicPoly& second = odd ? qr.d2 : qr.e2;
    for (int i = 1; i <= ring.m(); ++i) {
        const bool member = std::binary_search(out.subset.begin(), out.subset.end(), i);
        out.components.push_back(member != primed ? first : second);
    }
    out.poly = ring.join_components(out.components);
    if (!is_ring_idempotent(ring, out.poly)) throw Error(ErrorKind::InternalInvariant, "assembled polynomial is not idempotent");
    return out;
}

bool is_ring_idempotent(const ResidueRing& ring, const RingPoly& f) { return ring.poly_mul(f, f) == f; }

RingPoly ring_multiplier(const RingPoly& f, std::int64_t n) {
    const auto q = static_cast<std::int64_t>(f.size());
    if (std::gcd(n, q) != 1) throw Error(ErrorKind::NotCoprime, "multiplier not coprime to length");
    const std::int64_t nn = ((n % q) + q) % q;
    RingPoly out(f.size());
    for (std::int64_t i = 0; i < q; ++i) out[static_cast<std::size_t>(nn * i % q)] = f[static_cast<std::size_t>(i)];
    return out;
}

// ---------------------------------------------------------------- codes

std::size_t RingCyclicCode::log_size() const {
    std::size_t total = 0;
    for (const auto& g : component_generators) total += length - static_cast<std::size_t>(g.degree());
    return total;
}

LinearCode RingCyclicCode::component_code(int slot) const {
    const auto& g = component_generators.at(static_cast<std::size_t>(slot - 1));
    return make_code(ring.field(), length, generator_shifts(g, length));
}

RingCyclicCode code_from_components(const ResidueRing& ring, const std::vector<CyclicPoly>& component_idempotents) {
    if (component_idempotents.size() != static_cast<std::size_t>(ring.m()))
        throw Error(ErrorKind::DimensionMismatch, "need one idempotent per slot");
    RingCyclicCode code;
    code.ring = ring;
    code.length = component_idempotents.front().q();
    code.component_idempotents = component_idempotents;
    for (int i = 1; i <= ring.m(); ++i) {
        const auto& e = component_idempotents[static_cast<std::size_t>(i - 1)];
        Poly g = idempotent_to_generator(e);
        for (const auto& shift : generator_shifts(g, code.length)) {
            RingRow row(code.length, ring.zero());
            for (std::size_t t = 0; t < code.length; ++t)
                if (shift[t] != 0) row[t] = ring.scale(ring.eta(i), shift[t]);
            code.generator_rows.push_back(std::move(row));
        }
        code.component_generators.push_back(std::move(g));
    }
    return code;
}

RingCyclicCode code_from_ring_idempotent(const ResidueRing& ring, const RingPoly& idempotent) {
    if (!is_ring_idempotent(ring, idempotent)) throw Error(ErrorKind::NotIdempotent, "ring polynomial is not idempotent");
    return code_from_components(ring, ring.split_components(idempotent));
}

RingCyclicCode code_from_idempotent(const RingIdempotent& idempotent) {
    RingCyclicCode code = code_from_components(idempotent.ring, idempotent.components);
    code.source = idempotent;
    return code;
}

RingCyclicCode qr_code(const ResidueRing& ring, const QRContext& qr, const Subset& subset, IdempotentKind kind) {
    return code_from_idempotent(build_idempotent(ring, qr, subset, kind));
}

RingMatrix fp_spanning_rows(const ResidueRing& ring, const RingMatrix& rows) {
    RingMatrix out;
    for (const auto& row : rows)
        for (const auto& eta : ring.etas()) {
            RingRow scaled;
            scaled.reserve(row.size());
            bool nonzero = false;
            for (const auto& x : row) {
                scaled.push_back(ring.mul(eta, x));
                nonzero = nonzero || !(scaled.back() == ring.zero());
            }
            if (nonzero) out.push_back(std::move(scaled));
        }
    return out;
}

std::size_t ring_span_log_size(const ResidueRing& ring, const RingMatrix& rows) {
    FpMatrix flat;
    for (const auto& row : fp_spanning_rows(ring, rows)) {
        FpRow v;
        for (const auto& x : row) v.insert(v.end(), x.coeffs.begin(), x.coeffs.end());
        flat.push_back(std::move(v));
    }
    return rank(ring.field(), std::move(flat));
}

bool rows_orthogonal(const ResidueRing& ring, const RingMatrix& a, const RingMatrix& b) {
    const RingElem zero = ring.zero();
    for (const auto& x : a)
        for (const auto& y : b)
            if (!(ring.dot(x, y) == zero)) return false;
    return true;
}

LinearCode gray_image(const GrayMap& gray, const RingMatrix& rows) {
    FpMatrix image;
    for (const auto& row : fp_spanning_rows(gray.ring(), rows)) image.push_back(gray.phi(row));
    return from_rows(image, gray.ring().field());
}

// ---------------------------------------------------------------- extensions

std::string to_string(ExtensionVariant v) {
    switch (v) {
        case ExtensionVariant::Q3: return "q3";
        case ExtensionVariant::Q1Plain: return "q1-plain";
        case ExtensionVariant::Q1Primed: return "q1-primed";
    }
    return "?";
}

ExtensionVariant default_extension(const QRContext& qr) {
    return qr.q_is_3_mod_4() ? ExtensionVariant::Q3 : ExtensionVariant::Q1Plain;
}

std::size_t ExtendedCode::log_size() const { return base.log_size() + static_cast<std::size_t>(base.ring.m()); }

ExtendedCode extend_code(const RingCyclicCode& even_code, ExtensionVariant variant, bool infinity_last) {
    if (!even_code.source) throw Error(ErrorKind::ContextMismatch, "extension needs a QR code built from an idempotent");
    const auto& src = *even_code.source;
    const auto& qr = src.qr;
    const auto& f = even_code.ring.field();
    const IdempotentKind needed = variant == ExtensionVariant::Q1Primed ? IdempotentKind::EPrime : IdempotentKind::E;
    if (src.kind != needed)
        throw Error(ErrorKind::ContextMismatch, "variant " + to_string(variant) + " extends " + to_string(needed) + ", got " + to_string(src.kind));

    ExtendedCode ext;
    ext.base = even_code;
    ext.variant = variant;
    switch (variant) {
        case ExtensionVariant::Q3: {
            if (!qr.q_is_3_mod_4()) throw Error(ErrorKind::WrongResidueClass, "q = " + std::to_string(qr.q) + " is not 3 mod 4");
            auto root = f.sqrt(f.neg(f.reduce(qr.q)));
            if (!root) throw Error(ErrorKind::NoExtensionScalar, "-q is not a square mod p");
            ext.scalar = root->first;
            break;
        }
        case ExtensionVariant::Q1Plain:
            if (qr.q_is_3_mod_4()) throw Error(ErrorKind::WrongResidueClass, "q = " + std::to_string(qr.q) + " is not 1 mod 4");
            ext.scalar = 1;
            break;
        case ExtensionVariant::Q1Primed:
            if (qr.q_is_3_mod_4()) throw Error(ErrorKind::WrongResidueClass, "q = " + std::to_string(qr.q) + " is not 1 mod 4");
            ext.scalar = f.neg(f.reduce(qr.q));
            break;
    }

    const auto& ring = even_code.ring;
    const std::size_t q = even_code.length;
    ext.infinity_column = infinity_last ? q : 0;
    const auto place = [&](RingRow body, const RingElem& inf) {
        body.insert(body.begin() + static_cast<std::ptrdiff_t>(ext.infinity_column), inf);
        return body;
    };
    for (const auto& row : even_code.generator_rows) ext.generator_rows.push_back(place(row, ring.zero()));
    ext.generator_rows.push_back(place(RingRow(q, ring.one()), ring.constant(ext.scalar)));
    return ext;
}

ExtendedCode extended_qr_code(const ResidueRing& ring, const QRContext& qr, const Subset& subset, ExtensionVariant variant,
                              bool infinity_last) {
    const IdempotentKind kind = variant == ExtensionVariant::Q1Primed ? IdempotentKind::EPrime : IdempotentKind::E;
    return extend_code(qr_code(ring, qr, subset, kind), variant, infinity_last);
}

// ---------------------------------------------------------------- property suites

bool CheckReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckReport subset_identity_suite(const ResidueRing& ring, const QRContext& qr, const Subset& subset) {
    const Subset s = canonical_subset(subset, ring.m());
    if (2 * s.size() > static_cast<std::size_t>(ring.m()))
        throw Error(ErrorKind::SubsetTooLarge, "subset identities need |S| <= m/2");

    const RingPoly D = build_idempotent(ring, qr, s, IdempotentKind::D).poly;
    const RingPoly Dp = build_idempotent(ring, qr, s, IdempotentKind::DPrime).poly;
    const RingPoly E = build_idempotent(ring, qr, s, IdempotentKind::E).poly;
    const RingPoly Ep = build_idempotent(ring, qr, s, IdempotentKind::EPrime).poly;
    const RingPoly rep = ring.lift(qr.repetition_idempotent());
    const RingPoly one = ring.lift(CyclicPoly::constant(qr.field, qr.q, 1));
    const RingPoly zero = ring.lift(CyclicPoly::zero(qr.field, qr.q));

    const auto inter = [&](const RingPoly& a, const RingPoly& b) { return ring.poly_mul(a, b); };
    const auto sum = [&](const RingPoly& a, const RingPoly& b) { return ring.poly_sub(ring.poly_add(a, b), ring.poly_mul(a, b)); };

    CheckReport r;
    r.checks.push_back({"(i) Q cap Q' = <h/q>", inter(D, Dp) == rep});
    r.checks.push_back({"(ii) Q + Q' = R_q", sum(D, Dp) == one});
    r.checks.push_back({"(iii) S cap S' = 0", inter(E, Ep) == zero});
    r.checks.push_back({"(iv) S + S' = <1 - h/q>", sum(E, Ep) == ring.poly_sub(one, rep)});
    r.checks.push_back({"(v) S cap <h/q> = 0", inter(E, rep) == zero && inter(Ep, rep) == zero});
    r.checks.push_back({"(vi) S + <h/q> = Q", sum(E, rep) == D && sum(Ep, rep) == Dp});
    return r;
}

EquivalenceClasses equivalence_classes(int m) {
    if (m < 2) throw Error(ErrorKind::InvalidParameter, "m must be at least 2");
    const unsigned full = (1u << m) - 1;
    // node 2*mask + 0 is Q_mask, 2*mask + 1 is Q'_mask
    std::vector<unsigned> parent(2u * (full + 1));
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](unsigned a, unsigned b) { parent[find(a)] = find(b); };
    for (unsigned mask = 1; mask < full; ++mask) {
        unite(2 * mask, 2 * mask + 1);             // multiplier equivalence
        unite(2 * mask + 1, 2 * (full ^ mask));    // Q'_S is Q_{A-S}
    }

    const auto to_subset = [&](unsigned mask) {
        Subset s;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        return s;
    };
    std::vector<std::pair<unsigned, Subset>> best;  // root -> smallest subset
    for (unsigned mask = 1; mask < full; ++mask) {
        const unsigned root = find(2 * mask);
        Subset s = to_subset(mask);
        auto it = std::find_if(best.begin(), best.end(), [&](const auto& e) { return e.first == root; });
        if (it == best.end()) best.emplace_back(root, std::move(s));
        else if (std::make_pair(s.size(), s) < std::make_pair(it->second.size(), it->second)) it->second = std::move(s);
    }
    EquivalenceClasses out;
    out.count = best.size();
    for (auto& [root, s] : best) out.representatives.push_back(std::move(s));
    std::sort(out.representatives.begin(), out.representatives.end());
    return out;
}

namespace {

/// Slot-by-slot: reciprocal of the check polynomial of `code` generates `expected`.
bool duals_by_reciprocal(const RingCyclicCode& code, const RingCyclicCode& expected) {
    const auto& f = code.ring.field();
    const Poly xq1 = x_pow_minus_one(f, code.length);
    for (std::size_t i = 0; i < code.component_generators.size(); ++i) {
        const Poly h = divmod(xq1, code.component_generators[i]).first;
        if (!(reciprocal(h) == expected.component_generators[i])) return false;
    }
    return true;
}

/// Slot-by-slot: the F_p dual of each component code equals the expected component.
bool duals_by_linear_algebra(const RingCyclicCode& code, const RingCyclicCode& expected) {
    for (int i = 1; i <= code.ring.m(); ++i)
        if (!(dual(code.component_code(i)) == expected.component_code(i))) return false;
    return true;
}

RingPoly ring_reversed(const RingPoly& f) {
    const std::size_t q = f.size();
    RingPoly out(q);
    for (std::size_t i = 0; i < q; ++i) out[(q - i) % q] = f[i];
    return out;
}

}  // namespace

CheckReport duality_checks(const ResidueRing& ring, const QRContext& qr, const Subset& subset) {
    const Subset s = canonical_subset(subset, ring.m());
    const auto m = static_cast<std::size_t>(ring.m());
    const std::size_t q = qr.q;
    const RingCyclicCode Q = qr_code(ring, qr, s, IdempotentKind::D);
    const RingCyclicCode Qp = qr_code(ring, qr, s, IdempotentKind::DPrime);
    const RingCyclicCode S = qr_code(ring, qr, s, IdempotentKind::E);
    const RingCyclicCode Sp = qr_code(ring, qr, s, IdempotentKind::EPrime);
    const RingPoly one = ring.lift(CyclicPoly::constant(qr.field, qr.q, 1));

    CheckReport r;
    if (qr.q_is_3_mod_4()) {
        r.checks.push_back({"Q^perp = S (idempotent)", ring.poly_sub(one, ring_reversed(Q.source->poly)) == S.source->poly});
        r.checks.push_back({"Q^perp = S (reciprocal generators)", duals_by_reciprocal(Q, S)});
        r.checks.push_back({"Q^perp = S (component duals)", duals_by_linear_algebra(Q, S)});
        r.checks.push_back({"S self-orthogonal over R", rows_orthogonal(ring, S.generator_rows, S.generator_rows)});

        const ExtendedCode ext = extend_code(S, ExtensionVariant::Q3);
        const bool sizes = 2 * ext.log_size() == m * (q + 1) && ring_span_log_size(ring, ext.generator_rows) == ext.log_size();
        r.checks.push_back({"extended Q self-dual", sizes && rows_orthogonal(ring, ext.generator_rows, ext.generator_rows)});
    } else {
        r.checks.push_back({"Q^perp = S' (idempotent)", ring.poly_sub(one, ring_reversed(Q.source->poly)) == Sp.source->poly});
        r.checks.push_back({"Q^perp = S' (reciprocal generators)", duals_by_reciprocal(Q, Sp)});
        r.checks.push_back({"Q^perp = S' (component duals)", duals_by_linear_algebra(Q, Sp)});
        r.checks.push_back({"Q'^perp = S (reciprocal generators)", duals_by_reciprocal(Qp, S)});
        r.checks.push_back({"Q'^perp = S (component duals)", duals_by_linear_algebra(Qp, S)});

        const ExtendedCode ext = extend_code(S, ExtensionVariant::Q1Plain);
        const ExtendedCode ext_p = extend_code(Sp, ExtensionVariant::Q1Primed);
        const bool sizes = ext.log_size() + ext_p.log_size() == m * (q + 1);
        r.checks.push_back({"extended Q^perp = extended Q'", sizes && rows_orthogonal(ring, ext.generator_rows, ext_p.generator_rows)});
    }
    return r;
}

}  // namespace qrring
