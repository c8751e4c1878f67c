#include "bhj/algebra.hpp"

#include "bhj/errors.hpp"

#include <array>

namespace bhj {

namespace {

void require_commuting_even_endos(const SuperSpace& space, const GradedMap& a,
                                  const GradedMap& b, const char* what) {
    if (!a.is_endomorphism() || a.domain() != space || !b.is_endomorphism() ||
        b.domain() != space)
        throw DimensionMismatch(std::string(what) + ": twist maps must be endomorphisms");
    if (a.degree() != Parity::even || b.degree() != Parity::even)
        throw InvariantViolation(std::string(what) + ": twist maps must be even");
    if (a.matrix() * b.matrix() != b.matrix() * a.matrix())
        throw NonCommuting(std::string(what) + ": twist maps do not commute");
}

} // namespace

BiHomJordanSuperalgebra::BiHomJordanSuperalgebra(SuperProduct product, GradedMap alpha,
                                                 GradedMap beta)
    : product_(std::move(product)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (product_.left_space() != product_.target_space() ||
        product_.right_space() != product_.target_space())
        throw DimensionMismatch("algebra product must map J x J -> J");
    require_commuting_even_endos(space(), alpha_, beta_, "algebra");
}

bool BiHomJordanSuperalgebra::is_regular() const {
    return alpha_.is_invertible() && beta_.is_invertible();
}

bool BiHomJordanSuperalgebra::is_multiplicative() const {
    return verify_morphism(product_, alpha_).passed() &&
           verify_morphism(product_, beta_).passed();
}

TwistWords::TwistWords(const GradedMap& alpha, const GradedMap& beta)
    : alpha_(alpha), beta_(beta) {}

const Matrix& TwistWords::pow_of(const GradedMap& base, std::map<long, Matrix>& cache,
                                 long k) const {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, base.matrix().power(k)).first;
    return it->second;
}

const Matrix& TwistWords::word(long a, long b) const {
    auto it = words_.find({a, b});
    if (it == words_.end())
        it = words_.emplace(std::pair{a, b},
                            pow_of(alpha_, alpha_pows_, a) * pow_of(beta_, beta_pows_, b))
                 .first;
    return it->second;
}

Report verify_supersymmetry(const BiHomJordanSuperalgebra& J) {
    Report rep;
    rep.identity = "super-symmetry";
    const std::size_t n = J.dim();
    const SuperProduct& P = J.product();
    const Matrix& a = J.alpha().matrix();
    const Matrix& b = J.beta().matrix();
    for (std::size_t i = 0; i < n; ++i) {
        Vec bi = b.column(i), ai = a.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            Vec r = P.eval(bi, a.column(j));
            add_scaled(r, P.eval(b.column(j), ai),
                       -koszul_sign(J.parity(i), J.parity(j)));
            if (!is_zero(r)) rep.violations.push_back({{i, j}, std::move(r)});
        }
    }
    return rep;
}

namespace {

// (u.v).beta(w) - alpha(u).(v.w)
Vec twisted_associator(const SuperProduct& P, const Matrix& alpha, const Matrix& beta,
                       const Vec& u, const Vec& v, const Vec& w) {
    Vec r = P.eval(P.eval(u, v), beta.apply(w));
    add_scaled(r, P.eval(alpha.apply(u), P.eval(v, w)), Scalar(-1));
    return r;
}

} // namespace

Report verify_jordan_identity(const BiHomJordanSuperalgebra& J) {
    Report rep;
    rep.identity = "jordan-identity";
    const std::size_t n = J.dim();
    const SuperProduct& P = J.product();
    TwistWords tw(J.alpha(), J.beta());
    const Matrix& a1 = tw.word(1, 0);
    const Matrix& b1 = tw.word(0, 1);
    const Matrix& b2 = tw.word(0, 2);
    const Matrix& ab = tw.word(1, 1);
    const Matrix& a2b = tw.word(2, 1);
    const Matrix& a3 = tw.word(3, 0);

    auto cyclic_term = [&](std::size_t x, std::size_t y, std::size_t t, std::size_t z) {
        Vec head = P.eval(b2.column(x), ab.column(y));
        return twisted_associator(P, a1, b1, head, a2b.column(z), a3.column(t));
    };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t t = 0; t < n; ++t) {
                    const unsigned px = parity_bit(J.parity(x)), py = parity_bit(J.parity(y));
                    const unsigned pz = parity_bit(J.parity(z)), pt = parity_bit(J.parity(t));
                    Vec r = scaled(cyclic_term(x, y, t, z), parity_sign(pt * (px + pz)));
                    add_scaled(r, cyclic_term(y, t, x, z), parity_sign(px * (py + pz)));
                    add_scaled(r, cyclic_term(t, x, y, z), parity_sign(py * (pt + pz)));
                    if (!is_zero(r)) rep.violations.push_back({{x, y, z, t}, std::move(r)});
                }
    return rep;
}

Report verify_morphism(const SuperProduct& product, const GradedMap& f) {
    Report rep;
    rep.identity = "morphism";
    const std::size_t n = product.target_space().dim();
    if (!f.is_endomorphism() || f.domain() != product.target_space())
        throw DimensionMismatch("morphism check needs an endomorphism of the algebra");
    if (f.degree() != Parity::even)
        throw InvariantViolation("morphism check needs an even map");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec r = f.apply(product.eval_basis(i, j));
            add_scaled(r, product.eval(f.matrix().column(i), f.matrix().column(j)),
                       Scalar(-1));
            if (!is_zero(r)) rep.violations.push_back({{i, j}, std::move(r)});
        }
    return rep;
}

Report verify_morphism(const BiHomJordanSuperalgebra& J, const GradedMap& f) {
    return verify_morphism(J.product(), f);
}

ReportSet verify_algebra(const BiHomJordanSuperalgebra& J) {
    ReportSet rs;
    rs.append(verify_supersymmetry(J));
    rs.append(verify_jordan_identity(J));
    return rs;
}

BiHomJordanSuperalgebra yau_twist(const BiHomJordanSuperalgebra& J0, const GradedMap& a,
                                  const GradedMap& b) {
    require_commuting_even_endos(J0.space(), a, b, "twist");
    if (!verify_morphism(J0.product(), a).passed())
        throw NotAMorphism("left twist map is not a product morphism");
    if (!verify_morphism(J0.product(), b).passed())
        throw NotAMorphism("right twist map is not a product morphism");
    return BiHomJordanSuperalgebra(J0.product().twisted_by(a, b), a, b);
}

UntwistResult untwist(const BiHomJordanSuperalgebra& J, long s, long t) {
    if (!J.is_regular())
        throw SingularMap("untwist needs invertible twist maps");
    if (!J.is_multiplicative())
        throw NotAMorphism("untwist needs multiplicative twist maps");
    TwistWords tw(J.alpha(), J.beta());
    GradedMap left(J.space(), J.space(), Parity::even, tw.word(s - 1, t));
    GradedMap right(J.space(), J.space(), Parity::even, tw.word(s, t - 1));
    BiHomJordanSuperalgebra plain(J.product().twisted_by(left, right),
                                  GradedMap::identity(J.space()),
                                  GradedMap::identity(J.space()));
    ReportSet report = verify_algebra(plain);
    return {std::move(plain), std::move(report)};
}

BiHomPreJordanSuperalgebra::BiHomPreJordanSuperalgebra(SuperProduct circ, GradedMap alpha,
                                                       GradedMap beta)
    : circ_(std::move(circ)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (circ_.left_space() != circ_.target_space() ||
        circ_.right_space() != circ_.target_space())
        throw DimensionMismatch("circ product must map J x J -> J");
    require_commuting_even_endos(space(), alpha_, beta_, "pre-jordan");
    if (!alpha_.is_invertible() || !beta_.is_invertible())
        throw SingularMap("pre-jordan twist maps must be invertible");
}

SuperProduct star_product(const BiHomPreJordanSuperalgebra& P) {
    const std::size_t n = P.space().dim();
    TwistWords tw(P.alpha(), P.beta());
    const Matrix& am1b = tw.word(-1, 1);
    const Matrix& abm1 = tw.word(1, -1);
    SuperProduct star(P.space());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec w = P.circ().eval_basis(i, j);
            add_scaled(w, P.circ().eval(am1b.column(j), abm1.column(i)),
                       koszul_sign(P.space().parity(i), P.space().parity(j)));
            for (std::size_t k = 0; k < n; ++k)
                if (!w[k].is_zero()) star.set(i, j, k, w[k]);
        }
    return star;
}

namespace {

// Outer four-slot identity for the pre-Jordan product: the cyclic sum over
// the (x, y, z) slots of (ab^2(x) * a^2b(y)) o (a^2b(z) o a^3(t)) against the
// three displayed right-hand terms.
Report pre_jordan_outer(const BiHomPreJordanSuperalgebra& P) {
    Report rep;
    rep.identity = "pre-jordan-outer";
    const std::size_t n = P.space().dim();
    const SuperProduct C = P.circ();
    const SuperProduct S = star_product(P);
    TwistWords tw(P.alpha(), P.beta());
    const Matrix& ab2 = tw.word(1, 2);
    const Matrix& a2b = tw.word(2, 1);
    const Matrix& a3 = tw.word(3, 0);
    const Matrix& b2 = tw.word(0, 2);
    const Matrix& ab = tw.word(1, 1);
    const Matrix& a2b2 = tw.word(2, 2);
    const Matrix& a3b = tw.word(3, 1);
    const Matrix& a2 = tw.word(2, 0);
    const Matrix& a3bm1 = tw.word(3, -1);

    auto par = [&](std::size_t i) { return parity_bit(P.space().parity(i)); };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t t = 0; t < n; ++t) {
                    Vec lhs(n);
                    const std::array<std::array<std::size_t, 3>, 3> cyc = {
                        {{x, y, z}, {y, z, x}, {z, x, y}}};
                    for (const auto& [u, v, w] : cyc) {
                        Vec head = S.eval(ab2.column(u), a2b.column(v));
                        Vec tail = C.eval(a2b.column(w), a3.column(t));
                        add_scaled(lhs, C.eval(head, tail),
                                   parity_sign(par(u) * par(w)));
                    }
                    Vec head = S.eval(S.eval(b2.column(x), ab.column(y)), a2b.column(z));
                    Vec rhs = scaled(C.eval(head, a3b.column(t)),
                                     parity_sign(par(x) * par(z)));
                    Vec inner = C.eval(a2b.column(z),
                                       C.eval(a2.column(y), a3bm1.column(t)));
                    add_scaled(rhs, C.eval(a2b2.column(x), inner),
                               parity_sign(par(x) * (par(y) + par(z))));
                    inner = C.eval(a2b.column(z), C.eval(a2.column(x), a3bm1.column(t)));
                    add_scaled(rhs, C.eval(a2b2.column(y), inner),
                               parity_sign(par(x) * par(y)));
                    add_scaled(lhs, rhs, Scalar(-1));
                    if (!is_zero(lhs))
                        rep.violations.push_back({{x, y, z, t}, std::move(lhs)});
                }
    return rep;
}

// Middle four-slot identity: both sides are cyclic sums over (x, y, z).
Report pre_jordan_middle(const BiHomPreJordanSuperalgebra& P) {
    Report rep;
    rep.identity = "pre-jordan-middle";
    const std::size_t n = P.space().dim();
    const SuperProduct C = P.circ();
    const SuperProduct S = star_product(P);
    TwistWords tw(P.alpha(), P.beta());
    const Matrix& ab2 = tw.word(1, 2);
    const Matrix& a2b = tw.word(2, 1);
    const Matrix& a3 = tw.word(3, 0);
    const Matrix& ab = tw.word(1, 1);
    const Matrix& a2 = tw.word(2, 0);
    const Matrix& a2b2 = tw.word(2, 2);

    auto par = [&](std::size_t i) { return parity_bit(P.space().parity(i)); };

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t t = 0; t < n; ++t) {
                    Vec r(n);
                    const std::array<std::array<std::size_t, 3>, 3> cyc = {
                        {{x, y, z}, {y, z, x}, {z, x, y}}};
                    for (const auto& [u, v, w] : cyc) {
                        const Scalar sgn = parity_sign(par(u) * par(w));
                        Vec mid = S.eval(ab.column(v), a2.column(w));
                        add_scaled(r, C.eval(a2b2.column(u), C.eval(mid, a3.column(t))),
                                   sgn);
                        Vec head = S.eval(ab2.column(u), a2b.column(v));
                        add_scaled(r, C.eval(head, C.eval(a2b.column(w), a3.column(t))),
                                   -sgn);
                    }
                    if (!is_zero(r)) rep.violations.push_back({{x, y, z, t}, std::move(r)});
                }
    return rep;
}

} // namespace

ReportSet verify_pre_jordan(const BiHomPreJordanSuperalgebra& P) {
    ReportSet rs;
    Report ma = verify_morphism(P.circ(), P.alpha());
    ma.identity = "circ-morphism-alpha";
    Report mb = verify_morphism(P.circ(), P.beta());
    mb.identity = "circ-morphism-beta";
    rs.append(std::move(ma));
    rs.append(std::move(mb));
    rs.append(pre_jordan_outer(P));
    rs.append(pre_jordan_middle(P));
    return rs;
}

BiHomJordanSuperalgebra pre_to_jordan(const BiHomPreJordanSuperalgebra& P) {
    ReportSet rs = verify_pre_jordan(P);
    if (!rs.passed())
        throw PreJordanAxiomsFailed("pre-jordan axioms fail; the star product is not sound");
    return BiHomJordanSuperalgebra(star_product(P), P.alpha(), P.beta());
}

} // namespace bhj
