#include "bhj/representation.hpp"

#include "bhj/errors.hpp"

#include <array>
#include <string>

namespace bhj {

namespace {

void validate_action_family(const SuperSpace& algebra_space, const SuperSpace& module_space,
                            const std::vector<GradedMap>& family, const char* what) {
    if (family.size() != algebra_space.dim())
        throw DimensionMismatch(std::string(what) + ": one action map per algebra basis element");
    for (std::size_t i = 0; i < family.size(); ++i) {
        const GradedMap& m = family[i];
        if (m.domain() != module_space || m.codomain() != module_space)
            throw DimensionMismatch(std::string(what) + ": action maps must act on the module space");
        if (m.degree() != algebra_space.parity(i))
            throw InvariantViolation(std::string(what) +
                                     ": action of basis element " + std::to_string(i) +
                                     " must have its parity as degree");
    }
}

void validate_module_twists(const SuperSpace& space, const GradedMap& a, const GradedMap& b,
                            const char* what) {
    if (!a.is_endomorphism() || a.domain() != space || !b.is_endomorphism() ||
        b.domain() != space)
        throw DimensionMismatch(std::string(what) + ": twist maps must act on the module space");
    if (a.degree() != Parity::even || b.degree() != Parity::even)
        throw InvariantViolation(std::string(what) + ": twist maps must be even");
    if (a.matrix() * b.matrix() != b.matrix() * a.matrix())
        throw NonCommuting(std::string(what) + ": twist maps do not commute");
}

Matrix family_of(const std::vector<GradedMap>& family, const Vec& coeffs,
                 std::size_t module_dim) {
    Matrix out(module_dim, module_dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        out = out + family[i].matrix().scaled(coeffs[i]);
    }
    return out;
}

// Collects nonzero columns of a residual matrix as per-basis-vector
// violations, appending the column index to the tuple prefix.
void collect_columns(Report& rep, std::vector<std::size_t> prefix, const Matrix& residual) {
    for (std::size_t u = 0; u < residual.cols(); ++u) {
        Vec col = residual.column(u);
        if (is_zero(col)) continue;
        auto where = prefix;
        where.push_back(u);
        rep.violations.push_back({std::move(where), std::move(col)});
    }
}

} // namespace

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->space() == b->space() && a->product() == b->product() &&
           a->alpha() == b->alpha() && a->beta() == b->beta();
}

Bimodule::Bimodule(AlgebraPtr algebra, SuperSpace space, std::vector<GradedMap> left,
                   std::vector<GradedMap> right, GradedMap alpha_v, GradedMap beta_v)
    : algebra_(std::move(algebra)), space_(std::move(space)), left_(std::move(left)),
      right_(std::move(right)), alpha_v_(std::move(alpha_v)), beta_v_(std::move(beta_v)) {
    if (!algebra_) throw InvariantViolation("bimodule without an algebra");
    validate_action_family(algebra_->space(), space_, left_, "bimodule left action");
    validate_action_family(algebra_->space(), space_, right_, "bimodule right action");
    validate_module_twists(space_, alpha_v_, beta_v_, "bimodule");
}

Matrix Bimodule::left_of(const Vec& coeffs) const {
    return family_of(left_, coeffs, space_.dim());
}

Matrix Bimodule::right_of(const Vec& coeffs) const {
    return family_of(right_, coeffs, space_.dim());
}

Bimodule Bimodule::with_entry(bool right_family, std::size_t basis, std::size_t row,
                              std::size_t col, Scalar value) const {
    auto family = right_family ? right_ : left_;
    Matrix m = family[basis].matrix();
    m.at(row, col) = std::move(value);
    family[basis] = GradedMap(space_, space_, family[basis].degree(), std::move(m));
    return Bimodule(algebra_, space_, right_family ? left_ : family,
                    right_family ? family : right_, alpha_v_, beta_v_);
}

Representation::Representation(AlgebraPtr algebra, SuperSpace space,
                               std::vector<GradedMap> rho, GradedMap alpha_v,
                               GradedMap beta_v, int dual_level)
    : algebra_(std::move(algebra)), space_(std::move(space)), rho_(std::move(rho)),
      alpha_v_(std::move(alpha_v)), beta_v_(std::move(beta_v)),
      dual_level_(dual_level & 1) {
    if (!algebra_) throw InvariantViolation("representation without an algebra");
    validate_action_family(algebra_->space(), space_, rho_, "representation");
    validate_module_twists(space_, alpha_v_, beta_v_, "representation");
    if (!alpha_v_.is_invertible() || !beta_v_.is_invertible())
        throw SingularMap("representation twists must be automorphisms");
}

Matrix Representation::action_of(const Vec& coeffs) const {
    return family_of(rho_, coeffs, space_.dim());
}

Representation Representation::with_rho(std::size_t basis, GradedMap replacement) const {
    auto rho = rho_;
    rho[basis] = std::move(replacement);
    return Representation(algebra_, space_, std::move(rho), alpha_v_, beta_v_, dual_level_);
}

// ---------------------------------------------------------------------------
// Bimodule verifier
// ---------------------------------------------------------------------------

namespace {

struct BimoduleWords {
    const BiHomJordanSuperalgebra& J;
    const Bimodule& B;
    TwistWords tw;
    Matrix aV, bV, aV2bV, aVbV, bV2, aV3bV, aV3;

    explicit BimoduleWords(const Bimodule& b)
        : J(*b.algebra()), B(b), tw(J.alpha(), J.beta()), aV(b.alpha_v().matrix()),
          bV(b.beta_v().matrix()), aV2bV(aV * aV * bV), aVbV(aV * bV), bV2(bV * bV),
          aV3bV(aV * aV * aV * bV), aV3(aV * aV * aV) {}

    Vec jcol(long a, long bexp, std::size_t i) const { return tw.word(a, bexp).column(i); }
    unsigned par(std::size_t i) const { return parity_bit(J.parity(i)); }
};

Report bimodule_compatibility(const BimoduleWords& W) {
    Report rep;
    rep.identity = "action-compatibility";
    const std::size_t n = W.J.dim();
    for (std::size_t x = 0; x < n; ++x) {
        Matrix residual = W.B.left_of(W.jcol(0, 1, x)) * W.aV -
                          W.B.right_of(W.jcol(1, 0, x)) * W.bV;
        collect_columns(rep, {x}, residual);
    }
    return rep;
}

// Outer module identity: the condition obtained by placing the module vector
// in the fourth slot of the Jordan identity of the semidirect product.
Report bimodule_outer(const BimoduleWords& W) {
    Report rep;
    rep.identity = "module-identity-outer";
    const std::size_t n = W.J.dim();
    const SuperProduct& P = W.J.product();
    const Matrix& a1 = W.tw.word(1, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            Vec head = P.eval(W.jcol(0, 2, x), W.jcol(1, 1, y)); // b2(x).ab(y)
            Matrix left_head = W.B.left_of(a1.apply(head));
            for (std::size_t z = 0; z < n; ++z) {
                const unsigned px = W.par(x), py = W.par(y), pz = W.par(z);
                Matrix lhs = W.B.left_of(P.eval(head, W.jcol(2, 1, z))) * W.aV3bV -
                             left_head * W.B.left_of(W.jcol(2, 1, z)) * W.aV3;
                Matrix rhs =
                    (W.B.right_of(P.eval(W.jcol(2, 1, z), W.jcol(3, 0, x))) * W.aV *
                     W.B.left_of(W.jcol(0, 2, y)) * W.aVbV)
                        .scaled(parity_sign(pz * (px + py)));
                rhs = rhs + (W.B.right_of(W.jcol(3, 1, x)) * W.B.right_of(W.jcol(2, 1, z)) *
                             W.B.left_of(W.jcol(0, 2, y)) * W.aVbV)
                                .scaled(-parity_sign(py * pz));
                rhs = rhs + (W.B.right_of(P.eval(W.jcol(2, 1, z), W.jcol(3, 0, y))) * W.aV *
                             W.B.right_of(W.jcol(1, 1, x)) * W.bV2)
                                .scaled(parity_sign(pz * (px + py) + px * py));
                rhs = rhs + (W.B.right_of(W.jcol(3, 1, y)) * W.B.right_of(W.jcol(2, 1, z)) *
                             W.B.right_of(W.jcol(1, 1, x)) * W.bV2)
                                .scaled(-parity_sign(px * (py + pz)));
                collect_columns(rep, {x, y, z}, lhs - rhs);
            }
        }
    return rep;
}

// Middle module identity: module vector in the third slot.
Report bimodule_middle(const BimoduleWords& W) {
    Report rep;
    rep.identity = "module-identity-middle";
    const std::size_t n = W.J.dim();
    const SuperProduct& P = W.J.product();
    const Matrix& a1 = W.tw.word(1, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const unsigned px = W.par(x), py = W.par(y), pz = W.par(z);
                Vec head_yz = P.eval(W.jcol(0, 2, y), W.jcol(1, 1, z)); // b2(y).ab(z)
                Vec head_zx = P.eval(W.jcol(0, 2, z), W.jcol(1, 1, x));
                Vec head_xy = P.eval(W.jcol(0, 2, x), W.jcol(1, 1, y));
                Matrix lhs = W.B.right_of(W.jcol(3, 1, x)) * W.B.left_of(head_yz) * W.aV2bV -
                             (W.B.left_of(a1.apply(head_yz)) * W.B.right_of(W.jcol(3, 0, x)) *
                              W.aV2bV)
                                 .scaled(parity_sign(px * (py + pz)));
                Matrix rhs =
                    (W.B.left_of(a1.apply(head_zx)) * W.B.right_of(W.jcol(3, 0, y)) * W.aV2bV)
                        .scaled(parity_sign(pz * (px + py)));
                rhs = rhs + (W.B.right_of(W.jcol(3, 1, y)) * W.B.left_of(head_zx) * W.aV2bV)
                                .scaled(-parity_sign(px * (py + pz)));
                rhs = rhs + W.B.left_of(a1.apply(head_xy)) * W.B.right_of(W.jcol(3, 0, z)) *
                                W.aV2bV;
                rhs = rhs + (W.B.right_of(W.jcol(3, 1, z)) * W.B.left_of(head_xy) * W.aV2bV)
                                .scaled(-parity_sign(pz * (px + py)));
                collect_columns(rep, {x, y, z}, lhs - rhs);
            }
    return rep;
}

// Twist-commutation consequences for multiplicative algebras; auxiliary.
Report bimodule_twist_commutation(const BimoduleWords& W, bool right_family) {
    Report rep;
    rep.identity = right_family ? "action-twist-right" : "action-twist-left";
    rep.auxiliary = true;
    const std::size_t n = W.J.dim();
    auto action = [&](const Vec& v) {
        return right_family ? W.B.right_of(v) : W.B.left_of(v);
    };
    for (std::size_t x = 0; x < n; ++x) {
        Vec ex = basis_vector(n, x);
        Matrix ra = W.aV * action(ex) - action(W.jcol(1, 0, x)) * W.aV;
        Matrix rb = W.bV * action(ex) - action(W.jcol(0, 1, x)) * W.bV;
        collect_columns(rep, {0, x}, ra);
        collect_columns(rep, {1, x}, rb);
    }
    return rep;
}

} // namespace

ReportSet verify_bimodule(const Bimodule& B) {
    BimoduleWords W(B);
    ReportSet rs;
    rs.append(bimodule_compatibility(W));
    rs.append(bimodule_outer(W));
    rs.append(bimodule_middle(W));
    if (B.algebra()->is_multiplicative()) {
        rs.append(bimodule_twist_commutation(W, false));
        rs.append(bimodule_twist_commutation(W, true));
    }
    return rs;
}

// ---------------------------------------------------------------------------
// Representation verifier
// ---------------------------------------------------------------------------

namespace {

struct RepWords {
    const BiHomJordanSuperalgebra& J;
    const Representation& R;
    TwistWords tw;
    Matrix aV3, aV3bV, aV3bVm1;

    explicit RepWords(const Representation& r)
        : J(*r.algebra()), R(r), tw(J.alpha(), J.beta()) {
        const Matrix& aV = r.alpha_v().matrix();
        const Matrix& bV = r.beta_v().matrix();
        aV3 = aV * aV * aV;
        aV3bV = aV3 * bV;
        aV3bVm1 = aV3 * bV.inverse();
    }

    Vec jcol(long a, long b, std::size_t i) const { return tw.word(a, b).column(i); }
    unsigned par(std::size_t i) const { return parity_bit(J.parity(i)); }
};

Report rep_twist_compatibility(const RepWords& W) {
    Report rep;
    rep.identity = "rep-twist-compatibility";
    const std::size_t n = W.J.dim();
    const Matrix& aV = W.R.alpha_v().matrix();
    const Matrix& bV = W.R.beta_v().matrix();
    for (std::size_t x = 0; x < n; ++x) {
        const Matrix& rx = W.R.rho()[x].matrix();
        collect_columns(rep, {0, x}, aV * rx - W.R.action_of(W.jcol(1, 0, x)) * aV);
        collect_columns(rep, {1, x}, bV * rx - W.R.action_of(W.jcol(0, 1, x)) * bV);
    }
    return rep;
}

Report rep_outer(const RepWords& W) {
    Report rep;
    rep.identity = "rep-jordan-outer";
    const std::size_t n = W.J.dim();
    const SuperProduct& P = W.J.product();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const unsigned px = W.par(x), py = W.par(y), pz = W.par(z);
                const std::array<std::array<std::size_t, 3>, 3> cyc = {
                    {{x, y, z}, {y, z, x}, {z, x, y}}};
                Matrix lhs(W.R.space().dim(), W.R.space().dim());
                for (const auto& [u, v, w] : cyc) {
                    Vec head = P.eval(W.jcol(1, 2, u), W.jcol(2, 1, v));
                    lhs = lhs + (W.R.action_of(head) * W.R.action_of(W.jcol(2, 1, w)) * W.aV3)
                                    .scaled(parity_sign(W.par(u) * W.par(w)));
                }
                Vec nested =
                    P.eval(P.eval(W.jcol(0, 2, x), W.jcol(1, 1, y)), W.jcol(2, 1, z));
                Matrix rhs =
                    (W.R.action_of(nested) * W.aV3bV).scaled(parity_sign(px * pz));
                rhs = rhs + (W.R.action_of(W.jcol(2, 2, x)) * W.R.action_of(W.jcol(2, 1, z)) *
                             W.R.action_of(W.jcol(2, 0, y)) * W.aV3bVm1)
                                .scaled(parity_sign(pz * (px + py)));
                rhs = rhs + (W.R.action_of(W.jcol(2, 2, y)) * W.R.action_of(W.jcol(2, 1, z)) *
                             W.R.action_of(W.jcol(2, 0, x)) * W.aV3bVm1)
                                .scaled(parity_sign(px * py));
                collect_columns(rep, {x, y, z}, lhs - rhs);
            }
    return rep;
}

Report rep_middle(const RepWords& W) {
    Report rep;
    rep.identity = "rep-jordan-middle";
    const std::size_t n = W.J.dim();
    const SuperProduct& P = W.J.product();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                const std::array<std::array<std::size_t, 3>, 3> cyc = {
                    {{x, y, z}, {y, z, x}, {z, x, y}}};
                Matrix residual(W.R.space().dim(), W.R.space().dim());
                for (const auto& [u, v, w] : cyc) {
                    const Scalar sgn = parity_sign(W.par(u) * W.par(w));
                    Vec mid = P.eval(W.jcol(1, 1, v), W.jcol(2, 0, w));
                    residual = residual + (W.R.action_of(W.jcol(2, 2, u)) *
                                           W.R.action_of(mid) * W.aV3)
                                              .scaled(sgn);
                    Vec head = P.eval(W.jcol(1, 2, u), W.jcol(2, 1, v));
                    residual = residual - (W.R.action_of(head) *
                                           W.R.action_of(W.jcol(2, 1, w)) * W.aV3)
                                              .scaled(sgn);
                }
                collect_columns(rep, {x, y, z}, residual);
            }
    return rep;
}

} // namespace

ReportSet verify_representation(const Representation& R) {
    RepWords W(R);
    ReportSet rs;
    rs.append(rep_twist_compatibility(W));
    rs.append(rep_outer(W));
    rs.append(rep_middle(W));
    return rs;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

Representation adjoint_rep(AlgebraPtr J) {
    if (!J) throw InvariantViolation("adjoint of a null algebra");
    const std::size_t n = J->dim();
    std::vector<GradedMap> rho;
    rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec w = J->product().eval_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) m.at(k, j) = w[k];
        }
        rho.emplace_back(J->space(), J->space(), J->parity(i), std::move(m));
    }
    SuperSpace space = J->space();
    GradedMap alpha = J->alpha(), beta = J->beta();
    return Representation(std::move(J), std::move(space), std::move(rho), std::move(alpha),
                          std::move(beta));
}

BimoduleResult rep_to_bimodule(const Representation& R) {
    const BiHomJordanSuperalgebra& J = *R.algebra();
    if (!J.is_regular()) throw SingularMap("bimodule bridge needs a regular algebra");
    const std::size_t n = J.dim();
    TwistWords tw(J.alpha(), J.beta());
    const Matrix& bam1 = tw.word(-1, 1); // beta alpha^-1
    Matrix avbvm1 = R.alpha_v().matrix() * R.beta_v().matrix().inverse();
    std::vector<GradedMap> right;
    right.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        right.emplace_back(R.space(), R.space(), J.parity(i),
                           R.action_of(bam1.column(i)) * avbvm1);
    Bimodule b(R.algebra(), R.space(), R.rho(), std::move(right), R.alpha_v(), R.beta_v());
    ReportSet report = verify_bimodule(b);
    return {std::move(b), std::move(report)};
}

BiHomJordanSuperalgebra semidirect_product(const Bimodule& B) {
    const BiHomJordanSuperalgebra& J = *B.algebra();
    const std::size_t nj = J.dim(), nv = B.space().dim();
    SuperSpace sum = SuperSpace::direct_sum(J.space(), B.space());
    SuperProduct P(sum);
    for (const auto& [key, c] : J.product().constants()) P.set(key.i, key.j, key.k, c);
    for (std::size_t i = 0; i < nj; ++i) {
        const Matrix& li = B.left()[i].matrix();
        for (std::size_t j = 0; j < nv; ++j)
            for (std::size_t k = 0; k < nv; ++k)
                if (!li.at(k, j).is_zero()) P.set(i, nj + j, nj + k, li.at(k, j));
    }
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nj; ++j) {
            const Scalar sgn = koszul_sign(B.space().parity(i), J.parity(j));
            const Matrix& rj = B.right()[j].matrix();
            for (std::size_t k = 0; k < nv; ++k)
                if (!rj.at(k, i).is_zero()) P.set(nj + i, j, nj + k, sgn * rj.at(k, i));
        }
    return BiHomJordanSuperalgebra(std::move(P),
                                   direct_sum_map(J.alpha(), B.alpha_v()),
                                   direct_sum_map(J.beta(), B.beta_v()));
}

Representation direct_sum_rep(const Representation& r1, const Representation& r2) {
    if (!same_algebra(r1.algebra(), r2.algebra()))
        throw AlgebraMismatch("direct sum of representations of different algebras");
    const std::size_t n = r1.algebra()->dim();
    std::vector<GradedMap> rho;
    rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        rho.push_back(direct_sum_map(r1.rho()[i], r2.rho()[i]));
    return Representation(r1.algebra(), SuperSpace::direct_sum(r1.space(), r2.space()),
                          std::move(rho), direct_sum_map(r1.alpha_v(), r2.alpha_v()),
                          direct_sum_map(r1.beta_v(), r2.beta_v()));
}

Representation dual_rep(const Representation& R) {
    const BiHomJordanSuperalgebra& J = *R.algebra();
    const std::size_t n = J.dim();
    const std::size_t nv = R.space().dim();
    Matrix bvm2t = R.beta_v().matrix().power(-2).transposed();
    std::vector<GradedMap> rho;
    rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned px = parity_bit(J.parity(i));
        Matrix m = R.action_of(J.beta().matrix().column(i));
        // Koszul-signed transpose: negate the columns indexed by odd
        // functionals when the acting element is odd.
        Matrix d(nv, nv);
        for (std::size_t r = 0; r < nv; ++r)
            for (std::size_t c = 0; c < nv; ++c)
                d.at(r, c) =
                    parity_sign(px * parity_bit(R.space().parity(c))) * m.at(c, r);
        Matrix mi = d * bvm2t;
        if (R.dual_level() == 1)
            // Canonical identification of V** with V.
            mi = mi.scaled(parity_sign(px));
        rho.emplace_back(R.space(), R.space(), J.parity(i), std::move(mi));
    }
    return Representation(R.algebra(), R.space(), std::move(rho),
                          dual_map(R.alpha_v().inverted()),
                          dual_map(R.beta_v().inverted()), R.dual_level() ^ 1);
}

Representation coadjoint_rep(AlgebraPtr J) { return dual_rep(adjoint_rep(std::move(J))); }

BiHomJordanSuperalgebra coadjoint_semidirect(AlgebraPtr J) {
    return semidirect_product(rep_to_bimodule(coadjoint_rep(std::move(J))).bimodule);
}

Representation parity_reverse_rep(const Representation& R) {
    auto [s_space, s] = suspend_space(R.space());
    GradedMap s_inv = s.inverted();
    const std::size_t n = R.algebra()->dim();
    std::vector<GradedMap> rho;
    rho.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Parity p = R.algebra()->parity(i);
        Matrix m = (s.matrix() * R.rho()[i].matrix() * s_inv.matrix())
                       .scaled(parity_sign(parity_bit(p)));
        rho.emplace_back(s_space, s_space, p, std::move(m));
    }
    return Representation(R.algebra(), s_space, std::move(rho),
                          compose(s, compose(R.alpha_v(), s_inv)),
                          compose(s, compose(R.beta_v(), s_inv)), R.dual_level());
}

ReportSet check_rep_isomorphism(const Representation& r1, const Representation& r2,
                                const GradedMap& phi) {
    if (!same_algebra(r1.algebra(), r2.algebra()))
        throw AlgebraMismatch("isomorphism check across different algebras");
    if (phi.domain() != r1.space() || phi.codomain() != r2.space())
        throw DimensionMismatch("isomorphism candidate does not connect the module spaces");
    if (!phi.is_invertible())
        throw SingularMap("isomorphism candidate is not invertible");
    ReportSet rs;
    Report ra;
    ra.identity = "isomorphism-alpha";
    collect_columns(ra, {},
                    phi.matrix() * r1.alpha_v().matrix() -
                        r2.alpha_v().matrix() * phi.matrix());
    Report rb;
    rb.identity = "isomorphism-beta";
    collect_columns(rb, {},
                    phi.matrix() * r1.beta_v().matrix() -
                        r2.beta_v().matrix() * phi.matrix());
    Report rr;
    rr.identity = "isomorphism-action";
    for (std::size_t i = 0; i < r1.algebra()->dim(); ++i)
        collect_columns(rr, {i},
                        phi.matrix() * r1.rho()[i].matrix() -
                            r2.rho()[i].matrix() * phi.matrix());
    rs.append(std::move(ra));
    rs.append(std::move(rb));
    rs.append(std::move(rr));
    return rs;
}

ReportSet check_self_reversing(const Representation& R, const GradedMap& phi) {
    return check_rep_isomorphism(R, parity_reverse_rep(R), phi);
}

GradedMap self_reversing_swap(const Representation& R) {
    auto [s_space, s] = suspend_space(R.space());
    SuperSpace sum = SuperSpace::direct_sum(R.space(), s_space);
    auto [s_sum_space, s_sum] = suspend_space(sum);
    const std::size_t nv = R.space().dim();
    Matrix s_inv = s.matrix().inverse();
    Matrix swap(2 * nv, 2 * nv); // (u, sv) -> (v, su)
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            swap.at(i, nv + j) = s_inv.at(i, j);
            swap.at(nv + i, j) = s.matrix().at(i, j);
        }
    return GradedMap(sum, s_sum_space, Parity::even, s_sum.matrix() * swap);
}

} // namespace bhj
