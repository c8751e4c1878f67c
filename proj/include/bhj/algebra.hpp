#pragma once

#include "bhj/product.hpp"
#include "bhj/report.hpp"

#include <map>

namespace bhj {

/// Superspace with an even product and two commuting even twisting
/// endomorphisms alpha, beta. Construction checks the structural invariants
/// (endomorphisms, evenness, commutation); whether the product satisfies the
/// super-symmetry and Jordan identities is the verifiers' business.
class BiHomJordanSuperalgebra {
public:
    BiHomJordanSuperalgebra(SuperProduct product, GradedMap alpha, GradedMap beta);

    const SuperSpace& space() const { return product_.target_space(); }
    const SuperProduct& product() const { return product_; }
    const GradedMap& alpha() const { return alpha_; }
    const GradedMap& beta() const { return beta_; }

    std::size_t dim() const { return space().dim(); }
    Parity parity(std::size_t i) const { return space().parity(i); }

    /// Both twist maps invertible.
    bool is_regular() const;

    /// Both twist maps are product morphisms.
    bool is_multiplicative() const;

private:
    SuperProduct product_;
    GradedMap alpha_;
    GradedMap beta_;
};

/// Memoized powers alpha^a beta^b of a commuting pair of even maps. Negative
/// exponents require invertibility. The words appearing in the identity
/// verifiers stay within exponent 3 per map, so the table stays tiny.
class TwistWords {
public:
    TwistWords(const GradedMap& alpha, const GradedMap& beta);

    const Matrix& word(long a, long b) const;
    Vec apply(long a, long b, const Vec& v) const { return word(a, b).apply(v); }

private:
    const Matrix& pow_of(const GradedMap& base, std::map<long, Matrix>& cache, long k) const;

    GradedMap alpha_, beta_;
    mutable std::map<long, Matrix> alpha_pows_, beta_pows_;
    mutable std::map<std::pair<long, long>, Matrix> words_;
};

/// Residuals of beta(x).alpha(y) = (-1)^{|x||y|} beta(y).alpha(x) over all
/// basis pairs.
Report verify_supersymmetry(const BiHomJordanSuperalgebra& J);

/// Residuals of the graded Jordan identity over all basis quadruples
/// (x, y, z, t): the cyclic sum rotates the (x, y, t) slots through
/// (x,y,t) -> (y,t,x) -> (t,x,y) with prefactors (-1)^{|t|(|x|+|z|)},
/// (-1)^{|x|(|y|+|z|)}, (-1)^{|y|(|t|+|z|)} on the twisted associator
/// ass(b^2(x).ab(y), a^2b(z), a^3(t)), ass(u,v,w) = (u.v).b(w) - a(u).(v.w).
Report verify_jordan_identity(const BiHomJordanSuperalgebra& J);

/// Residuals of f(e_i . e_j) - f(e_i).f(e_j) for an even endomorphism f.
Report verify_morphism(const SuperProduct& product, const GradedMap& f);
Report verify_morphism(const BiHomJordanSuperalgebra& J, const GradedMap& f);

/// Convenience: super-symmetry plus Jordan identity.
ReportSet verify_algebra(const BiHomJordanSuperalgebra& J);

/// Deforms the product of J0 into x.y = a(x).b(y) with new twists (a, b).
/// a and b must commute and be product morphisms of J0.
BiHomJordanSuperalgebra yau_twist(const BiHomJordanSuperalgebra& J0, const GradedMap& a,
                                  const GradedMap& b);

struct UntwistResult {
    BiHomJordanSuperalgebra algebra; // twists are the identity
    ReportSet report;                // verifier verdict on the untwisted product
};

/// Candidate inverse of the twist: x .' y = a^{s-1} b^t (x) . a^s b^{t-1} (y),
/// paired with the identity twists. Requires J multiplicative and regular.
/// The verdict of the two algebra verifiers on the result is returned rather
/// than assumed: away from (s, t) = (0, 0) the construction can fail, and
/// recording that failure is part of the job.
UntwistResult untwist(const BiHomJordanSuperalgebra& J, long s, long t);

/// Superspace with an even product "circ" and two commuting invertible even
/// twisting maps; the splitting counterpart of BiHomJordanSuperalgebra.
class BiHomPreJordanSuperalgebra {
public:
    BiHomPreJordanSuperalgebra(SuperProduct circ, GradedMap alpha, GradedMap beta);

    const SuperSpace& space() const { return circ_.target_space(); }
    const SuperProduct& circ() const { return circ_; }
    const GradedMap& alpha() const { return alpha_; }
    const GradedMap& beta() const { return beta_; }

private:
    SuperProduct circ_;
    GradedMap alpha_;
    GradedMap beta_;
};

/// Symmetrization x * y = x o y + (-1)^{|x||y|} a^-1 b(y) o a b^-1(x).
SuperProduct star_product(const BiHomPreJordanSuperalgebra& P);

/// Checks the two morphism conditions on circ plus the two four-slot
/// compatibility identities (outer and middle), all on basis tuples.
ReportSet verify_pre_jordan(const BiHomPreJordanSuperalgebra& P);

/// The algebra (space, star, alpha, beta). Throws PreJordanAxiomsFailed when
/// verify_pre_jordan reports violations.
BiHomJordanSuperalgebra pre_to_jordan(const BiHomPreJordanSuperalgebra& P);

} // namespace bhj
