#pragma once

#include "bhj/algebra.hpp"

#include <memory>
#include <vector>

namespace bhj {

using AlgebraPtr = std::shared_ptr<const BiHomJordanSuperalgebra>;

/// Pointer identity or structural equality of the underlying algebras.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Module space V with left/right action families and twist maps. The
/// action of basis element e_i is a parity-homogeneous map of degree
/// parity(i), so the families are even as maps J -> gl(V).
class Bimodule {
public:
    Bimodule(AlgebraPtr algebra, SuperSpace space, std::vector<GradedMap> left,
             std::vector<GradedMap> right, GradedMap alpha_v, GradedMap beta_v);

    const AlgebraPtr& algebra() const { return algebra_; }
    const SuperSpace& space() const { return space_; }
    const std::vector<GradedMap>& left() const { return left_; }
    const std::vector<GradedMap>& right() const { return right_; }
    const GradedMap& alpha_v() const { return alpha_v_; }
    const GradedMap& beta_v() const { return beta_v_; }

    /// Linear extension of the left action to an algebra coordinate vector.
    Matrix left_of(const Vec& coeffs) const;
    Matrix right_of(const Vec& coeffs) const;

    /// Replaces one action matrix entry; used by mutation tests.
    Bimodule with_entry(bool right_family, std::size_t basis, std::size_t row,
                        std::size_t col, Scalar value) const;

private:
    AlgebraPtr algebra_;
    SuperSpace space_;
    std::vector<GradedMap> left_, right_;
    GradedMap alpha_v_, beta_v_;
};

/// Single-family representation; twist maps must be invertible.
class Representation {
public:
    Representation(AlgebraPtr algebra, SuperSpace space, std::vector<GradedMap> rho,
                   GradedMap alpha_v, GradedMap beta_v, int dual_level = 0);

    const AlgebraPtr& algebra() const { return algebra_; }
    const SuperSpace& space() const { return space_; }
    const std::vector<GradedMap>& rho() const { return rho_; }
    const GradedMap& alpha_v() const { return alpha_v_; }
    const GradedMap& beta_v() const { return beta_v_; }

    /// Parity of the double-dual identification: 0 for primal spaces, 1 for
    /// spaces obtained by one dualization. Dualizing at level 1 applies the
    /// canonical identification of V** with V, which twists odd action
    /// matrices by -1; tracking the level makes dualization an involution.
    int dual_level() const { return dual_level_; }

    Matrix action_of(const Vec& coeffs) const;

    Representation with_rho(std::size_t basis, GradedMap replacement) const;

private:
    AlgebraPtr algebra_;
    SuperSpace space_;
    std::vector<GradedMap> rho_;
    GradedMap alpha_v_, beta_v_;
    int dual_level_;
};

/// Checks the defining action conditions on all basis tuples: the left/right
/// compatibility linking the two families, then the outer and middle
/// four-slot module identities. When the algebra is multiplicative the
/// twist-commutation consequences are checked too and reported separately as
/// auxiliary results.
ReportSet verify_bimodule(const Bimodule& B);

/// Checks the twist compatibility plus the outer and middle operator
/// identities of a representation, each side assembled as an operator word
/// and evaluated pointwise on every basis vector of V.
ReportSet verify_representation(const Representation& R);

/// V = J with rho(x) = left multiplication by x and the algebra's twists.
Representation adjoint_rep(AlgebraPtr J);

struct BimoduleResult {
    Bimodule bimodule;
    ReportSet report; // verify_bimodule of the result
};

/// The unique bimodule with left action rho: the right action is
/// rho(beta alpha^-1 (x)) . alpha_V beta_V^-1, the choice that makes the
/// semidirect product super-symmetric.
BimoduleResult rep_to_bimodule(const Representation& R);

/// Algebra on J + V with (x+u).(y+v) = x.y + l(x)v + (-1)^{|u||y|} r(y)u and
/// block-diagonal twists. Always constructed; validity of the result is the
/// verifiers' verdict.
BiHomJordanSuperalgebra semidirect_product(const Bimodule& B);

/// Block-diagonal representation on V1 + V2. Throws AlgebraMismatch.
Representation direct_sum_rep(const Representation& r1, const Representation& r2);

/// Dual representation on V* (same layout, dual-basis parity = primal).
/// Action matrices are the Koszul-signed transposes of rho(beta(x)) composed
/// with the transpose of beta_V^-2; the twists dualize to the transposed
/// inverses. Applying this twice returns the original entrywise.
Representation dual_rep(const Representation& R);

/// dual_rep(adjoint_rep(J)).
Representation coadjoint_rep(AlgebraPtr J);

/// semidirect_product(rep_to_bimodule(coadjoint_rep(J))): an algebra
/// structure on J + J*.
BiHomJordanSuperalgebra coadjoint_semidirect(AlgebraPtr J);

/// Representation on sV with the twists conjugated through the suspension
/// and rho^s(x) = (-1)^{|x|} s . rho(x) . s^-1.
Representation parity_reverse_rep(const Representation& R);

/// Checks Phi alpha_1 = alpha_2 Phi, Phi beta_1 = beta_2 Phi and
/// Phi rho_1(x) = rho_2(x) Phi for all basis x. Phi may be even or odd but
/// must be invertible.
ReportSet check_rep_isomorphism(const Representation& r1, const Representation& r2,
                                const GradedMap& phi);

/// check_rep_isomorphism(R, parity_reverse_rep(R), Phi).
ReportSet check_self_reversing(const Representation& R, const GradedMap& phi);

/// The block-swap witness that R + R^s is self-reversing: the even
/// isomorphism (V + sV) -> s(V + sV) obtained by swapping the summands
/// through the suspension. Passes check_self_reversing for the direct sum
/// of any representation with its parity reverse.
GradedMap self_reversing_swap(const Representation& R);

} // namespace bhj
