#pragma once

#include "bhj/representation.hpp"

#include <memory>
#include <vector>

namespace bhj {

using RepresentationPtr = std::shared_ptr<const Representation>;

/// Homogeneous map T : V -> J intertwining the twists (alpha T = T alpha_V,
/// beta T = T beta_V). Intertwining is validated at construction; the
/// quadratic compatibility is the verifier's verdict.
class OOperator {
public:
    OOperator(RepresentationPtr rep, GradedMap T);

    const RepresentationPtr& rep() const { return rep_; }
    const GradedMap& map() const { return map_; }
    Parity parity() const { return map_.degree(); }

private:
    RepresentationPtr rep_;
    GradedMap map_;
};

/// Checks the twist intertwining as matrix equations and the quadratic
/// compatibility T(u).T(v) = T((-1)^{|T|(|T|+|u|)} rho(T(u)) v
/// + (-1)^{|u|(|v|+|T|)} rho(T(aV^-1 bV v)) aV bV^-1 (u)) on all basis pairs.
ReportSet verify_o_operator(const Representation& rep, const GradedMap& T);

/// The quadratic compatibility with its second sign read through the
/// symmetrization pattern, (-1)^{|u||v|} (-1)^{|T|(|v|+|T|)} instead of
/// (-1)^{|u|(|v|+|T|)}. The two readings agree for even T and can disagree
/// for odd T; the audit suite records which one each fixture satisfies.
Report verify_o_operator_star_reading(const Representation& rep, const GradedMap& T);

/// Weight-zero Rota-Baxter check R(x).R(y) =
/// (-1)^{|R|(|x|+|R|)} R(R(x).y + x.R(y)) on all basis pairs. R must commute
/// with alpha and beta (throws NonCommuting). Equivalent to
/// verify_o_operator(adjoint_rep(J), R); both code paths exist and the test
/// suite cross-checks them.
ReportSet verify_rota_baxter(const BiHomJordanSuperalgebra& J, const GradedMap& R);

struct InducedPreJordan {
    BiHomPreJordanSuperalgebra algebra;
    ReportSet report; // verify_pre_jordan of the result
};

/// For even T: the product u o v = rho(T(u)) v on V with the module twists.
/// Throws WrongParity for odd operators and OOperatorAxiomsFailed when the
/// operator fails its own verifier.
InducedPreJordan induce_pre_jordan_even(const OOperator& op);

/// For odd T: the product su . sv = s(u o v) transported to sV, where
/// u o v = (-1)^{|T|(|u|+|T|)} rho(T(u)) v, with suspended twists.
InducedPreJordan induce_pre_jordan_odd(const OOperator& op);

/// T^s = T . s^-1 from the parity-reverse representation, with the opposite
/// parity. The result is re-verified against the reversed representation.
OOperator o_op_suspend(const OOperator& op);

/// Extension (u, sv) -> T(u) to the direct sum of the representation with
/// its parity reverse; same parity, re-verified.
OOperator o_op_extend(const OOperator& op);

/// T^s . Phi on the same representation, for a self-reversing witness Phi.
/// Parity flips. Throws NotSelfReversing when Phi fails its check.
OOperator o_op_via_isomorphism(const OOperator& op, const GradedMap& phi);

/// All parity-homogeneous candidate matrices with entries drawn from coeffs,
/// in lexicographic order of the flattened matrix. Throws BudgetExceeded
/// when |coeffs|^free_entries exceeds the budget.
std::vector<Matrix> o_operator_grid(const Representation& rep, Parity parity,
                                    std::vector<Scalar> coeffs, unsigned long budget);

/// Exhaustive certification of the operator set over a finite coefficient
/// grid: enumerates candidates, prunes by the linear twist conditions, then
/// filters by the quadratic compatibility. Deterministic order; jobs > 1
/// splits the grid across threads without changing the output.
std::vector<OOperator> search_o_operators(const RepresentationPtr& rep, Parity parity,
                                          std::vector<Scalar> coeffs, unsigned long budget,
                                          unsigned jobs = 1);

} // namespace bhj
