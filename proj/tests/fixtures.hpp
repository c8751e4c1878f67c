#pragma once

#include "bhj/operators.hpp"

#include <memory>

// Shared fixture constructors. These are test corpus data, not library code:
// the library never hard-codes a particular algebra.
namespace bhjtest {

using namespace bhj;

// Kaplansky superalgebra on basis e (even), x, y (odd):
// e.e = e, e.x = x.e = x/2, e.y = y.e = y/2, x.y = e, y.x = -e.
inline SuperProduct k3_product() {
    SuperSpace s(1, 2);
    SuperProduct p(s);
    p.set(0, 0, 0, Scalar(1));
    p.set(0, 1, 1, Scalar(1, 2));
    p.set(1, 0, 1, Scalar(1, 2));
    p.set(0, 2, 2, Scalar(1, 2));
    p.set(2, 0, 2, Scalar(1, 2));
    p.set(1, 2, 0, Scalar(1));
    p.set(2, 1, 0, Scalar(-1));
    return p;
}

inline AlgebraPtr make_k3() {
    SuperSpace s(1, 2);
    return std::make_shared<BiHomJordanSuperalgebra>(k3_product(), GradedMap::identity(s),
                                                     GradedMap::identity(s));
}

// Two even generators with a.a = b, everything else zero.
inline AlgebraPtr make_n2() {
    SuperSpace s(2, 0);
    SuperProduct p(s);
    p.set(0, 0, 1, Scalar(1));
    return std::make_shared<BiHomJordanSuperalgebra>(p, GradedMap::identity(s),
                                                     GradedMap::identity(s));
}

inline AlgebraPtr make_fix0(std::size_t even, std::size_t odd) {
    SuperSpace s(even, odd);
    return std::make_shared<BiHomJordanSuperalgebra>(SuperProduct(s),
                                                     GradedMap::identity(s),
                                                     GradedMap::identity(s));
}

// diag(1, c, 1/c) on the (1, 2) space: the scaling automorphism family of the
// Kaplansky product.
inline GradedMap k3_scaling(const Scalar& c) {
    SuperSpace s(1, 2);
    Matrix m(3, 3);
    m.at(0, 0) = Scalar(1);
    m.at(1, 1) = c;
    m.at(2, 2) = c.reciprocal();
    return GradedMap(s, s, Parity::even, std::move(m));
}

inline AlgebraPtr make_k3_twisted(const Scalar& lam, const Scalar& mu) {
    return std::make_shared<BiHomJordanSuperalgebra>(
        yau_twist(*make_k3(), k3_scaling(lam), k3_scaling(mu)));
}

inline Representation zero_rep(AlgebraPtr J, std::size_t even, std::size_t odd) {
    SuperSpace v(even, odd);
    std::vector<GradedMap> rho;
    for (std::size_t i = 0; i < J->dim(); ++i)
        rho.push_back(GradedMap::zero(v, v, J->parity(i)));
    return Representation(std::move(J), v, std::move(rho), GradedMap::identity(v),
                          GradedMap::identity(v));
}

} // namespace bhjtest
