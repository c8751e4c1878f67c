#pragma once

#include "bhj/matrix.hpp"
#include "bhj/superspace.hpp"

#include <utility>

namespace bhj {

/// Parity-homogeneous linear map between superspaces. Column c of the matrix
/// holds the image coordinates of domain basis vector c; entry (r, c) may be
/// nonzero only when parity(r) = parity(c) + degree. Homogeneity is checked
/// at construction, so a GradedMap is structurally valid by existence.
class GradedMap {
public:
    GradedMap(SuperSpace domain, SuperSpace codomain, Parity degree, Matrix matrix);

    static GradedMap identity(const SuperSpace& space);
    static GradedMap zero(const SuperSpace& domain, const SuperSpace& codomain, Parity degree);

    const SuperSpace& domain() const { return domain_; }
    const SuperSpace& codomain() const { return codomain_; }
    Parity degree() const { return degree_; }
    const Matrix& matrix() const { return mat_; }

    Vec apply(const Vec& v) const { return mat_.apply(v); }

    bool is_endomorphism() const { return domain_ == codomain_; }
    bool is_invertible() const;

    /// Exact inverse; degree is preserved (the inverse of an odd bijection is
    /// odd). Throws SingularMap.
    GradedMap inverted() const;

    /// Integer power of an endomorphism; negative powers invert.
    GradedMap power(long k) const;

    bool operator==(const GradedMap&) const = default;

private:
    SuperSpace domain_;
    SuperSpace codomain_;
    Parity degree_;
    Matrix mat_;
};

/// g after f. Degree adds mod 2.
GradedMap compose(const GradedMap& g, const GradedMap& f);

/// The induced map on dual spaces, xi -> xi . f. Dual bases carry the primal
/// parities, so in coordinates this is the transpose; degree is preserved.
GradedMap dual_map(const GradedMap& f);

/// Block-diagonal map on the direct sum (summand-major index order).
GradedMap direct_sum_map(const GradedMap& f, const GradedMap& g);

/// The parity-reversed space sV together with the odd suspension bijection
/// s : V -> sV. sV is canonical with even_dim(sV) = odd_dim(V); s sends the
/// k-th odd basis vector of V to sV index k and the k-th even one to
/// odd_dim(V) + k.
std::pair<SuperSpace, GradedMap> suspend_space(const SuperSpace& space);

/// Even permutation onto the canonical reordering of a layout space: all even
/// indices first in their original relative order, then the odd ones.
GradedMap canonical_reindexing(const SuperSpace& space);

} // namespace bhj
