#include "bhj/graded_map.hpp"

#include "bhj/errors.hpp"

#include <string>

namespace bhj {

GradedMap::GradedMap(SuperSpace domain, SuperSpace codomain, Parity degree, Matrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), degree_(degree),
      mat_(std::move(matrix)) {
    if (mat_.rows() != codomain_.dim() || mat_.cols() != domain_.dim())
        throw DimensionMismatch("graded map matrix shape does not match its spaces");
    for (std::size_t r = 0; r < mat_.rows(); ++r)
        for (std::size_t c = 0; c < mat_.cols(); ++c)
            if (!mat_.at(r, c).is_zero() &&
                codomain_.parity(r) != domain_.parity(c) + degree_)
                throw InvariantViolation("matrix entry (" + std::to_string(r) + "," +
                                         std::to_string(c) +
                                         ") breaks parity homogeneity of the declared degree");
}

GradedMap GradedMap::identity(const SuperSpace& space) {
    return GradedMap(space, space, Parity::even, Matrix::identity(space.dim()));
}

GradedMap GradedMap::zero(const SuperSpace& domain, const SuperSpace& codomain, Parity degree) {
    return GradedMap(domain, codomain, degree, Matrix(codomain.dim(), domain.dim()));
}

bool GradedMap::is_invertible() const {
    if (mat_.rows() != mat_.cols()) return false;
    try {
        mat_.inverse();
        return true;
    } catch (const SingularMap&) {
        return false;
    }
}

GradedMap GradedMap::inverted() const {
    if (mat_.rows() != mat_.cols())
        throw SingularMap("only square maps can be inverted");
    return GradedMap(codomain_, domain_, degree_, mat_.inverse());
}

GradedMap GradedMap::power(long k) const {
    if (!is_endomorphism())
        throw DimensionMismatch("powers require an endomorphism");
    if (k >= 0 && (k & 1l) == 0)
        return GradedMap(domain_, codomain_, Parity::even, mat_.power(k));
    Parity deg = (k % 2 != 0) ? degree_ : Parity::even;
    return GradedMap(domain_, codomain_, deg, mat_.power(k));
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (f.codomain() != g.domain())
        throw DimensionMismatch("composition spaces do not line up");
    return GradedMap(f.domain(), g.codomain(), g.degree() + f.degree(),
                     g.matrix() * f.matrix());
}

GradedMap dual_map(const GradedMap& f) {
    return GradedMap(f.codomain(), f.domain(), f.degree(), f.matrix().transposed());
}

GradedMap direct_sum_map(const GradedMap& f, const GradedMap& g) {
    if (f.degree() != g.degree())
        throw InvariantViolation("direct sum of maps with different degrees");
    return GradedMap(SuperSpace::direct_sum(f.domain(), g.domain()),
                     SuperSpace::direct_sum(f.codomain(), g.codomain()), f.degree(),
                     block_diag(f.matrix(), g.matrix()));
}

std::pair<SuperSpace, GradedMap> suspend_space(const SuperSpace& space) {
    SuperSpace s_space(space.odd_dim(), space.even_dim());
    Matrix m(space.dim(), space.dim());
    std::size_t odd_rank = 0, even_rank = 0;
    const std::size_t n_odd = space.odd_dim();
    for (std::size_t i = 0; i < space.dim(); ++i) {
        if (space.parity(i) == Parity::odd)
            m.at(odd_rank++, i) = Scalar(1);
        else
            m.at(n_odd + even_rank++, i) = Scalar(1);
    }
    return {s_space, GradedMap(space, s_space, Parity::odd, std::move(m))};
}

GradedMap canonical_reindexing(const SuperSpace& space) {
    SuperSpace target(space.even_dim(), space.odd_dim());
    Matrix m(space.dim(), space.dim());
    std::size_t even_rank = 0, odd_rank = 0;
    const std::size_t n_even = space.even_dim();
    for (std::size_t i = 0; i < space.dim(); ++i) {
        if (space.parity(i) == Parity::even)
            m.at(even_rank++, i) = Scalar(1);
        else
            m.at(n_even + odd_rank++, i) = Scalar(1);
    }
    return GradedMap(space, target, Parity::even, std::move(m));
}

} // namespace bhj
