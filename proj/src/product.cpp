#include "bhj/product.hpp"

#include "bhj/errors.hpp"

#include <string>

namespace bhj {

void SuperProduct::set(std::size_t i, std::size_t j, std::size_t k, Scalar c) {
    if (i >= left_.dim() || j >= right_.dim() || k >= target_.dim())
        throw DimensionMismatch("structure constant index out of range");
    if (c.is_zero()) {
        constants_.erase({i, j, k});
        return;
    }
    if (target_.parity(k) != left_.parity(i) + right_.parity(j))
        throw InvariantViolation("structure constant (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) +
                                 ") breaks evenness of the product");
    constants_[{i, j, k}] = std::move(c);
}

void SuperProduct::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
    auto it = constants_.find({i, j, k});
    Scalar next = (it == constants_.end()) ? c : it->second + c;
    set(i, j, k, std::move(next));
}

Vec SuperProduct::eval_basis(std::size_t i, std::size_t j) const {
    Vec out(target_.dim());
    auto it = constants_.lower_bound({i, j, 0});
    for (; it != constants_.end() && it->first.i == i && it->first.j == j; ++it)
        out[it->first.k] += it->second;
    return out;
}

Vec SuperProduct::eval(const Vec& u, const Vec& v) const {
    if (u.size() != left_.dim() || v.size() != right_.dim())
        throw DimensionMismatch("product arguments have wrong dimensions");
    Vec out(target_.dim());
    for (const auto& [key, c] : constants_) {
        Scalar w = u[key.i] * v[key.j];
        if (!w.is_zero()) out[key.k] += w * c;
    }
    return out;
}

SuperProduct SuperProduct::twisted_by(const GradedMap& left, const GradedMap& right) const {
    if (left.degree() != Parity::even || right.degree() != Parity::even)
        throw InvariantViolation("slot maps of a product twist must be even");
    if (left.codomain() != left_ || right.codomain() != right_)
        throw DimensionMismatch("slot maps do not land in the product's spaces");
    SuperProduct out(left.domain(), right.domain(), target_);
    for (std::size_t i = 0; i < out.left_.dim(); ++i)
        for (std::size_t j = 0; j < out.right_.dim(); ++j) {
            Vec w = eval(left.matrix().column(i), right.matrix().column(j));
            for (std::size_t k = 0; k < w.size(); ++k)
                if (!w[k].is_zero()) out.set(i, j, k, w[k]);
        }
    return out;
}

SuperProduct SuperProduct::conjugated_by(const GradedMap& iso) const {
    if (iso.degree() != Parity::even)
        throw InvariantViolation("product transport requires an even isomorphism");
    GradedMap back = iso.inverted();
    SuperProduct out(iso.codomain(), iso.codomain(), iso.codomain());
    for (std::size_t i = 0; i < out.left_.dim(); ++i)
        for (std::size_t j = 0; j < out.right_.dim(); ++j) {
            Vec w = iso.apply(eval(back.matrix().column(i), back.matrix().column(j)));
            for (std::size_t k = 0; k < w.size(); ++k)
                if (!w[k].is_zero()) out.set(i, j, k, w[k]);
        }
    return out;
}

} // namespace bhj
