#pragma once

#include "bhj/graded_map.hpp"

#include <compare>
#include <map>

namespace bhj {

struct ConstKey {
    std::size_t i, j, k;
    auto operator<=>(const ConstKey&) const = default;
};

/// Even bilinear product stored as a sparse rank-3 structure-constant tensor:
/// an entry (i, j, k) -> c means e_i . e_j has coefficient c on e_k. The
/// common case is an algebra product J x J -> J; module actions use distinct
/// left/right/target spaces. Evenness (parity(k) = parity(i) + parity(j)) is
/// enforced for every stored constant, keys are unique, and zeros are never
/// stored, so the map order is the canonical (i, j, k) serialization order.
class SuperProduct {
public:
    explicit SuperProduct(SuperSpace space)
        : left_(space), right_(space), target_(std::move(space)) {}
    SuperProduct(SuperSpace left, SuperSpace right, SuperSpace target)
        : left_(std::move(left)), right_(std::move(right)), target_(std::move(target)) {}

    const SuperSpace& left_space() const { return left_; }
    const SuperSpace& right_space() const { return right_; }
    const SuperSpace& target_space() const { return target_; }

    const std::map<ConstKey, Scalar>& constants() const { return constants_; }

    /// Sets one structure constant; zero erases. Throws InvariantViolation on
    /// a parity-incompatible key.
    void set(std::size_t i, std::size_t j, std::size_t k, Scalar c);

    /// Adds to one structure constant, dropping the key if the sum vanishes.
    void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

    /// e_i . e_j expanded in the target basis.
    Vec eval_basis(std::size_t i, std::size_t j) const;

    /// Bilinear extension to arbitrary coordinate vectors.
    Vec eval(const Vec& u, const Vec& v) const;

    /// Product with maps pushed through the slots: (u, v) -> P(L u, R v).
    /// L and R must be even.
    SuperProduct twisted_by(const GradedMap& left, const GradedMap& right) const;

    /// Transport along an even isomorphism g: (u, v) -> g(P(g^-1 u, g^-1 v)).
    SuperProduct conjugated_by(const GradedMap& iso) const;

    bool operator==(const SuperProduct&) const = default;

private:
    SuperSpace left_, right_, target_;
    std::map<ConstKey, Scalar> constants_;
};

} // namespace bhj
