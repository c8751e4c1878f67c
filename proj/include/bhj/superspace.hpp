#pragma once

#include "bhj/scalar.hpp"

#include <cstddef>
#include <vector>

namespace bhj {

enum class Parity : unsigned char { even = 0, odd = 1 };

constexpr unsigned parity_bit(Parity p) { return static_cast<unsigned>(p); }

constexpr Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((parity_bit(a) + parity_bit(b)) & 1u);
}

constexpr Parity flip(Parity p) { return p + Parity::odd; }

/// (-1)^{pq}: -1 exactly when both arguments are odd.
inline Scalar koszul_sign(Parity p, Parity q) {
    return (p == Parity::odd && q == Parity::odd) ? Scalar(-1) : Scalar(1);
}

/// Finite-dimensional Z2-graded vector space with a canonical homogeneous
/// basis. Parity is a function of the index: the layout is a list of
/// contiguous runs of constant parity. A space constructed from (even, odd)
/// dimensions is canonical (even indices first); direct sums concatenate the
/// summands' layouts, so sum spaces keep summand-major index order.
class SuperSpace {
public:
    struct Segment {
        std::size_t len;
        Parity parity;
        bool operator==(const Segment&) const = default;
    };

    SuperSpace() = default;
    SuperSpace(std::size_t even_dim, std::size_t odd_dim);

    static SuperSpace direct_sum(const SuperSpace& a, const SuperSpace& b);

    std::size_t dim() const { return dim_; }
    std::size_t even_dim() const;
    std::size_t odd_dim() const;
    Parity parity(std::size_t index) const;

    /// True when all even indices precede all odd ones.
    bool is_canonical() const;

    const std::vector<Segment>& layout() const { return segs_; }

    bool operator==(const SuperSpace&) const = default;

private:
    std::vector<Segment> segs_;
    std::size_t dim_ = 0;

    void normalize();
};

} // namespace bhj
