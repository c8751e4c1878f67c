#include "bhj/superspace.hpp"

#include "bhj/errors.hpp"

namespace bhj {

SuperSpace::SuperSpace(std::size_t even_dim, std::size_t odd_dim) {
    if (even_dim > 0) segs_.push_back({even_dim, Parity::even});
    if (odd_dim > 0) segs_.push_back({odd_dim, Parity::odd});
    dim_ = even_dim + odd_dim;
}

SuperSpace SuperSpace::direct_sum(const SuperSpace& a, const SuperSpace& b) {
    SuperSpace r;
    r.segs_ = a.segs_;
    r.segs_.insert(r.segs_.end(), b.segs_.begin(), b.segs_.end());
    r.dim_ = a.dim_ + b.dim_;
    r.normalize();
    return r;
}

void SuperSpace::normalize() {
    std::vector<Segment> merged;
    for (const auto& s : segs_) {
        if (s.len == 0) continue;
        if (!merged.empty() && merged.back().parity == s.parity)
            merged.back().len += s.len;
        else
            merged.push_back(s);
    }
    segs_ = std::move(merged);
}

std::size_t SuperSpace::even_dim() const {
    std::size_t n = 0;
    for (const auto& s : segs_)
        if (s.parity == Parity::even) n += s.len;
    return n;
}

std::size_t SuperSpace::odd_dim() const { return dim_ - even_dim(); }

Parity SuperSpace::parity(std::size_t index) const {
    std::size_t off = 0;
    for (const auto& s : segs_) {
        if (index < off + s.len) return s.parity;
        off += s.len;
    }
    throw DimensionMismatch("basis index out of range");
}

bool SuperSpace::is_canonical() const {
    return segs_.size() <= 1 ||
           (segs_.size() == 2 && segs_[0].parity == Parity::even);
}

} // namespace bhj
