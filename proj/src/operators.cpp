#include "bhj/operators.hpp"

#include "bhj/errors.hpp"

#include <algorithm>
#include <thread>

namespace bhj {

namespace {

void collect_matrix_columns(Report& rep, std::vector<std::size_t> prefix,
                            const Matrix& residual) {
    for (std::size_t u = 0; u < residual.cols(); ++u) {
        Vec col = residual.column(u);
        if (is_zero(col)) continue;
        auto where = prefix;
        where.push_back(u);
        rep.violations.push_back({std::move(where), std::move(col)});
    }
}

Report twist_intertwining(const Representation& rep, const GradedMap& T) {
    Report r;
    r.identity = "operator-twist-commutation";
    const BiHomJordanSuperalgebra& J = *rep.algebra();
    collect_matrix_columns(r, {0},
                           J.alpha().matrix() * T.matrix() -
                               T.matrix() * rep.alpha_v().matrix());
    collect_matrix_columns(r, {1},
                           J.beta().matrix() * T.matrix() -
                               T.matrix() * rep.beta_v().matrix());
    return r;
}

enum class SecondSign { displayed, star_pattern };

Report quadratic_compatibility(const Representation& rep, const GradedMap& T,
                               SecondSign reading) {
    Report r;
    r.identity = reading == SecondSign::displayed ? "operator-compatibility" : "operator-compatibility-star-reading";
    const BiHomJordanSuperalgebra& J = *rep.algebra();
    const std::size_t nv = rep.space().dim();
    const unsigned pt = parity_bit(T.degree());
    Matrix am1b = rep.alpha_v().matrix().inverse() * rep.beta_v().matrix();
    Matrix abm1 = rep.alpha_v().matrix() * rep.beta_v().matrix().inverse();
    for (std::size_t u = 0; u < nv; ++u) {
        const unsigned pu = parity_bit(rep.space().parity(u));
        Vec tu = T.matrix().column(u);
        Matrix rho_tu = rep.action_of(tu);
        Vec abm1_u = abm1.column(u);
        for (std::size_t v = 0; v < nv; ++v) {
            const unsigned pv = parity_bit(rep.space().parity(v));
            Vec lhs = J.product().eval(tu, T.matrix().column(v));
            Vec arg = scaled(rho_tu.column(v), parity_sign(pt * (pt + pu)));
            const unsigned e2 = reading == SecondSign::displayed
                                    ? pu * (pv + pt)
                                    : pu * pv + pt * (pv + pt);
            Vec tv = T.apply(am1b.column(v));
            add_scaled(arg, rep.action_of(tv).apply(abm1_u), parity_sign(e2));
            add_scaled(lhs, T.apply(arg), Scalar(-1));
            if (!is_zero(lhs)) r.violations.push_back({{u, v}, std::move(lhs)});
        }
    }
    return r;
}

} // namespace

OOperator::OOperator(RepresentationPtr rep, GradedMap T)
    : rep_(std::move(rep)), map_(std::move(T)) {
    if (!rep_) throw InvariantViolation("operator without a representation");
    if (map_.domain() != rep_->space() || map_.codomain() != rep_->algebra()->space())
        throw DimensionMismatch("operator must map the module space into the algebra");
    if (!twist_intertwining(*rep_, map_).passed())
        throw NonCommuting("operator does not intertwine the twist maps");
}

ReportSet verify_o_operator(const Representation& rep, const GradedMap& T) {
    ReportSet rs;
    rs.append(twist_intertwining(rep, T));
    rs.append(quadratic_compatibility(rep, T, SecondSign::displayed));
    return rs;
}

Report verify_o_operator_star_reading(const Representation& rep, const GradedMap& T) {
    return quadratic_compatibility(rep, T, SecondSign::star_pattern);
}

ReportSet verify_rota_baxter(const BiHomJordanSuperalgebra& J, const GradedMap& R) {
    if (!J.is_regular()) throw SingularMap("rota-baxter check needs a regular algebra");
    if (R.domain() != J.space() || R.codomain() != J.space())
        throw DimensionMismatch("rota-baxter operator must be an endomorphism");
    if (J.alpha().matrix() * R.matrix() != R.matrix() * J.alpha().matrix() ||
        J.beta().matrix() * R.matrix() != R.matrix() * J.beta().matrix())
        throw NonCommuting("rota-baxter operator must commute with the twist maps");
    Report rep;
    rep.identity = "rota-baxter";
    const std::size_t n = J.dim();
    const unsigned pr = parity_bit(R.degree());
    for (std::size_t x = 0; x < n; ++x) {
        Vec rx = R.matrix().column(x);
        const unsigned px = parity_bit(J.parity(x));
        for (std::size_t y = 0; y < n; ++y) {
            Vec residual = J.product().eval(rx, R.matrix().column(y));
            Vec inner = J.product().eval(rx, basis_vector(n, y));
            add_scaled(inner, J.product().eval(basis_vector(n, x), R.matrix().column(y)),
                       Scalar(1));
            add_scaled(residual, R.apply(inner), -parity_sign(pr * (px + pr)));
            if (!is_zero(residual)) rep.violations.push_back({{x, y}, std::move(residual)});
        }
    }
    ReportSet rs;
    rs.append(std::move(rep));
    return rs;
}

namespace {

// u o v = (-1)^{|T|(|u|+|T|)} rho(T(u)) v as raw coefficient columns; the
// product has degree |T|, so only the even case may be materialized directly.
Vec induced_circ(const Representation& rep, const GradedMap& T, std::size_t u,
                 std::size_t v) {
    const unsigned pt = parity_bit(T.degree());
    const unsigned pu = parity_bit(rep.space().parity(u));
    return scaled(rep.action_of(T.matrix().column(u)).column(v),
                  parity_sign(pt * (pu + pt)));
}

void require_verified(const OOperator& op) {
    if (!verify_o_operator(*op.rep(), op.map()).passed())
        throw OOperatorAxiomsFailed("operator fails its compatibility identity");
}

} // namespace

InducedPreJordan induce_pre_jordan_even(const OOperator& op) {
    if (op.parity() != Parity::even)
        throw WrongParity("even induction requires an even operator");
    require_verified(op);
    const Representation& rep = *op.rep();
    const std::size_t nv = rep.space().dim();
    SuperProduct circ(rep.space());
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t v = 0; v < nv; ++v) {
            Vec w = induced_circ(rep, op.map(), u, v);
            for (std::size_t k = 0; k < nv; ++k)
                if (!w[k].is_zero()) circ.set(u, v, k, w[k]);
        }
    BiHomPreJordanSuperalgebra P(std::move(circ), rep.alpha_v(), rep.beta_v());
    ReportSet report = verify_pre_jordan(P);
    return {std::move(P), std::move(report)};
}

InducedPreJordan induce_pre_jordan_odd(const OOperator& op) {
    if (op.parity() != Parity::odd)
        throw WrongParity("odd induction requires an odd operator");
    require_verified(op);
    const Representation& rep = *op.rep();
    auto [s_space, s] = suspend_space(rep.space());
    GradedMap s_inv = s.inverted();
    const std::size_t nv = rep.space().dim();
    SuperProduct bullet(s_space);
    for (std::size_t i = 0; i < nv; ++i) {
        Vec u = s_inv.matrix().column(i);
        std::size_t ui = 0;
        while (u[ui].is_zero()) ++ui; // suspension columns are unit vectors
        for (std::size_t j = 0; j < nv; ++j) {
            Vec v = s_inv.matrix().column(j);
            std::size_t vj = 0;
            while (v[vj].is_zero()) ++vj;
            Vec w = s.apply(induced_circ(rep, op.map(), ui, vj));
            for (std::size_t k = 0; k < nv; ++k)
                if (!w[k].is_zero()) bullet.set(i, j, k, w[k]);
        }
    }
    BiHomPreJordanSuperalgebra P(std::move(bullet),
                                 compose(s, compose(rep.alpha_v(), s_inv)),
                                 compose(s, compose(rep.beta_v(), s_inv)));
    ReportSet report = verify_pre_jordan(P);
    return {std::move(P), std::move(report)};
}

OOperator o_op_suspend(const OOperator& op) {
    auto reversed = std::make_shared<Representation>(parity_reverse_rep(*op.rep()));
    auto [s_space, s] = suspend_space(op.rep()->space());
    GradedMap ts = compose(op.map(), s.inverted());
    OOperator out(std::move(reversed), std::move(ts));
    require_verified(out);
    return out;
}

OOperator o_op_extend(const OOperator& op) {
    auto sum = std::make_shared<Representation>(
        direct_sum_rep(*op.rep(), parity_reverse_rep(*op.rep())));
    const std::size_t nv = op.rep()->space().dim();
    const std::size_t nj = op.rep()->algebra()->dim();
    Matrix ext(nj, 2 * nv);
    for (std::size_t r = 0; r < nj; ++r)
        for (std::size_t c = 0; c < nv; ++c) ext.at(r, c) = op.map().matrix().at(r, c);
    OOperator out(sum, GradedMap(sum->space(), op.rep()->algebra()->space(),
                                 op.parity(), std::move(ext)));
    require_verified(out);
    return out;
}

OOperator o_op_via_isomorphism(const OOperator& op, const GradedMap& phi) {
    if (!check_self_reversing(*op.rep(), phi).passed())
        throw NotSelfReversing("witness map is not a self-reversing isomorphism");
    OOperator suspended = o_op_suspend(op);
    OOperator out(op.rep(), compose(suspended.map(), phi));
    require_verified(out);
    return out;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> free_positions(const Representation& rep,
                                                                Parity parity) {
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    const SuperSpace& vs = rep.space();
    const SuperSpace& js = rep.algebra()->space();
    for (std::size_t r = 0; r < js.dim(); ++r)
        for (std::size_t c = 0; c < vs.dim(); ++c)
            if (js.parity(r) == vs.parity(c) + parity) pos.emplace_back(r, c);
    return pos;
}

} // namespace

std::vector<Matrix> o_operator_grid(const Representation& rep, Parity parity,
                                    std::vector<Scalar> coeffs, unsigned long budget) {
    if (coeffs.empty()) throw InvariantViolation("empty coefficient set");
    std::sort(coeffs.begin(), coeffs.end());
    coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
    auto pos = free_positions(rep, parity);
    unsigned long total = 1;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (total > budget / coeffs.size()) throw BudgetExceeded("candidate grid too large");
        total *= coeffs.size();
    }

    const std::size_t rows = rep.algebra()->dim(), cols = rep.space().dim();
    std::vector<Matrix> grid;
    grid.reserve(total);
    std::vector<std::size_t> odometer(pos.size(), 0);
    for (unsigned long step = 0; step < total; ++step) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < pos.size(); ++i)
            m.at(pos[i].first, pos[i].second) = coeffs[odometer[i]];
        grid.push_back(std::move(m));
        for (std::size_t i = pos.size(); i-- > 0;) {
            if (++odometer[i] < coeffs.size()) break;
            odometer[i] = 0;
        }
    }
    std::sort(grid.begin(), grid.end(),
              [](const Matrix& a, const Matrix& b) { return Matrix::compare(a, b) < 0; });
    return grid;
}

std::vector<OOperator> search_o_operators(const RepresentationPtr& rep, Parity parity,
                                          std::vector<Scalar> coeffs, unsigned long budget,
                                          unsigned jobs) {
    if (!rep) throw InvariantViolation("search without a representation");
    std::vector<Matrix> grid = o_operator_grid(*rep, parity, std::move(coeffs), budget);
    std::vector<char> passing(grid.size(), 0);

    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            GradedMap T(rep->space(), rep->algebra()->space(), parity, grid[i]);
            // Linear twist conditions first; most candidates die here.
            if (!twist_intertwining(*rep, T).passed()) continue;
            if (quadratic_compatibility(*rep, T, SecondSign::displayed).passed())
                passing[i] = 1;
        }
    };

    if (jobs <= 1 || grid.size() < 2) {
        worker(0, grid.size());
    } else {
        const std::size_t chunks = std::min<std::size_t>(jobs, grid.size());
        std::vector<std::thread> threads;
        const std::size_t per = (grid.size() + chunks - 1) / chunks;
        for (std::size_t c = 0; c < chunks; ++c)
            threads.emplace_back(worker, c * per, std::min(grid.size(), (c + 1) * per));
        for (auto& t : threads) t.join();
    }

    std::vector<OOperator> found;
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (passing[i])
            found.emplace_back(rep, GradedMap(rep->space(), rep->algebra()->space(), parity,
                                              grid[i]));
    return found;
}

} // namespace bhj
