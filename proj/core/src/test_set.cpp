#include "rapsolve/test_set.hpp"

#include <sstream>
#include <string>

namespace rapsolve {

std::vector<TestMove> build_test_set(const NormalizedInstance& ninst) {
    const Layout& lay = ninst.layout;
    if (!ninst.has_budget()) throw ValidationError("instance has no budget c0 set");
    for (int i = 0; i < lay.subsystems(); ++i) {
        for (int j = 1; j < lay.types(i); ++j) {
            if (ninst.cost[static_cast<std::size_t>(lay.flat(i, j - 1))] <
                ninst.cost[static_cast<std::size_t>(lay.flat(i, j))]) {
                throw ValidationError("costs of subsystem " + std::to_string(i) +
                                      " are not in non-increasing order");
            }
        }
    }

    std::size_t count = 0;
    for (int i = 0; i < lay.subsystems(); ++i) {
        const std::size_t k = static_cast<std::size_t>(lay.types(i));
        count += k + k * (k - 1) / 2;
    }

    std::vector<TestMove> moves;
    moves.reserve(count);
    for (int i = 0; i < lay.subsystems(); ++i) {
        for (int k = 0; k < lay.types(i); ++k) {
            TestMove m;
            m.kind = TestMove::Kind::remove_one;
            m.i = i;
            m.q = k;
            m.fq = lay.flat(i, k);
            m.cost_delta = ninst.cost[static_cast<std::size_t>(m.fq)];
            moves.push_back(m);
        }
    }
    for (int i = 0; i < lay.subsystems(); ++i) {
        for (int q = 0; q < lay.types(i); ++q) {
            for (int p = q + 1; p < lay.types(i); ++p) {
                TestMove m;
                m.kind = TestMove::Kind::swap_down;
                m.i = i;
                m.q = q;
                m.p = p;
                m.fq = lay.flat(i, q);
                m.fp = lay.flat(i, p);
                m.cost_delta = ninst.cost[static_cast<std::size_t>(m.fq)] -
                               ninst.cost[static_cast<std::size_t>(m.fp)];
                moves.push_back(m);
            }
        }
    }
    return moves;
}

ConstraintMatrix::ConstraintMatrix(const NormalizedInstance& ninst) : layout_(ninst.layout) {
    if (!ninst.has_budget()) throw ValidationError("instance has no budget c0 set");
    const int n = layout_.subsystems();
    const int total = layout_.total();
    rows_ = n + total + 1;
    cols_ = 2 * total + n + 1;
    a_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), 0);
    rhs_.resize(static_cast<std::size_t>(rows_));

    const auto set = [&](int row, int col, Money v) {
        a_[static_cast<std::size_t>(row * cols_ + col)] = v;
    };
    // subsystem rows: (D | -I_n | 0 | 0)
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < layout_.types(i); ++j) set(i, layout_.flat(i, j), 1);
        set(i, total + i, -1);
        rhs_[static_cast<std::size_t>(i)] = ninst.min_units[static_cast<std::size_t>(i)];
    }
    // bound rows: (I_N | 0 | I_N | 0)
    for (int f = 0; f < total; ++f) {
        set(n + f, f, 1);
        set(n + f, total + n + f, 1);
        rhs_[static_cast<std::size_t>(n + f)] = ninst.upper[static_cast<std::size_t>(f)];
    }
    // budget row: (c | 0 | 0 | 1)
    for (int f = 0; f < total; ++f) set(n + total, f, ninst.cost[static_cast<std::size_t>(f)]);
    set(n + total, cols_ - 1, 1);
    rhs_[static_cast<std::size_t>(n + total)] = ninst.c0;
}

std::vector<Money> ConstraintMatrix::multiply(std::span<const Money> z) const {
    if (static_cast<int>(z.size()) != cols_) {
        throw ValidationError("vector length " + std::to_string(z.size()) +
                              " does not match matrix width " + std::to_string(cols_));
    }
    std::vector<Money> out(static_cast<std::size_t>(rows_), 0);
    for (int row = 0; row < rows_; ++row) {
        Money acc = 0;
        for (int col = 0; col < cols_; ++col) acc += at(row, col) * z[static_cast<std::size_t>(col)];
        out[static_cast<std::size_t>(row)] = acc;
    }
    return out;
}

std::vector<Money> ConstraintMatrix::lifted(const NormalizedInstance& ninst,
                                            const Config& x) const {
    const SlackVector s = slacks(ninst, x);
    const int n = layout_.subsystems();
    const int total = layout_.total();
    std::vector<Money> z(static_cast<std::size_t>(cols_));
    for (int f = 0; f < total; ++f) z[static_cast<std::size_t>(f)] = x[static_cast<std::size_t>(f)];
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(total + i)] = s.d[static_cast<std::size_t>(i)];
    for (int f = 0; f < total; ++f) {
        z[static_cast<std::size_t>(total + n + f)] = s.t[static_cast<std::size_t>(f)];
    }
    z[static_cast<std::size_t>(cols_ - 1)] = s.b;
    return z;
}

std::vector<Money> full_displacement(const TestMove& move, const Layout& layout) {
    const int n = layout.subsystems();
    const int total = layout.total();
    std::vector<Money> g(static_cast<std::size_t>(2 * total + n + 1), 0);
    const auto x_at = [&](int f) -> Money& { return g[static_cast<std::size_t>(f)]; };
    const auto t_at = [&](int f) -> Money& { return g[static_cast<std::size_t>(total + n + f)]; };
    if (move.kind == TestMove::Kind::remove_one) {
        x_at(move.fq) = 1;
        g[static_cast<std::size_t>(total + move.i)] = 1;  // d_i
        t_at(move.fq) = -1;
    } else {
        x_at(move.fq) = 1;
        x_at(move.fp) = -1;
        t_at(move.fp) = 1;
        t_at(move.fq) = -1;
    }
    g.back() = -move.cost_delta;  // b
    return g;
}

bool kernel_check(const ConstraintMatrix& a, const TestMove& move) {
    const std::vector<Money> g = full_displacement(move, a.layout());
    for (Money v : a.multiply(g)) {
        if (v != 0) return false;
    }
    return true;
}

Config apply_forward(const Config& x, const TestMove& move) {
    Config out = x;
    if (move.kind == TestMove::Kind::remove_one) {
        --out[static_cast<std::size_t>(move.fq)];
    } else {
        --out[static_cast<std::size_t>(move.fq)];
        ++out[static_cast<std::size_t>(move.fp)];
    }
    return out;
}

Config apply_reverse(const Config& x, const TestMove& move) {
    Config out = x;
    apply_reverse_inplace(out, move);
    return out;
}

void apply_reverse_inplace(Config& x, const TestMove& move) {
    if (move.kind == TestMove::Kind::remove_one) {
        ++x[static_cast<std::size_t>(move.fq)];
    } else {
        ++x[static_cast<std::size_t>(move.fq)];
        --x[static_cast<std::size_t>(move.fp)];
    }
}

void undo_reverse_inplace(Config& x, const TestMove& move) {
    if (move.kind == TestMove::Kind::remove_one) {
        --x[static_cast<std::size_t>(move.fq)];
    } else {
        --x[static_cast<std::size_t>(move.fq)];
        ++x[static_cast<std::size_t>(move.fp)];
    }
}

std::string dump_test_set(std::span<const TestMove> moves) {
    std::ostringstream out;
    for (const TestMove& m : moves) {
        if (m.kind == TestMove::Kind::remove_one) {
            out << "remove_one i=" << m.i + 1 << " k=" << m.q + 1
                << " dx[" << m.i + 1 << "," << m.q + 1 << "]=-1"
                << " b_exp=" << m.cost_delta << '\n';
        } else {
            out << "swap_down i=" << m.i + 1 << " q=" << m.q + 1 << " p=" << m.p + 1
                << " dx[" << m.i + 1 << "," << m.q + 1 << "]=-1"
                << " dx[" << m.i + 1 << "," << m.p + 1 << "]=+1"
                << " b_exp=" << m.cost_delta << '\n';
        }
    }
    return out.str();
}

}  // namespace rapsolve
