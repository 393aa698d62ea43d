#include "noether/snf.hpp"

#include <algorithm>
#include <utility>

namespace noether {

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

class Reducer {
public:
    Reducer(IntMatrix a, std::size_t ncols)
        : a_(std::move(a)), rows_(a_.size()), cols_(ncols), v_(identity(ncols)), vinv_(identity(ncols)) {}

    SmithForm run() {
        const std::size_t r = std::min(rows_, cols_);
        for (std::size_t t = 0; t < r; ++t) {
            if (!pivot_at(t)) break;
            while (true) {
                clear_row_and_column(t);
                // Enforce divisibility of the remaining block.
                std::size_t bad = rows_;
                for (std::size_t i = t + 1; i < rows_ && bad == rows_; ++i)
                    for (std::size_t j = t + 1; j < cols_; ++j)
                        if (!mpz_divisible_p(a_[i][j].get_mpz_t(), a_[t][t].get_mpz_t())) {
                            bad = i;
                            break;
                        }
                if (bad == rows_) break;
                for (std::size_t j = t; j < cols_; ++j) a_[t][j] += a_[bad][j];
            }
            if (a_[t][t] < 0) negate_col(t);
        }
        SmithForm out;
        for (std::size_t t = 0; t < r; ++t) out.diagonal.push_back(abs(a_[t][t]));
        out.v = std::move(v_);
        out.v_inv = std::move(vinv_);
        return out;
    }

private:
    bool pivot_at(std::size_t t) {
        std::size_t bi = rows_, bj = cols_;
        for (std::size_t i = t; i < rows_; ++i)
            for (std::size_t j = t; j < cols_; ++j)
                if (a_[i][j] != 0 && (bi == rows_ || mpz_cmpabs(a_[i][j].get_mpz_t(), a_[bi][bj].get_mpz_t()) < 0)) {
                    bi = i;
                    bj = j;
                }
        if (bi == rows_) return false;
        std::swap(a_[t], a_[bi]);
        swap_cols(t, bj);
        return true;
    }

    void clear_row_and_column(std::size_t t) {
        while (true) {
            bool changed = false;
            for (std::size_t i = t + 1; i < rows_; ++i) {
                if (a_[i][t] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), a_[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols_; ++j) a_[i][j] -= q * a_[t][j];
                if (a_[i][t] != 0) {
                    std::swap(a_[t], a_[i]);
                    changed = true;
                }
            }
            for (std::size_t j = t + 1; j < cols_; ++j) {
                if (a_[t][j] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), a_[t][t].get_mpz_t());
                add_col(j, t, -q);
                if (a_[t][j] != 0) {
                    swap_cols(t, j);
                    changed = true;
                }
            }
            if (!changed) {
                bool clean = true;
                for (std::size_t i = t + 1; i < rows_; ++i) clean = clean && a_[i][t] == 0;
                for (std::size_t j = t + 1; j < cols_; ++j) clean = clean && a_[t][j] == 0;
                if (clean) return;
            }
        }
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& row : a_) std::swap(row[a], row[b]);
        for (auto& row : v_) std::swap(row[a], row[b]);
        std::swap(vinv_[a], vinv_[b]);
    }

    // col_dst += q * col_src
    void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
        for (auto& row : a_) row[dst] += q * row[src];
        for (auto& row : v_) row[dst] += q * row[src];
        for (std::size_t k = 0; k < cols_; ++k) vinv_[src][k] -= q * vinv_[dst][k];
    }

    void negate_col(std::size_t c) {
        for (auto& row : a_) row[c] = -row[c];
        for (auto& row : v_) row[c] = -row[c];
        for (auto& x : vinv_[c]) x = -x;
    }

    IntMatrix a_;
    std::size_t rows_, cols_;
    IntMatrix v_, vinv_;
};

}  // namespace

SmithForm smith_normal_form(IntMatrix a, std::size_t ncols) {
    for (const auto& row : a)
        if (row.size() != ncols) throw std::invalid_argument("smith_normal_form: ragged matrix");
    return Reducer(std::move(a), ncols).run();
}

std::vector<BigInt> invariant_factors(const IntMatrix& a, std::size_t ncols) {
    SmithForm s = smith_normal_form(a, ncols);
    std::vector<BigInt> out;
    for (const auto& d : s.diagonal)
        if (d != 1) out.push_back(d);
    for (std::size_t i = s.diagonal.size(); i < ncols; ++i) out.push_back(0);
    return out;
}

}  // namespace noether
