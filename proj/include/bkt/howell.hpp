/*
   Copyright 2026 The bkt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BKT_HOWELL_HPP
#define BKT_HOWELL_HPP

#include <algorithm>
#include <vector>

#include "zmod.hpp"

namespace bkt {

/*
 * Howell normal form of a submodule of (Z/p^N)^n.
 *
 * Rows are sorted by pivot column; the pivot of a row is p^k, entries of
 * earlier rows in a later pivot's column are reduced into [0, p^k), and the
 * span of the rows with pivot column >= c is exactly the set of span elements
 * vanishing on columns < c. The form is unique, so spans compare by rows.
 */
template <class Int>
class HowellForm {
   public:
    using Row = std::vector<Int>;

    HowellForm(Zmod<Int> zmod, unsigned ncols) : z_(std::move(zmod)), ncols_(ncols) {}

    HowellForm(Zmod<Int> zmod, unsigned ncols, std::vector<Row> generators)
        : z_(std::move(zmod)), ncols_(ncols) {
        build(std::move(generators));
    }

    const Zmod<Int>& zmod() const noexcept { return z_; }
    unsigned ncols() const noexcept { return ncols_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }
    unsigned pivot_col(std::size_t i) const { return pivots_[i].col; }
    unsigned pivot_val(std::size_t i) const { return pivots_[i].val; }

    /// Pivot valuation in column c, or N when no row pivots there.
    unsigned valuation_at(unsigned c) const {
        for (const auto& pv : pivots_)
            if (pv.col == c) return pv.val;
        return z_.precision();
    }

    /// Reduces x against the rows; the result is zero iff x lies in the span.
    Row reduce(Row x) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const unsigned c = pivots_[i].col, k = pivots_[i].val;
            if (x[c] == 0) continue;
            if (z_.val(x[c]) < k) return x;
            axpy(x, z_.neg(z_.div_pow_p(x[c], k)), rows_[i], c);
        }
        return x;
    }

    bool contains(const Row& x) const {
        Row r = reduce(x);
        return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
    }

    bool contains(const HowellForm& other) const {
        return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Row& r) { return contains(r); });
    }

    /// log_p of the number of elements in the span.
    unsigned long long log_size() const {
        unsigned long long s = 0;
        for (const auto& pv : pivots_) s += z_.precision() - pv.val;
        return s;
    }

    /// log_p of the index of the span in (Z/p^N)^n.
    unsigned long long log_index() const {
        return static_cast<unsigned long long>(z_.precision()) * ncols_ - log_size();
    }

    /// {x : p x in span}, computed from the kernel of [p I | I ; B | 0].
    HowellForm preimage_times_p() const {
        const unsigned n = ncols_;
        std::vector<Row> aug;
        aug.reserve(n + rows_.size());
        const Int p = z_.pow_p(1);
        for (unsigned i = 0; i < n; ++i) {
            Row r(2 * n, Int(0));
            r[i] = p;
            r[n + i] = Int(1);
            aug.push_back(std::move(r));
        }
        for (const auto& b : rows_) {
            Row r(2 * n, Int(0));
            std::copy(b.begin(), b.end(), r.begin());
            aug.push_back(std::move(r));
        }
        HowellForm big(z_, 2 * n, std::move(aug));
        std::vector<Row> kernel;
        for (std::size_t i = 0; i < big.rows_.size(); ++i)
            if (big.pivots_[i].col >= n) kernel.emplace_back(big.rows_[i].begin() + n, big.rows_[i].end());
        return HowellForm(z_, n, std::move(kernel));
    }

    /// Image under reduction to Z/p^{N'} and the first n' columns.
    HowellForm project(unsigned new_N, unsigned new_ncols) const {
        Zmod<Int> zn(z_.prime(), new_N);
        std::vector<Row> gens;
        for (const auto& r : rows_) {
            Row s(new_ncols, Int(0));
            for (unsigned c = 0; c < new_ncols && c < ncols_; ++c) s[c] = r[c] % zn.modulus();
            gens.push_back(std::move(s));
        }
        return HowellForm(zn, new_ncols, std::move(gens));
    }

    friend bool operator==(const HowellForm& a, const HowellForm& b) {
        return a.z_ == b.z_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

   private:
    struct Pivot {
        unsigned col;
        unsigned val;
    };

    // x += s * row, touching only columns >= from.
    void axpy(Row& x, const Int& s, const Row& row, unsigned from) const {
        for (unsigned c = from; c < ncols_; ++c)
            if (row[c] != 0) x[c] = z_.add(x[c], z_.mul(s, row[c]));
    }

    static bool is_zero(const Row& r) {
        return std::all_of(r.begin(), r.end(), [](const Int& v) { return v == 0; });
    }

    void build(std::vector<Row> work) {
        std::erase_if(work, is_zero);
        const unsigned N = z_.precision();
        for (unsigned col = 0; col < ncols_ && !work.empty(); ++col) {
            std::size_t best = work.size();
            unsigned best_val = N;
            for (std::size_t i = 0; i < work.size(); ++i) {
                unsigned v = z_.val(work[i][col]);
                if (v < best_val) {
                    best_val = v;
                    best = i;
                    if (v == 0) break;
                }
            }
            if (best == work.size()) continue;
            Row piv = std::move(work[best]);
            work[best] = std::move(work.back());
            work.pop_back();

            const unsigned k = best_val;
            const Int unit = z_.div_pow_p(piv[col], k);
            if (unit != 1) {
                const Int inv = z_.unit_inverse(unit);
                for (unsigned c = col; c < ncols_; ++c)
                    if (piv[c] != 0) piv[c] = z_.mul(piv[c], inv);
            }
            for (auto& r : work) {
                if (r[col] == 0) continue;
                axpy(r, z_.neg(z_.div_pow_p(r[col], k)), piv, col);
            }
            // Annihilator row: p^{N-k} * piv vanishes at col but need not elsewhere.
            if (k > 0) {
                Row ann(ncols_, Int(0));
                const Int s = z_.pow_p(N - k);
                for (unsigned c = col + 1; c < ncols_; ++c)
                    if (piv[c] != 0) ann[c] = z_.mul(piv[c], s);
                if (!is_zero(ann)) work.push_back(std::move(ann));
            }
            std::erase_if(work, is_zero);
            rows_.push_back(std::move(piv));
            pivots_.push_back({col, k});
        }
        // Reduce entries above each pivot into [0, p^k).
        for (std::size_t j = 1; j < rows_.size(); ++j) {
            const unsigned c = pivots_[j].col, k = pivots_[j].val;
            for (std::size_t i = 0; i < j; ++i) {
                const Int q = rows_[i][c] / z_.pow_p(k);
                if (q != 0) axpy(rows_[i], z_.neg(q), rows_[j], c);
            }
        }
    }

    Zmod<Int> z_;
    unsigned ncols_;
    std::vector<Row> rows_;
    std::vector<Pivot> pivots_;
};

}  // namespace bkt

#endif
