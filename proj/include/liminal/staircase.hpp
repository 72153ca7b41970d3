#ifndef LIMINAL_STAIRCASE_HPP
#define LIMINAL_STAIRCASE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "liminal/groebner.hpp"

namespace liminal {

// The standard monomials of a zero-dimensional quotient: all monomials
// outside the leading-term ideal. Closed under divisibility and contains 1
// whenever nonempty.
//
// Two representations coexist behind one interface. Small staircases are
// materialized as an explicit sorted list. Large ones stay symbolic as
// "bounding box minus divisibility cones" (per-variable pure-power bounds
// plus the non-pure-power leading generators); cardinality and weight
// censuses are then computed by inclusion-exclusion without enumeration.
class Staircase {
   public:
    static constexpr std::uint64_t kDefaultMaterializeCap = 2000000;

    Staircase() = default;

    // Complement of the leading-term ideal of a reduced basis.
    static Staircase of_leading_terms(const GroebnerBasis& gb,
                                      std::uint64_t materialize_cap = kDefaultMaterializeCap) {
        Staircase s;
        s.nvars_ = gb.nvars;
        if (gb.is_unit_ideal()) {
            s.box_.assign(gb.nvars, 0);
            s.cardinality_ = 0;
            s.materialized_ = true;
            return s;
        }
        s.box_.assign(gb.nvars, 0);
        std::vector<bool> bounded(gb.nvars, false);
        for (const auto& lm : gb.leading) {
            std::size_t support = 0, var = 0;
            for (std::size_t i = 0; i < gb.nvars; ++i)
                if (lm[i] > 0) {
                    ++support;
                    var = i;
                }
            if (support == 1) {
                bounded[var] = true;
                s.box_[var] = lm[var];
            } else {
                s.extras_.push_back(lm);
            }
        }
        for (std::size_t i = 0; i < gb.nvars; ++i) {
            if (!bounded[i])
                throw InfiniteDimensionalError(
                    "quotient is not finite-dimensional: no pure power of variable " +
                    std::to_string(i + 1) + " in the leading-term ideal");
        }

        Integer box_points = 1;
        for (auto b : s.box_) box_points *= b;
        if (box_points <= Integer(static_cast<unsigned long>(materialize_cap))) {
            s.enumerate();
        } else {
            if (s.extras_.size() > 25)
                throw TooLargeError("staircase too large to enumerate and too ragged to count");
            s.cardinality_ = s.count_by_inclusion_exclusion();
            s.materialized_ = false;
        }
        return s;
    }

    static Staircase from_monomials(std::size_t nvars, std::vector<Monomial> monomials) {
        Staircase s;
        s.nvars_ = nvars;
        s.explicit_list_ = true;
        s.materialized_ = true;
        MonomialOrder ord;
        std::sort(monomials.begin(), monomials.end(),
                  [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
        s.box_.assign(nvars, 0);
        for (const auto& m : monomials) {
            for (std::size_t i = 0; i < nvars; ++i) s.box_[i] = std::max(s.box_[i], m[i] + 1);
            s.flat_.insert(s.flat_.end(), m.exponents().begin(), m.exponents().end());
        }
        s.cardinality_ = static_cast<unsigned long>(monomials.size());
        return s;
    }

    std::size_t nvars() const { return nvars_; }
    const Integer& dimension() const { return cardinality_; }
    std::int64_t dimension_int64() const { return to_int64(cardinality_); }
    bool materialized() const { return materialized_; }
    std::size_t size() const { return materialized_ ? flat_.size() / std::max<std::size_t>(nvars_, 1) : 0; }

    Monomial monomial(std::size_t idx) const {
        std::vector<std::uint32_t> e(flat_.begin() + idx * nvars_,
                                     flat_.begin() + (idx + 1) * nvars_);
        return Monomial(std::move(e));
    }

    bool contains(const Monomial& m) const {
        if (explicit_list_) {
            for (std::size_t i = 0; i < size(); ++i)
                if (monomial(i) == m) return true;
            return false;
        }
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] >= box_[i]) return false;
        for (const auto& g : extras_)
            if (g.divides(m)) return false;
        return true;
    }

    // Dimension of each weighted-degree graded piece.
    std::map<std::int64_t, Integer> census(const std::vector<std::int64_t>& weights) const {
        std::map<std::int64_t, Integer> out;
        if (materialized_) {
            for (std::size_t i = 0; i < size(); ++i) {
                std::int64_t w = 0;
                const std::uint32_t* e = flat_.data() + i * nvars_;
                for (std::size_t k = 0; k < nvars_; ++k) w += weights[k] * e[k];
                out[w] += 1;
            }
            return out;
        }
        auto poly = census_poly(weights);
        for (std::size_t j = 0; j < poly.size(); ++j)
            if (poly[j] != 0) out[static_cast<std::int64_t>(j)] = poly[j];
        return out;
    }

    const std::vector<std::uint32_t>& box_bounds() const { return box_; }

   private:
    void enumerate() {
        materialized_ = true;
        flat_.clear();
        if (std::any_of(box_.begin(), box_.end(), [](std::uint32_t b) { return b == 0; })) {
            cardinality_ = 0;
            return;
        }
        std::vector<std::uint32_t> cur(nvars_, 0);
        std::uint64_t count = 0;
        while (true) {
            bool excluded = false;
            for (const auto& g : extras_) {
                bool div = true;
                for (std::size_t i = 0; i < nvars_; ++i)
                    if (g[i] > cur[i]) { div = false; break; }
                if (div) { excluded = true; break; }
            }
            if (!excluded) {
                flat_.insert(flat_.end(), cur.begin(), cur.end());
                ++count;
            }
            std::size_t k = 0;
            while (k < nvars_ && cur[k] + 1 == box_[k]) cur[k++] = 0;
            if (k == nvars_) break;
            ++cur[k];
        }
        cardinality_ = static_cast<unsigned long>(count);
        sort_materialized();
    }

    void sort_materialized() {
        std::vector<std::size_t> idx(size());
        std::iota(idx.begin(), idx.end(), 0);
        const std::uint32_t* base = flat_.data();
        const std::size_t m = nvars_;
        // ascending grevlex on the raw exponent spans
        std::sort(idx.begin(), idx.end(), [base, m](std::size_t a, std::size_t b) {
            const std::uint32_t* ea = base + a * m;
            const std::uint32_t* eb = base + b * m;
            std::int64_t da = 0, db = 0;
            for (std::size_t i = 0; i < m; ++i) { da += ea[i]; db += eb[i]; }
            if (da != db) return da < db;
            for (std::size_t i = m; i-- > 0;)
                if (ea[i] != eb[i]) return ea[i] > eb[i];
            return false;
        });
        std::vector<std::uint32_t> sorted;
        sorted.reserve(flat_.size());
        for (auto i : idx) {
            sorted.insert(sorted.end(), flat_.begin() + i * nvars_,
                          flat_.begin() + (i + 1) * nvars_);
        }
        flat_ = std::move(sorted);
    }

    Integer count_by_inclusion_exclusion() const {
        Integer total = 0;
        const std::size_t g = extras_.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g); ++mask) {
            std::vector<std::uint32_t> low(nvars_, 0);
            for (std::size_t k = 0; k < g; ++k)
                if (mask & (std::uint64_t(1) << k))
                    for (std::size_t i = 0; i < nvars_; ++i)
                        low[i] = std::max(low[i], extras_[k][i]);
            Integer cnt = 1;
            for (std::size_t i = 0; i < nvars_ && cnt != 0; ++i)
                cnt *= (low[i] >= box_[i]) ? Integer(0) : Integer(box_[i] - low[i]);
            if (__builtin_popcountll(mask) % 2 == 0) total += cnt;
            else total -= cnt;
        }
        return total;
    }

    // Generating polynomial sum_{alpha in staircase} t^{<weights, alpha>},
    // assembled by inclusion-exclusion over the non-pure-power generators.
    std::vector<Integer> census_poly(const std::vector<std::int64_t>& weights) const {
        std::int64_t max_deg = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            max_deg += weights[i] * (box_[i] == 0 ? 0 : box_[i] - 1);
        std::vector<Integer> total(static_cast<std::size_t>(max_deg) + 1, Integer(0));
        const std::size_t g = extras_.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g); ++mask) {
            std::vector<std::uint32_t> low(nvars_, 0);
            for (std::size_t k = 0; k < g; ++k)
                if (mask & (std::uint64_t(1) << k))
                    for (std::size_t i = 0; i < nvars_; ++i)
                        low[i] = std::max(low[i], extras_[k][i]);
            bool empty = false;
            std::int64_t shift = 0;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (low[i] >= box_[i]) { empty = true; break; }
                shift += weights[i] * low[i];
            }
            if (empty) continue;
            std::vector<Integer> part{Integer(1)};
            for (std::size_t i = 0; i < nvars_; ++i) {
                std::uint32_t reps = box_[i] - low[i];  // exponents 0..reps-1
                std::vector<Integer> next(part.size() + weights[i] * (reps - 1), Integer(0));
                for (std::size_t a = 0; a < part.size(); ++a) {
                    if (part[a] == 0) continue;
                    for (std::uint32_t e = 0; e < reps; ++e)
                        next[a + weights[i] * e] += part[a];
                }
                part = std::move(next);
            }
            int sign = (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
            for (std::size_t a = 0; a < part.size(); ++a) {
                if (part[a] == 0) continue;
                if (sign > 0) total[a + shift] += part[a];
                else total[a + shift] -= part[a];
            }
        }
        return total;
    }

    std::size_t nvars_ = 0;
    std::vector<std::uint32_t> box_;
    std::vector<Monomial> extras_;
    Integer cardinality_ = 0;
    bool materialized_ = false;
    bool explicit_list_ = false;
    std::vector<std::uint32_t> flat_;
};

inline Staircase standard_monomials(const GroebnerBasis& gb,
                                    std::uint64_t materialize_cap = Staircase::kDefaultMaterializeCap) {
    return Staircase::of_leading_terms(gb, materialize_cap);
}

}  // namespace liminal

#endif  // LIMINAL_STAIRCASE_HPP
