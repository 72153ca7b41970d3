#ifndef LIMINAL_CLASSIFIER_HPP
#define LIMINAL_CLASSIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liminal/local_invariants.hpp"

namespace liminal {

// C*-weight of z^alpha viewed as an element of T^1: sum_i a_i alpha_i - d.
// Identically equal to d*(l(alpha) - 2) - N where l(alpha) is the spectral
// shift sum_i (alpha_i + 1) a_i / d.
inline std::int64_t t1_weight(const Monomial& alpha, const WeightSystem& ws) {
    if (alpha.nvars() != ws.weights.size())
        throw DomainError("t1_weight: variable count mismatch");
    return alpha.weighted_degree(ws.weights) - ws.degree;
}

// The minimal exponent of a weighted homogeneous isolated hypersurface
// singularity: sum_i a_i / d.
inline Rational minimal_exponent(const WeightSystem& ws) {
    return ws.weight_sum_fraction();
}

// T^1 split into C*-weight spaces. Dimensions are always present; explicit
// basis monomials are attached only when the staircase is materialized and
// small enough to be worth printing.
struct WeightDecomposition {
    std::map<std::int64_t, Integer> dimensions;
    std::map<std::int64_t, std::vector<Monomial>> bases;
    Integer total = 0;
};

inline constexpr std::size_t kBasisListCap = 512;

inline WeightDecomposition t1_weight_decomposition(const LocalSingularity& sing) {
    if (!sing.weight_system)
        throw NoWeightSystemError("t1 weight decomposition requires a weight system");
    const WeightSystem& ws = *sing.weight_system;
    WeightDecomposition dec;
    for (const auto& [wdeg, dim] : sing.tyurina_basis.census(ws.weights)) {
        dec.dimensions[wdeg - ws.degree] = dim;
        dec.total += dim;
    }
    if (dec.total != sing.tyurina)
        throw Error("weight decomposition does not sum to tau");
    if (sing.tyurina_basis.materialized() && sing.tyurina_basis.size() <= kBasisListCap) {
        for (std::size_t i = 0; i < sing.tyurina_basis.size(); ++i) {
            Monomial m = sing.tyurina_basis.monomial(i);
            dec.bases[t1_weight(m, ws)].push_back(std::move(m));
        }
    }
    return dec;
}

// One spectral number with its multiplicity: value l(alpha) - 1, taken over
// the Milnor basis.
struct SpectrumEntry {
    Rational value;
    Integer multiplicity;
};

inline std::vector<SpectrumEntry> spectrum(const LocalSingularity& sing) {
    if (!sing.weight_system)
        throw NoWeightSystemError("spectrum requires a weight system");
    const WeightSystem& ws = *sing.weight_system;
    const Rational shift(Integer(static_cast<long>(ws.weight_sum() - ws.degree)),
                         Integer(static_cast<long>(ws.degree)));
    std::vector<SpectrumEntry> out;
    for (const auto& [wdeg, dim] : sing.milnor_basis.census(ws.weights)) {
        Rational value = Rational(Integer(static_cast<long>(wdeg)),
                                  Integer(static_cast<long>(ws.degree))) + shift;
        out.push_back({value, dim});
    }
    return out;  // censuses iterate in increasing weighted degree, so sorted
}

struct ClassificationFlags {
    bool rational = false;
    bool one_rational = false;
    bool one_du_bois = false;
    bool one_liminal = false;
    bool strongly_one_irrational = false;
};

struct KLevelFlags {
    bool du_bois = false;
    bool rational = false;
};

// All weight-graded invariants of one weighted homogeneous germ together
// with the threshold classification.
struct ClassificationReport {
    LocalSingularity singularity;
    Rational alpha_tilde;      // = sum_i w_i
    std::int64_t N = 0;        // sum a_i - d
    Integer dim_K = 0;         // weights <= -N
    Integer dim_K_prime = 0;   // weights <  -N
    Integer link_invariant = 0;  // weight = -N, i.e. dim Gr_F^{n-1} H^n(L)
    Integer b_n11 = 0;         // weights >  -N
    Integer b_1n2 = 0;         // = dim_K_prime
    Integer a_invariant = 0;   // mu - tau; zero in the graded case
    WeightDecomposition decomposition;
    std::vector<SpectrumEntry> spec;
    std::optional<ClassificationFlags> flags;  // absent when n < 3
    std::map<int, KLevelFlags> k_level;
    std::vector<std::string> warnings;

    // Threshold trichotomy label; "unclassified" when flags are suppressed.
    std::string label() const {
        if (!flags) return "unclassified";
        if (flags->one_rational) return "1-rational";
        if (flags->one_liminal) return "1-liminal";
        return "strongly-1-irrational";
    }
};

// Weight-space classification of a weighted homogeneous isolated
// singularity. All comparisons are exact; there are no tolerances anywhere.
inline ClassificationReport classify(const LocalSingularity& sing) {
    if (!sing.weight_system)
        throw NoWeightSystemError("classification requires a weight system");
    if (sing.smooth_point()) throw DomainError("classify: smooth point is not a singularity");

    const WeightSystem& ws = *sing.weight_system;
    ClassificationReport rep;
    rep.singularity = sing;
    rep.alpha_tilde = minimal_exponent(ws);
    rep.N = ws.index_N();
    rep.decomposition = t1_weight_decomposition(sing);
    rep.spec = spectrum(sing);
    rep.a_invariant = sing.milnor - sing.tyurina;

    for (const auto& [k, dim] : rep.decomposition.dimensions) {
        if (k < -rep.N) rep.dim_K_prime += dim;
        if (k <= -rep.N) rep.dim_K += dim;
        if (k == -rep.N) rep.link_invariant += dim;
        if (k > -rep.N) rep.b_n11 += dim;
    }
    rep.b_1n2 = rep.dim_K_prime;

    if (rep.dim_K != rep.dim_K_prime + rep.link_invariant)
        throw Error("weight-space splitting identity failed");
    if (rep.b_n11 + rep.b_1n2 + rep.link_invariant != sing.milnor)
        throw Error("weight-space partition identity failed");

    const Rational two(2);
    if (sing.n >= 3) {
        ClassificationFlags fl;
        fl.rational = rep.alpha_tilde > Rational(1);
        fl.one_rational = rep.alpha_tilde > two;
        fl.one_du_bois = rep.alpha_tilde >= two;
        fl.one_liminal = rep.alpha_tilde == two;
        fl.strongly_one_irrational = rep.alpha_tilde < two;
        rep.flags = fl;
    } else {
        rep.warnings.push_back("dimension n = " + std::to_string(sing.n) +
                               " < 3: classification flags suppressed");
    }
    for (int k = 1; k <= static_cast<int>(sing.n); ++k) {
        KLevelFlags kf;
        kf.du_bois = rep.alpha_tilde >= Rational(k + 1);
        kf.rational = rep.alpha_tilde > Rational(k + 1);
        rep.k_level[k] = kf;
    }
    if (sing.weight_system->ambiguous)
        rep.warnings.push_back("weight system not determined uniquely by the support; "
                               "minimal-degree solution used");
    return rep;
}

}  // namespace liminal

#endif  // LIMINAL_CLASSIFIER_HPP
