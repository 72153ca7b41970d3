#ifndef LIMINAL_SMOOTHING_HPP
#define LIMINAL_SMOOTHING_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liminal/classifier.hpp"
#include "liminal/linalg.hpp"
#include "liminal/parser.hpp"

namespace liminal {

enum class VarietyKind { CalabiYau, Fano };

enum class PointClass { OneLiminal, StronglyOneIrrational, OneRational, Other };

inline std::string point_class_name(PointClass c) {
    switch (c) {
        case PointClass::OneLiminal: return "one_liminal";
        case PointClass::StronglyOneIrrational: return "strongly_one_irrational";
        case PointClass::OneRational: return "one_rational";
        case PointClass::Other: return "other";
    }
    return "other";
}

// One singular point of the global configuration, classified either by
// analyzing its defining polynomial or by an externally asserted tag.
struct SingularPointRecord {
    std::string id;
    std::optional<std::string> poly_text;
    std::optional<PointClass> tag;
    std::optional<ClassificationReport> report;

    // Resolves the effective class. A computed report takes precedence; a
    // report without usable flags falls back to the tag.
    PointClass effective_class() const {
        if (report && report->flags) {
            const auto& fl = *report->flags;
            if (!fl.rational) return PointClass::Other;
            if (fl.one_rational) return PointClass::OneRational;
            if (fl.one_liminal) return PointClass::OneLiminal;
            return PointClass::StronglyOneIrrational;
        }
        if (tag) return *tag;
        throw UnclassifiedPointError("point '" + id + "' has no usable classification");
    }
};

// Geometric hypotheses that are not locally computable; every one must be
// asserted explicitly to be consumed. Absent means not asserted.
struct ConfigurationFlags {
    std::optional<bool> h1_O_vanishes;
    std::optional<bool> deformations_unobstructed;
    std::optional<bool> fano_H_exists_disjoint;
    std::optional<bool> fano_H1Omega_vanishes;
    std::optional<bool> fano_H3T0_vanishes;

    bool asserted(const std::optional<bool>& f) const { return f.has_value() && *f; }
};

// A global variety with classified singular points. phi has one column per
// 1-liminal point (in listing order); its rows express the link classes in a
// user-chosen basis of H_{n-1} of the partial resolution.
struct Configuration {
    VarietyKind kind = VarietyKind::CalabiYau;
    int n = 3;
    std::vector<SingularPointRecord> points;
    QMatrix phi;
    ConfigurationFlags flags;
};

enum class Decision { FirstOrderSmoothable, Smoothable, CriterionFails, NotApplicable };

inline std::string decision_name(Decision d) {
    switch (d) {
        case Decision::FirstOrderSmoothable: return "first_order_smoothable";
        case Decision::Smoothable: return "smoothable";
        case Decision::CriterionFails: return "criterion_fails";
        case Decision::NotApplicable: return "not_applicable";
    }
    return "not_applicable";
}

struct SmoothabilityVerdict {
    Decision decision = Decision::CriterionFails;
    std::optional<QVector> witness;  // the nonzero coefficients a_x, when any
    std::vector<std::string> citations;
    std::vector<std::string> consumed_assertions;
    std::string reason;  // failing condition, when the criterion fails
};

// True iff every point is strongly 1-irrational or 1-liminal.
inline bool good_configuration(const Configuration& config) {
    for (const auto& p : config.points) {
        PointClass c = p.effective_class();
        if (c != PointClass::OneLiminal && c != PointClass::StronglyOneIrrational) return false;
    }
    return true;
}

// First-order smoothing criterion for Calabi-Yau configurations: a good
// configuration smooths to first order exactly when the liminal link classes
// admit a relation sum a_x phi(eps_x) = 0 with every a_x nonzero. The
// verdict upgrades to "smoothable" only when unobstructedness is available:
// asserted, automatic in dimension 3, or by the all-1-liminal
// unobstructedness result.
inline SmoothabilityVerdict cy_smoothability(const Configuration& config) {
    SmoothabilityVerdict v;
    if (config.kind != VarietyKind::CalabiYau) {
        v.decision = Decision::NotApplicable;
        v.reason = "configuration is not Calabi-Yau";
        return v;
    }
    if (!config.flags.asserted(config.flags.h1_O_vanishes)) {
        v.reason = "h1_O_vanishes not asserted";
        return v;
    }
    v.consumed_assertions.push_back("h1_O_vanishes");

    std::vector<std::size_t> liminal;
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        PointClass c = config.points[i].effective_class();
        if (c == PointClass::OneLiminal) {
            liminal.push_back(i);
        } else if (c != PointClass::StronglyOneIrrational) {
            v.reason = "good configuration violated: point '" + config.points[i].id +
                       "' is " + point_class_name(c);
            return v;
        }
    }

    if (config.phi.cols() != liminal.size())
        throw MatrixShapeMismatchError(
            "phi has " + std::to_string(config.phi.cols()) + " columns but the configuration has " +
            std::to_string(liminal.size()) + " 1-liminal points");

    auto witness = all_nonzero_kernel_vector(config.phi);
    if (!witness) {
        v.reason = "no relation sum a_x phi(eps_x) = 0 with all a_x nonzero exists";
        v.citations.push_back("cy-first-order-relation-necessary");
        return v;
    }

    v.decision = Decision::FirstOrderSmoothable;
    v.witness = std::move(witness);
    v.citations.push_back("cy-first-order-relation");

    bool all_liminal = liminal.size() == config.points.size();
    if (config.flags.asserted(config.flags.deformations_unobstructed)) {
        v.consumed_assertions.push_back("deformations_unobstructed");
        v.citations.push_back("unobstructedness-asserted");
        v.decision = Decision::Smoothable;
    } else if (config.n == 3) {
        v.citations.push_back("unobstructedness-dim3");
        v.decision = Decision::Smoothable;
    } else if (all_liminal) {
        v.citations.push_back("unobstructedness-all-liminal");
        v.decision = Decision::Smoothable;
    }
    return v;
}

// Fano smoothability: three alternative rule sets, tried in order. (i)
// dimension 3 with rational hypersurface points; (ii) all points 1-irrational
// plus the three asserted vanishing/position hypotheses; (iii) dimension >= 4,
// all points 1-liminal, plus two asserted hypotheses.
inline SmoothabilityVerdict fano_smoothability(const Configuration& config) {
    SmoothabilityVerdict v;
    if (config.kind != VarietyKind::Fano) {
        v.decision = Decision::NotApplicable;
        v.reason = "configuration is not Fano";
        return v;
    }

    std::vector<PointClass> classes;
    classes.reserve(config.points.size());
    for (const auto& p : config.points) classes.push_back(p.effective_class());

    auto all_rational = [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] == PointClass::Other)
                return "point '" + config.points[i].id + "' is not certified rational";
        return std::nullopt;
    };
    auto all_one_irrational = [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] != PointClass::OneLiminal &&
                classes[i] != PointClass::StronglyOneIrrational)
                return "1-irrationality required: point '" + config.points[i].id + "' is " +
                       point_class_name(classes[i]);
        return std::nullopt;
    };
    auto all_liminal = [&]() -> std::optional<std::string> {
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i] != PointClass::OneLiminal)
                return "point '" + config.points[i].id + "' is not 1-liminal";
        return std::nullopt;
    };
    auto need_flag = [&](const std::optional<bool>& f,
                         const char* name) -> std::optional<std::string> {
        if (!config.flags.asserted(f)) return std::string(name) + " not asserted";
        return std::nullopt;
    };

    std::string first_reason;
    auto attempt = [&](std::vector<std::optional<std::string>> conds, const char* citation,
                       std::vector<const char*> consumed) -> bool {
        for (auto& c : conds) {
            if (c) {
                if (first_reason.empty()) first_reason = *c;
                return false;
            }
        }
        v.decision = Decision::Smoothable;
        v.witness = QVector{};
        v.citations.push_back(citation);
        for (auto* a : consumed) v.consumed_assertions.push_back(a);
        return true;
    };

    if (config.n == 3) {
        if (attempt({all_rational()}, "fano-dim3-rational", {})) return v;
    }
    if (attempt({all_one_irrational(),
                 need_flag(config.flags.fano_H_exists_disjoint, "fano_H_exists_disjoint"),
                 need_flag(config.flags.fano_H3T0_vanishes, "fano_H3T0_vanishes"),
                 need_flag(config.flags.fano_H1Omega_vanishes, "fano_H1Omega_vanishes")},
                "fano-one-irrational-ample-section",
                {"fano_H_exists_disjoint", "fano_H3T0_vanishes", "fano_H1Omega_vanishes"}))
        return v;
    if (config.n >= 4) {
        if (attempt({all_liminal(),
                     need_flag(config.flags.fano_H_exists_disjoint, "fano_H_exists_disjoint"),
                     need_flag(config.flags.fano_H1Omega_vanishes, "fano_H1Omega_vanishes")},
                    "fano-liminal-dim-ge4",
                    {"fano_H_exists_disjoint", "fano_H1Omega_vanishes"}))
            return v;
    }
    v.decision = Decision::CriterionFails;
    v.reason = first_reason.empty() ? "no applicable rule" : first_reason;
    return v;
}

inline SmoothabilityVerdict check_smoothability(const Configuration& config) {
    return config.kind == VarietyKind::CalabiYau ? cy_smoothability(config)
                                                 : fano_smoothability(config);
}

// ---------------------------------------------------------------------------
// Configuration JSON schema (frozen keys):
// {"kind": "calabi_yau"|"fano", "n": int, "points": [{"id": str,
//  "poly": str (optional), "tag": str (optional)}], "phi": [[rational str]],
//  "flags": {...}}.  Rationals are "p/q" strings (plain integers accepted).
// ---------------------------------------------------------------------------

namespace config_detail {

inline std::optional<PointClass> tag_from_string(const std::string& s) {
    if (s == "one_liminal") return PointClass::OneLiminal;
    if (s == "strongly_one_irrational") return PointClass::StronglyOneIrrational;
    if (s == "one_rational") return PointClass::OneRational;
    if (s == "other") return PointClass::Other;
    return std::nullopt;
}

inline Rational rational_from_json(const nlohmann::json& j, const std::string& ptr) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        auto r = Rational::parse(j.get<std::string>());
        if (r) return *r;
    }
    throw SchemaError("expected a rational as \"p/q\" string or integer", ptr);
}

}  // namespace config_detail

inline Configuration parse_configuration(const nlohmann::json& j,
                                         const AnalysisOptions& opt = {}) {
    using config_detail::rational_from_json;
    using config_detail::tag_from_string;

    if (!j.is_object()) throw SchemaError("configuration must be an object", "/");
    Configuration config;

    if (!j.contains("kind") || !j.at("kind").is_string())
        throw SchemaError("missing or invalid 'kind'", "/kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "calabi_yau") config.kind = VarietyKind::CalabiYau;
    else if (kind == "fano") config.kind = VarietyKind::Fano;
    else throw SchemaError("kind must be 'calabi_yau' or 'fano'", "/kind");

    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw SchemaError("missing or invalid 'n'", "/n");
    config.n = j.at("n").get<int>();
    if (config.n < 3) throw SchemaError("n must be >= 3", "/n");

    if (!j.contains("points") || !j.at("points").is_array())
        throw SchemaError("missing or invalid 'points'", "/points");
    std::size_t idx = 0;
    for (const auto& pj : j.at("points")) {
        std::string ptr = "/points/" + std::to_string(idx);
        if (!pj.is_object()) throw SchemaError("point must be an object", ptr);
        SingularPointRecord rec;
        if (!pj.contains("id") || !pj.at("id").is_string())
            throw SchemaError("missing or invalid 'id'", ptr + "/id");
        rec.id = pj.at("id").get<std::string>();
        if (pj.contains("tag")) {
            if (!pj.at("tag").is_string()) throw SchemaError("tag must be a string", ptr + "/tag");
            auto t = tag_from_string(pj.at("tag").get<std::string>());
            if (!t)
                throw SchemaError("tag must be one of one_liminal, strongly_one_irrational, "
                                  "one_rational, other",
                                  ptr + "/tag");
            rec.tag = t;
        }
        if (pj.contains("poly")) {
            if (!pj.at("poly").is_string())
                throw SchemaError("poly must be a string", ptr + "/poly");
            rec.poly_text = pj.at("poly").get<std::string>();
            Polynomial f;
            try {
                f = parse_polynomial(*rec.poly_text);
            } catch (const ParseError& e) {
                throw SchemaError(std::string("invalid polynomial: ") + e.what(), ptr + "/poly");
            }
            if (static_cast<int>(f.nvars()) != config.n + 1)
                throw SchemaError("polynomial defines a germ of dimension " +
                                      std::to_string(f.nvars() - 1) +
                                      " but the configuration has n = " + std::to_string(config.n),
                                  ptr + "/poly");
            LocalSingularity sing = analyze_local(f, opt);
            if (sing.smooth_point())
                throw SchemaError("polynomial defines a smooth point", ptr + "/poly");
            if (sing.weight_system) rec.report = classify(sing);
            if (rec.report && rec.report->flags && rec.tag) {
                PointClass computed = rec.effective_class();
                if (computed != *rec.tag)
                    throw SchemaError("tag '" + point_class_name(*rec.tag) +
                                          "' is inconsistent with the computed class '" +
                                          point_class_name(computed) + "'",
                                      ptr + "/tag");
            }
        }
        if (!rec.poly_text && !rec.tag)
            throw SchemaError("point needs a 'poly' or a 'tag'", ptr);
        config.points.push_back(std::move(rec));
        ++idx;
    }

    if (j.contains("phi")) {
        if (!j.at("phi").is_array()) throw SchemaError("phi must be an array of rows", "/phi");
        const auto& rows = j.at("phi");
        std::size_t ncols = 0;
        std::vector<QVector> mat;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::string rptr = "/phi/" + std::to_string(r);
            if (!rows[r].is_array()) throw SchemaError("phi row must be an array", rptr);
            if (r == 0) ncols = rows[r].size();
            else if (rows[r].size() != ncols)
                throw SchemaError("phi rows have inconsistent lengths", rptr);
            QVector row;
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                row.push_back(rational_from_json(rows[r][c], rptr + "/" + std::to_string(c)));
            mat.push_back(std::move(row));
        }
        config.phi = QMatrix::from_rows(mat);
    }

    if (j.contains("flags")) {
        if (!j.at("flags").is_object()) throw SchemaError("flags must be an object", "/flags");
        for (const auto& [key, val] : j.at("flags").items()) {
            std::string fptr = "/flags/" + key;
            if (!val.is_boolean()) throw SchemaError("flag must be a boolean", fptr);
            bool b = val.get<bool>();
            if (key == "h1_O_vanishes") config.flags.h1_O_vanishes = b;
            else if (key == "deformations_unobstructed") config.flags.deformations_unobstructed = b;
            else if (key == "fano_H_exists_disjoint") config.flags.fano_H_exists_disjoint = b;
            else if (key == "fano_H1Omega_vanishes") config.flags.fano_H1Omega_vanishes = b;
            else if (key == "fano_H3T0_vanishes") config.flags.fano_H3T0_vanishes = b;
            else throw SchemaError("unknown flag '" + key + "'", fptr);
        }
    }

    for (const auto& key : j.items()) {
        const std::string& k = key.key();
        if (k != "kind" && k != "n" && k != "points" && k != "phi" && k != "flags")
            throw SchemaError("unknown key '" + k + "'", "/" + k);
    }
    return config;
}

inline nlohmann::ordered_json verdict_to_json(const Configuration& config,
                                              const SmoothabilityVerdict& v) {
    nlohmann::ordered_json out;
    out["schema_version"] = "1";
    out["kind"] = config.kind == VarietyKind::CalabiYau ? "calabi_yau" : "fano";
    out["n"] = config.n;
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const auto& p : config.points) {
        nlohmann::ordered_json pj;
        pj["id"] = p.id;
        try {
            pj["class"] = point_class_name(p.effective_class());
        } catch (const UnclassifiedPointError&) {
            pj["class"] = "unresolved";
        }
        points.push_back(std::move(pj));
    }
    out["points"] = std::move(points);
    out["decision"] = decision_name(v.decision);
    if (v.witness) {
        nlohmann::ordered_json w = nlohmann::ordered_json::array();
        for (const auto& q : *v.witness) w.push_back(q.str());
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    out["citations"] = v.citations;
    out["consumed_assertions"] = v.consumed_assertions;
    if (v.reason.empty()) out["reason"] = nullptr;
    else out["reason"] = v.reason;
    return out;
}

}  // namespace liminal

#endif  // LIMINAL_SMOOTHING_HPP
