#ifndef LIMINAL_REPORT_HPP
#define LIMINAL_REPORT_HPP

#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "liminal/classifier.hpp"
#include "liminal/families.hpp"

namespace liminal {

// Report document, schema version "1". Keys and their order are frozen so
// downstream tables stay stable; all rationals are "p/q" strings; counts are
// JSON numbers when they fit 64 bits and decimal strings beyond that.

inline nlohmann::ordered_json json_count(const Integer& z) {
    if (fits_int64(z)) return to_int64(z);
    return z.get_str();
}

struct AnalysisDocument {
    Polynomial f;
    LocalSingularity singularity;
    std::optional<ClassificationReport> report;  // absent for smooth points / no weight system
    std::vector<std::string> warnings;
};

inline AnalysisDocument analyze_document(const Polynomial& f, const AnalysisOptions& opt = {}) {
    AnalysisDocument doc;
    doc.f = f;
    if (f.is_zero()) throw DomainError("zero polynomial: nothing to analyze");
    doc.singularity = analyze_local(f, opt);
    if (doc.singularity.smooth_point()) {
        doc.warnings.push_back("not a singularity: the germ is a smooth point");
        return doc;
    }
    if (doc.singularity.weight_system) {
        doc.report = classify(doc.singularity);
        doc.warnings.insert(doc.warnings.end(), doc.report->warnings.begin(),
                            doc.report->warnings.end());
    } else {
        doc.warnings.push_back(
            "no diagonal weight system: weight-graded invariants are unavailable");
        if (doc.singularity.quasihomogeneity() == Quasihomogeneity::CoordinateChange)
            doc.warnings.push_back(
                "mu = tau: quasihomogeneous after a coordinate change not found here");
    }
    if (doc.singularity.localized)
        doc.warnings.push_back(
            "critical points away from the origin were discarded by localization");
    return doc;
}

inline std::string classification_label(const AnalysisDocument& doc) {
    if (doc.singularity.smooth_point()) return "not-a-singularity";
    if (!doc.report) return "undetermined";
    return doc.report->label();
}

inline std::string quasihomogeneity_name(Quasihomogeneity q) {
    switch (q) {
        case Quasihomogeneity::Diagonal: return "diagonal";
        case Quasihomogeneity::CoordinateChange: return "coordinate_change";
        case Quasihomogeneity::No: return "no";
    }
    return "no";
}

inline nlohmann::ordered_json analysis_to_json(const AnalysisDocument& doc) {
    using nlohmann::ordered_json;
    const LocalSingularity& s = doc.singularity;
    ordered_json out;
    out["schema_version"] = "1";
    ordered_json input;
    input["poly"] = doc.f.str();
    input["variables"] = doc.f.var_names();
    input["n"] = static_cast<std::int64_t>(s.n);
    out["input"] = std::move(input);
    out["mu"] = json_count(s.milnor);
    out["tau"] = json_count(s.tyurina);
    out["localized"] = s.localized;
    out["quasihomogeneity"] =
        s.smooth_point() ? ordered_json(nullptr) : ordered_json(quasihomogeneity_name(s.quasihomogeneity()));
    if (s.weight_system) {
        ordered_json ws;
        ws["weights"] = s.weight_system->weights;
        ws["degree"] = s.weight_system->degree;
        ws["ambiguous"] = s.weight_system->ambiguous;
        out["weight_system"] = std::move(ws);
    } else {
        out["weight_system"] = nullptr;
    }
    out["a_invariant"] = json_count(s.milnor - s.tyurina);
    out["classification"] = classification_label(doc);

    if (doc.report) {
        const ClassificationReport& r = *doc.report;
        out["alpha_tilde"] = r.alpha_tilde.str();
        out["N"] = r.N;
        out["dim_K"] = json_count(r.dim_K);
        out["dim_K_prime"] = json_count(r.dim_K_prime);
        out["link_invariant"] = json_count(r.link_invariant);
        out["b_n_minus_1_1"] = json_count(r.b_n11);
        out["b_1_n_minus_2"] = json_count(r.b_1n2);
        if (r.flags) {
            ordered_json fl;
            fl["rational"] = r.flags->rational;
            fl["one_rational"] = r.flags->one_rational;
            fl["one_du_bois"] = r.flags->one_du_bois;
            fl["one_liminal"] = r.flags->one_liminal;
            fl["strongly_one_irrational"] = r.flags->strongly_one_irrational;
            out["flags"] = std::move(fl);
        } else {
            out["flags"] = nullptr;
        }
        ordered_json dec;
        for (const auto& [k, dim] : r.decomposition.dimensions)
            dec[std::to_string(k)] = json_count(dim);
        out["weight_decomposition"] = std::move(dec);
        if (!r.decomposition.bases.empty()) {
            ordered_json bases;
            for (const auto& [k, mons] : r.decomposition.bases) {
                ordered_json list = ordered_json::array();
                for (const auto& m : mons) {
                    std::string text = doc.f.monomial_str(m);
                    list.push_back(text.empty() ? "1" : text);
                }
                bases[std::to_string(k)] = std::move(list);
            }
            out["weight_space_bases"] = std::move(bases);
        } else {
            out["weight_space_bases"] = nullptr;
        }
        ordered_json spec = ordered_json::array();
        for (const auto& e : r.spec) {
            ordered_json entry;
            entry["value"] = e.value.str();
            entry["multiplicity"] = json_count(e.multiplicity);
            spec.push_back(std::move(entry));
        }
        out["spectrum"] = std::move(spec);
        ordered_json kl;
        for (const auto& [k, f] : r.k_level) {
            ordered_json lv;
            lv["du_bois"] = f.du_bois;
            lv["rational"] = f.rational;
            kl[std::to_string(k)] = std::move(lv);
        }
        out["k_level"] = std::move(kl);
    } else {
        out["alpha_tilde"] = nullptr;
        out["N"] = nullptr;
        out["dim_K"] = nullptr;
        out["dim_K_prime"] = nullptr;
        out["link_invariant"] = nullptr;
        out["b_n_minus_1_1"] = nullptr;
        out["b_1_n_minus_2"] = nullptr;
        out["flags"] = nullptr;
        out["weight_decomposition"] = nullptr;
        out["weight_space_bases"] = nullptr;
        out["spectrum"] = nullptr;
        out["k_level"] = nullptr;
    }
    out["warnings"] = doc.warnings;
    return out;
}

inline std::string analysis_to_text(const AnalysisDocument& doc) {
    const LocalSingularity& s = doc.singularity;
    std::ostringstream os;
    os << "germ: " << doc.f.str() << "\n";
    os << "n: " << s.n << "\n";
    os << "mu: " << s.milnor.get_str() << "\n";
    os << "tau: " << s.tyurina.get_str() << "\n";
    if (s.smooth_point()) {
        os << "classification: not-a-singularity\n";
    } else {
        os << "quasihomogeneity: " << quasihomogeneity_name(s.quasihomogeneity()) << "\n";
        if (s.weight_system) os << "weight_system: " << s.weight_system->str() << "\n";
        if (doc.report) {
            const auto& r = *doc.report;
            os << "alpha_tilde: " << r.alpha_tilde.str() << "\n";
            os << "N: " << r.N << "\n";
            os << "dim_K: " << r.dim_K.get_str() << "  dim_K': " << r.dim_K_prime.get_str()
               << "  link: " << r.link_invariant.get_str() << "\n";
            os << "b^{n-1,1}: " << r.b_n11.get_str() << "  b^{1,n-2}: " << r.b_1n2.get_str()
               << "\n";
            os << "spectrum:";
            for (const auto& e : r.spec)
                os << " " << e.value.str() << "x" << e.multiplicity.get_str();
            os << "\n";
        }
        os << "classification: " << classification_label(doc) << "\n";
    }
    for (const auto& w : doc.warnings) os << "warning: " << w << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Family tables
// ---------------------------------------------------------------------------

enum class Family { FermatCone, Brieskorn, ExampleTwoTen };

struct TableRow {
    std::string param;  // "d=3" / "b=2;2;4" / "k=2"
    int n = 0;
    AnalysisDocument doc;
};

struct TableRequest {
    Family family = Family::FermatCone;
    int n_min = 3, n_max = 6;
    int d_min = 2, d_max = 6;
    int k_min = 2, k_max = 4;
    // Brieskorn exponent pattern: fixed integers, or c*n tokens expanded over
    // the n range, e.g. {"2","2","2","2n"}.
    std::vector<std::string> b_pattern;
    std::size_t guard_members = 400;
};

inline std::vector<std::pair<std::string, Polynomial>> table_members(const TableRequest& req) {
    std::vector<std::pair<std::string, Polynomial>> members;
    auto guard = [&](std::size_t count) {
        if (count > req.guard_members)
            throw TooLargeError("table would have more than " +
                                std::to_string(req.guard_members) + " members");
    };
    switch (req.family) {
        case Family::FermatCone: {
            for (int n = req.n_min; n <= req.n_max; ++n)
                for (int d = req.d_min; d <= req.d_max; ++d) {
                    guard(members.size() + 1);
                    members.push_back({"n=" + std::to_string(n) + ",d=" + std::to_string(d),
                                       fermat_cone(n, d)});
                }
            break;
        }
        case Family::Brieskorn: {
            if (req.b_pattern.empty())
                throw DomainError("brieskorn table needs an exponent pattern");
            bool has_n = false;
            for (const auto& tok : req.b_pattern)
                if (tok.find('n') != std::string::npos) has_n = true;
            int lo = has_n ? req.n_min : 0, hi = has_n ? req.n_max : 0;
            for (int n = lo; n <= hi; ++n) {
                std::vector<std::uint32_t> b;
                std::string label = "b=";
                for (std::size_t i = 0; i < req.b_pattern.size(); ++i) {
                    const std::string& tok = req.b_pattern[i];
                    long v;
                    auto pos = tok.find('n');
                    if (pos == std::string::npos) {
                        v = std::stol(tok);
                    } else {
                        long c = pos == 0 ? 1 : std::stol(tok.substr(0, pos));
                        v = c * n;
                    }
                    if (v < 2) throw DomainError("brieskorn exponent below 2 in pattern");
                    b.push_back(static_cast<std::uint32_t>(v));
                    label += (i ? ";" : "") + std::to_string(v);
                }
                guard(members.size() + 1);
                members.push_back({label, brieskorn_polynomial(b)});
            }
            break;
        }
        case Family::ExampleTwoTen: {
            for (int k = req.k_min; k <= req.k_max; ++k) {
                guard(members.size() + 1);
                members.push_back({"k=" + std::to_string(k), example_two_ten(k)});
            }
            break;
        }
    }
    return members;
}

// Analyses run concurrently (every analysis is a pure function of its germ);
// rows are assembled in member order, so the output is deterministic
// regardless of scheduling.
inline std::vector<TableRow> analyze_table(const TableRequest& req,
                                           const AnalysisOptions& opt = {}) {
    auto members = table_members(req);
    std::vector<std::future<AnalysisDocument>> futures;
    futures.reserve(members.size());
    for (const auto& [label, poly] : members)
        futures.push_back(std::async(std::launch::async | std::launch::deferred,
                                     [poly = poly, opt] { return analyze_document(poly, opt); }));
    std::vector<TableRow> rows;
    rows.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        TableRow row;
        row.param = members[i].first;
        row.doc = futures[i].get();
        row.n = static_cast<int>(row.doc.singularity.n);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Comma-separated, header row, rationals as "p/q", LF line endings.
inline std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,member,mu,alpha_tilde,rational,one_rational,one_du_bois,one_liminal,"
          "strongly_one_irrational,classification,dim_K,dim_K_prime,link_invariant\n";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const auto& row : rows) {
        const auto& r = row.doc.report;
        os << row.n << "," << row.param << "," << row.doc.singularity.milnor.get_str() << ",";
        if (r) os << r->alpha_tilde.str();
        os << ",";
        if (r && r->flags) {
            os << flag(r->flags->rational) << "," << flag(r->flags->one_rational) << ","
               << flag(r->flags->one_du_bois) << "," << flag(r->flags->one_liminal) << ","
               << flag(r->flags->strongly_one_irrational);
        } else {
            os << ",,,,";
        }
        os << "," << classification_label(row.doc) << ",";
        if (r)
            os << r->dim_K.get_str() << "," << r->dim_K_prime.get_str() << ","
               << r->link_invariant.get_str();
        else
            os << ",,";
        os << "\n";
    }
    return os.str();
}

}  // namespace liminal

#endif  // LIMINAL_REPORT_HPP
