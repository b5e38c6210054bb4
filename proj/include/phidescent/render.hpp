#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "phidescent/criteria.hpp"
#include "phidescent/errors.hpp"
#include "phidescent/gauss.hpp"
#include "phidescent/quadforms.hpp"
#include "phidescent/search.hpp"

namespace phidescent::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "phi-descent/1";

// ---------------------------------------------------------------------------
// enum <-> string
// ---------------------------------------------------------------------------

inline std::string to_string(criteria::Status s) {
    return s == criteria::Status::NoSolutions ? "NoSolutions" : "Inconclusive";
}

inline criteria::Status status_from_string(const std::string& s) {
    if (s == "NoSolutions") return criteria::Status::NoSolutions;
    if (s == "Inconclusive") return criteria::Status::Inconclusive;
    throw InvalidArgument("unknown status: " + s);
}

inline std::string to_string(criteria::Criterion c) {
    switch (c) {
        case criteria::Criterion::I: return "I";
        case criteria::Criterion::II: return "II";
        case criteria::Criterion::III: return "III";
        default: return "None";
    }
}

inline criteria::Criterion criterion_from_string(const std::string& s) {
    if (s == "I") return criteria::Criterion::I;
    if (s == "II") return criteria::Criterion::II;
    if (s == "III") return criteria::Criterion::III;
    if (s == "None") return criteria::Criterion::None;
    throw InvalidArgument("unknown criterion: " + s);
}

// Large integers travel as decimal strings so arbitrary precision survives
// any JSON consumer; p, c, l and other machine-sized fields stay numeric.

inline json to_json(const quadforms::QuadForm& f) {
    return json{{"a", f.a.get_str()}, {"b", f.b.get_str()}, {"c", f.c.get_str()}};
}

inline quadforms::QuadForm form_from_json(const json& j) {
    return quadforms::QuadForm{mpz_class(j.at("a").get<std::string>()),
                               mpz_class(j.at("b").get<std::string>()),
                               mpz_class(j.at("c").get<std::string>())};
}

// ---------------------------------------------------------------------------
// Verdict
// ---------------------------------------------------------------------------

inline json to_json(const criteria::Verdict& v) {
    json evidence;
    if (std::holds_alternative<criteria::SymbolEvidence>(v.evidence)) {
        const auto& ev = std::get<criteria::SymbolEvidence>(v.evidence);
        evidence = json{{"type", "symbol"},
                        {"symbol", ev.symbol},
                        {"value", ev.value}};
    } else if (std::holds_alternative<criteria::ClassEvidence>(v.evidence)) {
        const auto& ev = std::get<criteria::ClassEvidence>(v.evidence);
        evidence = json{{"type", "class_group"},
                        {"D", ev.D.get_str()},
                        {"h", ev.h},
                        {"prime_form", to_json(ev.prime_class)},
                        {"lth_power_subgroup_size", ev.lth_power_subgroup_size}};
    } else {
        evidence = json{{"type", "none"}};
    }
    return json{{"schema", kSchema}, {"p", v.triple.p},     {"c", v.triple.c},
                {"l", v.triple.l},   {"status", to_string(v.status)},
                {"criterion", to_string(v.criterion)},      {"evidence", evidence}};
}

inline criteria::Verdict verdict_from_json(const json& j) {
    criteria::Verdict v{
        ntheory::Triple(j.at("p").get<long>(), j.at("c").get<long>(),
                        j.at("l").get<long>()),
        status_from_string(j.at("status").get<std::string>()),
        criterion_from_string(j.at("criterion").get<std::string>()),
        std::monostate{}};
    const json& ev = j.at("evidence");
    const std::string type = ev.at("type").get<std::string>();
    if (type == "symbol") {
        v.evidence = criteria::SymbolEvidence{ev.at("symbol").get<std::string>(),
                                              ev.at("value").get<int>()};
    } else if (type == "class_group") {
        v.evidence = criteria::ClassEvidence{
            mpz_class(ev.at("D").get<std::string>()), ev.at("h").get<long>(),
            form_from_json(ev.at("prime_form")),
            ev.at("lth_power_subgroup_size").get<long>()};
    } else if (type != "none") {
        throw InvalidArgument("unknown evidence type: " + type);
    }
    return v;
}

inline std::string verdict_text(const criteria::Verdict& v) {
    std::string out;
    out += "triple: p=" + std::to_string(v.triple.p) +
           " c=" + std::to_string(v.triple.c) +
           " l=" + std::to_string(v.triple.l) + "\n";
    out += "status: " + to_string(v.status) + "\n";
    out += "criterion: " + to_string(v.criterion) + "\n";
    if (std::holds_alternative<criteria::SymbolEvidence>(v.evidence)) {
        const auto& ev = std::get<criteria::SymbolEvidence>(v.evidence);
        out += "evidence: " + ev.symbol + " = " + std::to_string(ev.value) + "\n";
    } else if (std::holds_alternative<criteria::ClassEvidence>(v.evidence)) {
        const auto& ev = std::get<criteria::ClassEvidence>(v.evidence);
        out += "evidence: D = " + ev.D.get_str() +
               ", h = " + std::to_string(ev.h) + ", prime class = (" +
               ev.prime_class.a.get_str() + "," + ev.prime_class.b.get_str() +
               "," + ev.prime_class.c.get_str() + "), l-th power subgroup size = " +
               std::to_string(ev.lth_power_subgroup_size) + "\n";
    } else {
        out += "evidence: none (criteria are silent; no insolubility claim)\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gauss pair
// ---------------------------------------------------------------------------

inline json coeff_strings(const series::IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs) arr.push_back(c.get_str());
    return arr;
}

inline series::IntPoly poly_from_json(const json& arr) {
    std::vector<mpz_class> coeffs;
    for (const auto& c : arr) coeffs.emplace_back(c.get<std::string>());
    return series::IntPoly(std::move(coeffs));
}

inline json to_json(const gauss::GaussPair& gp) {
    return json{{"schema", kSchema},
                {"p", gp.p},
                {"delta", gp.delta},
                {"A", coeff_strings(gp.A)},
                {"B", coeff_strings(gp.B)},
                {"identity_verified", gauss::verify_identity(gp)}};
}

inline gauss::GaussPair gauss_pair_from_json(const json& j) {
    return gauss::GaussPair{j.at("p").get<long>(), j.at("delta").get<int>(),
                            poly_from_json(j.at("A")), poly_from_json(j.at("B"))};
}

inline std::string gauss_text(const gauss::GaussPair& gp) {
    auto coeff_list = [](const series::IntPoly& p) {
        std::string s = "[";
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            if (i) s += ", ";
            s += p.coeffs[i].get_str();
        }
        return s + "]";
    };
    std::string out;
    out += "p = " + std::to_string(gp.p) + "\n";
    out += "delta = " + std::string(gp.delta > 0 ? "+1" : "-1") + "\n";
    out += "A = " + coeff_list(gp.A) + "\n";
    out += "B = " + coeff_list(gp.B) + "\n";
    out += std::string("identity: ") +
           (gauss::verify_identity(gp) ? "verified" : "FAILED") + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Class group
// ---------------------------------------------------------------------------

inline json to_json(const quadforms::ClassGroup& g) {
    json classes = json::array();
    for (const auto& f : g.classes) classes.push_back(to_json(f));
    return json{{"schema", kSchema},
                {"D", g.D.get_str()},
                {"h", g.h()},
                {"identity_index", g.identity_index},
                {"classes", classes}};
}

inline quadforms::ClassGroup class_group_from_json(const json& j) {
    quadforms::ClassGroup g;
    g.D = mpz_class(j.at("D").get<std::string>());
    g.identity_index = j.at("identity_index").get<std::size_t>();
    for (const auto& f : j.at("classes")) g.classes.push_back(form_from_json(f));
    return g;
}

inline std::string class_group_text(const quadforms::ClassGroup& g) {
    std::string out;
    out += "D = " + g.D.get_str() + "\n";
    out += "h = " + std::to_string(g.h()) + "\n";
    for (const auto& f : g.classes)
        out += "(" + f.a.get_str() + ", " + f.b.get_str() + ", " +
               f.c.get_str() + ")\n";
    return out;
}

// ---------------------------------------------------------------------------
// Search results
// ---------------------------------------------------------------------------

inline json search_to_json(const ntheory::Triple& t, long x_bound,
                           const std::vector<search::SolutionRecord>& records) {
    json solutions = json::array();
    for (const auto& r : records)
        solutions.push_back(json{{"x", r.x.get_str()}, {"y", r.y.get_str()}});
    return json{{"schema", kSchema}, {"p", t.p},
                {"c", t.c},          {"l", t.l},
                {"x_bound", x_bound}, {"solutions", solutions}};
}

inline std::vector<search::SolutionRecord> search_from_json(const json& j) {
    const ntheory::Triple t(j.at("p").get<long>(), j.at("c").get<long>(),
                            j.at("l").get<long>());
    std::vector<search::SolutionRecord> out;
    for (const auto& s : j.at("solutions"))
        out.push_back(search::SolutionRecord{
            t, mpz_class(s.at("x").get<std::string>()),
            mpz_class(s.at("y").get<std::string>())});
    return out;
}

inline std::string search_text(const ntheory::Triple& t, long x_bound,
                               const std::vector<search::SolutionRecord>& records) {
    std::string out = "p=" + std::to_string(t.p) + " c=" + std::to_string(t.c) +
                      " l=" + std::to_string(t.l) +
                      " x_bound=" + std::to_string(x_bound) + "\n";
    if (records.empty()) {
        out += "no solutions in range\n";
        return out;
    }
    for (const auto& r : records)
        out += "x = " + r.x.get_str() + ", y = " + r.y.get_str() + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Scan table
// ---------------------------------------------------------------------------

struct ScanRow {
    long p;
    long c;
    long l;
    criteria::Status status;
    criteria::Criterion criterion;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "p,c,l,status,criterion\n";
    for (const auto& r : rows)
        out += std::to_string(r.p) + "," + std::to_string(r.c) + "," +
               std::to_string(r.l) + "," + to_string(r.status) + "," +
               to_string(r.criterion) + "\n";
    return out;
}

inline std::vector<ScanRow> scan_from_csv(const std::string& csv) {
    std::vector<ScanRow> rows;
    std::size_t pos = 0;
    bool header = true;
    while (pos < csv.size()) {
        std::size_t end = csv.find('\n', pos);
        if (end == std::string::npos) end = csv.size();
        const std::string line = csv.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        if (header) {
            if (line != "p,c,l,status,criterion")
                throw InvalidArgument("scan_from_csv: bad header: " + line);
            header = false;
            continue;
        }
        std::vector<std::string> fields;
        std::size_t fp = 0;
        while (true) {
            std::size_t comma = line.find(',', fp);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(fp));
                break;
            }
            fields.push_back(line.substr(fp, comma - fp));
            fp = comma + 1;
        }
        if (fields.size() != 5)
            throw InvalidArgument("scan_from_csv: bad row: " + line);
        rows.push_back(ScanRow{std::stol(fields[0]), std::stol(fields[1]),
                               std::stol(fields[2]),
                               status_from_string(fields[3]),
                               criterion_from_string(fields[4])});
    }
    return rows;
}

inline json scan_to_json(const std::vector<ScanRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"p", r.p},
                           {"c", r.c},
                           {"l", r.l},
                           {"status", to_string(r.status)},
                           {"criterion", to_string(r.criterion)}});
    return json{{"schema", kSchema}, {"rows", arr}};
}

inline std::vector<ScanRow> scan_from_json(const json& j) {
    std::vector<ScanRow> rows;
    for (const auto& r : j.at("rows"))
        rows.push_back(ScanRow{r.at("p").get<long>(), r.at("c").get<long>(),
                               r.at("l").get<long>(),
                               status_from_string(r.at("status").get<std::string>()),
                               criterion_from_string(
                                   r.at("criterion").get<std::string>())});
    return rows;
}

inline std::string scan_text(const std::vector<ScanRow>& rows) {
    std::string out;
    for (const auto& r : rows)
        out += "p=" + std::to_string(r.p) + " c=" + std::to_string(r.c) +
               " l=" + std::to_string(r.l) + " " + to_string(r.status) +
               (r.criterion == criteria::Criterion::None
                    ? std::string()
                    : " via " + to_string(r.criterion)) +
               "\n";
    return out;
}

} // namespace phidescent::cli
