// Strict JSON input parsing and report emission for the command-line tool.
// Unknown fields are rejected, rational numbers travel as "p/q" strings, and
// every report embeds the tool version, an input hash and the effective
// bounds.

#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cohint/bun_ih.hpp"
#include "cohint/face_lattice.hpp"
#include "cohint/graded_series.hpp"
#include "cohint/hall_induction.hpp"
#include "cohint/poly.hpp"
#include "cohint/quiver_bps.hpp"
#include "cohint/rep_symmetry.hpp"
#include "cohint/root_datum.hpp"

namespace cohint {

inline constexpr const char* kToolVersion = "0.1.0";

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& w) : std::runtime_error(w) {}
};

using json = nlohmann::json;

inline std::string fnv1a_hex(const std::string& bytes) {
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

inline void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                                const std::string& where) {
    if (!j.is_object()) throw validation_error(where + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw validation_error(where + ": unknown field '" + it.key() + "'");
}

inline json load_json_arg(const std::string& arg, std::string* raw_out = nullptr) {
    std::string raw;
    if (!arg.empty() && arg[0] == '{') {
        raw = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw validation_error("cannot open input file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        raw = ss.str();
    }
    if (raw_out) *raw_out = raw;
    json j;
    try {
        j = json::parse(raw);
    } catch (const std::exception& e) {
        throw validation_error(std::string("JSON parse error: ") + e.what());
    }
    return j;
}

inline GroupSpec parse_group_spec(const json& j) {
    reject_unknown_keys(j, {"factors", "central_torus"}, "group");
    GroupSpec spec;
    if (j.contains("central_torus")) {
        if (!j["central_torus"].is_number_integer())
            throw validation_error("group.central_torus must be an integer");
        spec.central_torus = j["central_torus"].get<int>();
    }
    if (j.contains("factors")) {
        if (!j["factors"].is_array()) throw validation_error("group.factors must be an array");
        for (const auto& f : j["factors"]) {
            reject_unknown_keys(f, {"type", "rank", "isogeny"}, "group.factors[]");
            FactorSpec fs;
            std::string type = f.at("type").get<std::string>();
            if (type.size() != 1) throw validation_error("factor type must be a single letter");
            fs.type = type[0];
            fs.rank = f.at("rank").get<int>();
            std::string iso = f.value("isogeny", "sc");
            if (iso == "sc" || iso == "simply-connected")
                fs.isogeny = Isogeny::SimplyConnected;
            else if (iso == "adjoint")
                fs.isogeny = Isogeny::Adjoint;
            else if (iso == "gl")
                fs.isogeny = Isogeny::GL;
            else
                throw validation_error("unknown isogeny '" + iso + "'");
            spec.factors.push_back(fs);
        }
    }
    return spec;
}

inline WeightMultiset parse_weights(const json& j, size_t rank) {
    WeightMultiset w;
    if (!j.is_array()) throw validation_error("weights must be an array");
    for (const auto& e : j) {
        reject_unknown_keys(e, {"covector", "mult"}, "weights[]");
        IVec cv;
        for (const auto& x : e.at("covector")) {
            if (!x.is_number_integer()) throw validation_error("weight covectors are integer");
            cv.push_back(x.get<long long>());
        }
        if (cv.size() != rank)
            throw validation_error("weight covector arity differs from the group rank");
        long long m = e.value("mult", 1LL);
        w.add(cv, m);
    }
    return w;
}

struct GroupDocument {
    GroupSpec spec;
    RootDatum rd;
    WeightMultiset weights;
    std::string input_hash;
};

inline GroupDocument load_group_document(const std::string& arg) {
    std::string raw;
    json j = load_json_arg(arg, &raw);
    reject_unknown_keys(j, {"schema", "group", "weights"}, "document");
    GroupDocument doc;
    doc.spec = parse_group_spec(j.at("group"));
    doc.rd = build_root_datum(doc.spec);
    if (j.contains("weights")) doc.weights = parse_weights(j["weights"], doc.rd.rank);
    doc.input_hash = fnv1a_hex(raw);
    return doc;
}

inline json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

inline json qmat_to_json(const QMat& m) {
    json a = json::array();
    for (const auto& r : m) a.push_back(qvec_to_json(r));
    return a;
}

inline json poly_to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["exponents"] = e;
        t["coeff"] = c.to_string();
        terms.push_back(t);
    }
    return terms;
}

inline Poly parse_poly(const json& j, size_t nvars) {
    if (!j.is_array()) throw validation_error("polynomial must be an array of terms");
    Poly p(nvars);
    for (const auto& t : j) {
        reject_unknown_keys(t, {"exponents", "coeff"}, "polynomial[]");
        std::vector<int> e = t.at("exponents").get<std::vector<int>>();
        if (e.size() != nvars) throw validation_error("polynomial exponent arity mismatch");
        for (int x : e)
            if (x < 0) throw validation_error("polynomial exponents must be >= 0");
        p.add_term(e, Rat::from_string(t.at("coeff").get<std::string>()));
    }
    return p;
}

inline json series_to_json(const GradedSeries& s) {
    json terms = json::array();
    for (const auto& [g, sl] : s.slices())
        for (const auto& [k, c] : sl.coeff) {
            json t;
            t["gamma"] = g;
            t["half_power"] = k;
            t["coeff"] = c.to_string();
            terms.push_back(t);
        }
    return terms;
}

inline json report_envelope(const std::string& kind, const std::string& input_hash) {
    json r;
    r["schema"] = std::string("cohint/report/") + kind + "/1";
    r["tool_version"] = kToolVersion;
    r["input_hash"] = input_hash;
    return r;
}

}  // namespace cohint
