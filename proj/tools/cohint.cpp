// cohint: face lattices, representation symmetry, cohomological Hall
// induction, BPS series of quivers and IH polynomials of bundle moduli,
// over exact rational arithmetic.
//
// Exit codes: 0 success, 1 validation error, 2 internal invariant violation
// (invariant violations still emit their report document).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cohint/jobio.hpp"

using namespace cohint;

namespace {

unsigned long long g_seed = 0;  // echoed into reports for reproducibility

json envelope(const std::string& kind, const std::string& input_hash) {
    json r = report_envelope(kind, input_hash);
    r["seed"] = g_seed;
    return r;
}

long long default_window() {
    const char* env = std::getenv("COHINT_WINDOW");
    if (!env) return 40;
    try {
        long long v = std::stoll(env);
        if (v < 4 || v > 4096) throw validation_error("COHINT_WINDOW out of range");
        return v;
    } catch (const std::exception&) {
        throw validation_error("COHINT_WINDOW must be an integer");
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open output file: " + path);
    out << text << "\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') r += '"';
        r += c;
    }
    return r + "\"";
}

int run_faces(const std::string& input, const std::string& output) {
    GroupDocument doc = load_group_document(input);
    auto weyl = weyl_elements(doc.rd);
    auto classes = special_faces(doc.rd, doc.weights, weyl);
    json rep = envelope("faces", doc.input_hash);
    rep["group_label"] = doc.rd.label;
    rep["central_rank"] = central_rank(doc.rd, doc.weights);
    rep["bounds"] = {{"chamber_max_dim", ChamberBounds{}.max_dim},
                     {"chamber_max_walls", ChamberBounds{}.max_walls}};
    json faces = json::array();
    for (const auto& fc : classes) {
        json f;
        f["dim"] = fc.face.dim();
        f["basis"] = qmat_to_json(fc.face.basis);
        f["aut_order"] = fc.aut.order();
        f["orbit_size"] = fc.orbit_size;
        ChamberBounds bounds;
        if (fc.face.dim() <= bounds.max_dim && fc.face.walls.size() <= bounds.max_walls) {
            auto chambers = chambers_in_face(fc.face, bounds);
            f["chambers"] = chambers.size();
            auto sgn = sign_representation(doc.rd, doc.weights, fc.face, fc.aut, chambers);
            f["sign_character"] = sgn.values;
            f["numerically_symmetric"] = sgn.symmetric_on_face;
        } else {
            f["chambers_skipped"] = "face exceeds the chamber enumeration bounds";
        }
        faces.push_back(f);
    }
    rep["faces"] = faces;
    write_output(output, rep.dump(2));
    return 0;
}

int run_sym(const std::string& input, const std::string& output) {
    GroupDocument doc = load_group_document(input);
    json rep = envelope("sym", doc.input_hash);
    rep["group_label"] = doc.rd.label;
    rep["total_dim"] = doc.weights.total_dim();
    bool winv = is_weyl_invariant(doc.rd, doc.weights);
    rep["weyl_invariant"] = winv;
    if (!winv) {
        rep["note"] = "analysis requires a Weyl-invariant weight multiset";
        write_output(output, rep.dump(2));
        return 0;
    }
    bool virt = doc.weights.is_virtual();
    rep["virtual"] = virt;
    bool sym = is_symmetric(doc.weights);
    rep["symmetric"] = sym;
    if (sym) {
        rep["orthogonal"] =
            virt ? is_orthogonal_virtual(doc.rd, doc.weights) : is_orthogonal(doc.rd, doc.weights);
    }
    json dec = json::array();
    for (const auto& s : decompose_irreducibles(doc.rd, doc.weights, virt)) {
        json d;
        d["highest_weight"] = s.highest_weight;
        d["multiplicity"] = s.multiplicity;
        d["self_duality"] = to_string(self_dual_indicator(doc.rd, s.highest_weight));
        dec.push_back(d);
    }
    rep["irreducibles"] = dec;
    write_output(output, rep.dump(2));
    return 0;
}

int run_cohi(const std::string& input, const std::string& output) {
    std::string raw;
    json j = load_json_arg(input, &raw);
    reject_unknown_keys(j, {"schema", "group", "weights", "face_basis", "polynomial", "chamber"},
                        "document");
    GroupSpec spec = parse_group_spec(j.at("group"));
    RootDatum rd = build_root_datum(spec);
    WeightMultiset weights;
    if (j.contains("weights")) weights = parse_weights(j["weights"], rd.rank);
    QMat basis;
    for (const auto& row : j.at("face_basis")) {
        QVec v;
        for (const auto& x : row) {
            if (x.is_number_integer())
                v.push_back(Rat(x.get<long long>()));
            else
                v.push_back(Rat::from_string(x.get<std::string>()));
        }
        if (v.size() != rd.rank) throw validation_error("face basis arity mismatch");
        basis.push_back(v);
    }
    Poly f = parse_poly(j.at("polynomial"), rd.rank);
    size_t chamber = j.value("chamber", 0);
    auto weyl = weyl_elements(rd);
    Arrangement arr = arrangement(rd, weights);
    Face face = make_face(arr, basis);
    auto chambers = chambers_in_face(face);
    if (chamber >= chambers.size()) throw validation_error("chamber index out of range");
    InductionResult r = induction(rd, weights, face, chambers, chamber, f, weyl);
    json rep = envelope("cohi", fnv1a_hex(raw));
    rep["result"] = poly_to_json(r.value);
    rep["shift"] = r.shift;
    rep["chamber_id"] = r.chamber_id;
    rep["chamber_count"] = chambers.size();
    write_output(output, rep.dump(2));
    return 0;
}

int run_bg_check(const std::string& input, long long degree_bound, const std::string& format,
                 const std::string& output) {
    GroupDocument doc = load_group_document(input);
    auto weyl = weyl_elements(doc.rd);
    BgReport bg = check_integrality_bg(doc.rd, degree_bound, weyl);
    if (format == "latex" || format == "csv") {
        std::ostringstream os;
        if (format == "latex") {
            os << "\\begin{tabular}{rrrrl}\n\\toprule\n";
            os << "degree & source & target & rank & verdict \\\\\n\\midrule\n";
            for (const auto& r : bg.rows)
                os << r.cohomological_degree << " & " << r.source_dim << " & " << r.target_dim
                   << " & " << r.image_rank << " & " << (r.pass ? "PASS" : "FAIL") << " \\\\\n";
            os << "\\bottomrule\n\\end{tabular}";
        } else {
            os << "degree,source_dim,target_dim,image_rank,verdict\n";
            for (const auto& r : bg.rows)
                os << r.cohomological_degree << "," << r.source_dim << "," << r.target_dim << ","
                   << r.image_rank << "," << (r.pass ? "PASS" : "FAIL") << "\n";
        }
        write_output(output, os.str());
    } else {
        json rep = envelope("bg-check", doc.input_hash);
        rep["group_label"] = doc.rd.label;
        rep["degree_bound"] = degree_bound;
        rep["fundamental_degrees"] = doc.rd.degrees;
        json rows = json::array();
        for (const auto& r : bg.rows) {
            json row;
            row["degree"] = r.cohomological_degree;
            row["source_dim"] = r.source_dim;
            row["target_dim"] = r.target_dim;
            row["image_rank"] = r.image_rank;
            row["verdict"] = r.pass ? "PASS" : "FAIL";
            rows.push_back(row);
        }
        rep["rows"] = rows;
        rep["pass"] = bg.pass;
        write_output(output, rep.dump(2));
    }
    return bg.pass ? 0 : 2;
}

json omega_table(const BpsResult& bps, const IntegralityReport& rep) {
    json table = json::array();
    for (const auto& v : rep.verdicts) {
        json row;
        row["gamma"] = v.gamma;
        const GradedSeries& s = bps.omega.at(v.gamma);
        row["omega"] = series_to_json(s);
        row["window_kmax"] = v.window_kmax;
        row["polynomial_in_window"] = v.polynomial_in_window;
        row["integer_coefficients"] = v.integer_coefficients;
        row["pass"] = v.pass;
        table.push_back(row);
    }
    return table;
}

int run_bps(const std::string& input, int gamma_max, long long window,
            const std::string& golden, bool golden_write, const std::string& format,
            const std::string& output) {
    std::string raw;
    json j = load_json_arg(input, &raw);
    reject_unknown_keys(j, {"schema", "vertices", "arrows"}, "quiver");
    size_t n = j.at("vertices").get<size_t>();
    std::vector<std::pair<int, int>> arrows;
    if (j.contains("arrows"))
        for (const auto& a : j["arrows"]) {
            if (!a.is_array() || a.size() != 2)
                throw validation_error("arrows must be [from, to] pairs");
            arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
        }
    QuiverSpec q = QuiverSpec::from_arrow_list(n, arrows);
    BpsResult bps = bps_series(q, gamma_max, window);
    IntegralityReport ver = integrality_report(q, bps);
    json rep = envelope("bps", fnv1a_hex(raw));
    rep["symmetric"] = q.is_symmetric();
    if (!q.is_symmetric())
        rep["warning"] = "quiver is not symmetric: integrality verdicts are not expected to hold";
    rep["gamma_max"] = gamma_max;
    rep["window"] = window;
    rep["table"] = omega_table(bps, ver);
    rep["all_pass"] = ver.all_pass;
    if (!golden.empty()) {
        json table = rep["table"];
        if (golden_write) {
            std::ofstream out(golden);
            if (!out) throw validation_error("cannot open golden file: " + golden);
            out << table.dump(2) << "\n";
            rep["golden"] = "written";
        } else {
            std::ifstream in(golden);
            if (!in) throw validation_error("cannot open golden file: " + golden);
            json expect = json::parse(in);
            rep["golden"] = (expect == table) ? "match" : "MISMATCH";
            if (expect != table) {
                write_output(output, rep.dump(2));
                return 2;
            }
        }
    }
    if (format == "csv") {
        std::ostringstream os;
        os << "gamma,half_power,coeff\n";
        for (const auto& [g, s] : bps.omega) {
            std::ostringstream gs;
            for (size_t i = 0; i < g.size(); ++i) gs << (i ? " " : "") << g[i];
            auto it = s.slices().find(g);
            if (it == s.slices().end()) continue;
            for (const auto& [k, c] : it->second.coeff)
                os << csv_escape(gs.str()) << "," << k << "," << csv_escape(c.to_string())
                   << "\n";
        }
        write_output(output, os.str());
    } else {
        write_output(output, rep.dump(2));
    }
    return 0;
}

int run_bun_ih(const std::string& input, bool latex, const std::string& output) {
    std::string raw;
    json j = load_json_arg(input, &raw);
    reject_unknown_keys(j, {"schema", "r", "d", "g", "N"}, "document");
    int r = j.at("r").get<int>();
    long long d = j.at("d").get<long long>();
    int g = j.at("g").get<int>();
    long long nmax = j.value("N", default_window());
    BunSeriesCache cache(g, nmax);
    IhResult ih = ih_series(r, d, g, nmax, &cache);
    // census for GL_r with degree class d
    GroupSpec spec;
    spec.factors.push_back({'A', r - 1, Isogeny::GL});
    RootDatum rd = build_root_datum(spec);
    auto weyl = weyl_elements(rd);
    IVec degree_rep(rd.rank, 0);
    degree_rep[0] = d;
    auto census = special_face_census_bun(rd, g, degree_rep, weyl);
    if (latex) {
        std::ostringstream os;
        os << "\\begin{tabular}{rr}\n\\toprule\n$i$ & $\\dim \\mathrm{IH}^i$ \\\\\n\\midrule\n";
        for (size_t i = 0; i < ih.betti.size(); ++i)
            os << i << " & " << ih.betti[i] << " \\\\\n";
        os << "\\bottomrule\n\\end{tabular}";
        write_output(output, os.str());
        return 0;
    }
    json rep = envelope("bun-ih", fnv1a_hex(raw));
    rep["r"] = r;
    rep["d"] = d;
    rep["g"] = g;
    rep["N"] = nmax;
    rep["moduli_dimension"] = moduli_dimension(r, g);
    rep["ss_series"] = series_to_json(cache.semistable(r, d));
    rep["ih_betti"] = ih.betti;
    json cen = json::array();
    for (const auto& row : census) {
        json c;
        c["face_dim"] = row.face_dim;
        c["levi"] = row.levi_label;
        c["relative_weyl_order"] = row.relative_weyl_order;
        c["sign_trivial"] = row.twisted_sign_trivial;
        c["admissible"] = row.admissible;
        if (row.admissible) c["degree_lift"] = qvec_to_json(row.rational_lift);
        cen.push_back(c);
    }
    rep["census"] = cen;
    write_output(output, rep.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohint: exact computations around cohomological integrality"};
    app.require_subcommand(1);

    std::string input, output, format = "json", golden;
    long long degree_bound = 20, window = 0;
    int gamma_max = 5;
    bool latex = false, golden_write = false;
    unsigned long long seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "input JSON document (path or inline)")->required();
        sub->add_option("-o,--output", output, "output path (default stdout)");
        sub->add_option("--seed", seed, "seed echoed into randomized batteries");
    };

    auto* faces = app.add_subcommand("faces", "special faces, chambers and sign characters");
    add_common(faces);
    auto* sym = app.add_subcommand("sym", "symmetry and orthogonality analysis");
    add_common(sym);
    auto* cohi = app.add_subcommand("cohi", "one cohomological Hall induction step");
    add_common(cohi);
    auto* bg = app.add_subcommand("bg-check", "degreewise H*(BT)^W = H*(BG) bijectivity");
    add_common(bg);
    bg->add_option("--degree-bound", degree_bound, "even cohomological degree bound");
    bg->add_option("--format", format, "json|csv|latex");
    auto* bps = app.add_subcommand("bps", "BPS invariants of a quiver");
    add_common(bps);
    bps->add_option("--gamma-max", gamma_max, "total dimension-vector bound");
    bps->add_option("--window", window, "q^{1/2}-exponent window (default COHINT_WINDOW)");
    bps->add_option("--golden", golden, "golden file to compare against");
    bps->add_flag("--golden-write", golden_write, "write the golden file instead");
    bps->add_option("--format", format, "json|csv");
    auto* bun = app.add_subcommand("bun-ih", "IH polynomial of Bun_{GL_r}^{ss}");
    add_common(bun);
    bun->add_flag("--latex", latex, "emit a LaTeX Betti table");

    CLI11_PARSE(app, argc, argv);
    g_seed = seed;

    try {
        if (faces->parsed()) return run_faces(input, output);
        if (sym->parsed()) return run_sym(input, output);
        if (cohi->parsed()) return run_cohi(input, output);
        if (bg->parsed()) {
            if (degree_bound < 0 || degree_bound % 2 != 0 || degree_bound > 200)
                throw validation_error("--degree-bound must be even and within [0, 200]");
            return run_bg_check(input, degree_bound, format, output);
        }
        if (bps->parsed()) {
            long long w = window > 0 ? window : default_window();
            if (gamma_max < 1 || gamma_max > 12)
                throw validation_error("--gamma-max must be within [1, 12]");
            if (w < 4 || w > 512) throw validation_error("--window must be within [4, 512]");
            return run_bps(input, gamma_max, w, golden, golden_write, format, output);
        }
        if (bun->parsed()) return run_bun_ih(input, latex, output);
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const induction_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const series_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
