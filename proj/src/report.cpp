#include "semispec/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace semispec {

namespace {

using nlohmann::json;

json cx_json(Cx v) { return json::array({v.real(), v.imag()}); }

Mat mat_from_json(const json& j, const std::string& label) {
    if (!j.is_object() || !j.contains("n") || !j.contains("data"))
        fail(Errc::BadInput, "matrix '" + label + "' must be an object with fields 'n' and 'data'");
    if (!j["n"].is_number_integer())
        fail(Errc::BadInput, "matrix '" + label + "': field 'n' must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1) fail(Errc::BadInput, "matrix '" + label + "': dimension must be >= 1");
    const json& data = j["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != n)
        fail(Errc::BadInput, "matrix '" + label + "': 'data' must be an array of " +
                                 std::to_string(n) + " rows");
    std::vector<Cx> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const json& row = data[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            fail(Errc::BadInput, "matrix '" + label + "': row " + std::to_string(i) +
                                     " is ragged (expected " + std::to_string(n) + " entries)");
        for (int k = 0; k < n; ++k) {
            const json& e = row[static_cast<size_t>(k)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                fail(Errc::BadInput, "matrix '" + label + "': entry [" + std::to_string(i) + "][" +
                                         std::to_string(k) + "] must be a [re, im] number pair");
            entries.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
    }
    return Mat(n, std::move(entries));
}

json mat_to_json_obj(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.dim(); ++k) row.push_back(cx_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"data", std::move(rows)}};
}

json spectrum_json(const SpectrumDescription& s) {
    json points = json::array();
    for (const SpectralPoint& p : s.points)
        points.push_back(json{{"value", cx_json(p.value)}, {"multiplicity", p.multiplicity}});
    json out{{"dim", s.dim}, {"points", std::move(points)}, {"spectral_radius", s.spectral_radius}};
    if (s.zero_cluster)
        out["zero_cluster"] =
            json{{"radius", s.zero_cluster->radius}, {"swallowed_count", s.zero_cluster->swallowed_count}};
    return out;
}

json diagnostics_json(const std::vector<ProjectionDiagnostics>& diags) {
    json arr = json::array();
    for (const ProjectionDiagnostics& d : diags)
        arr.push_back(json{{"idempotency_defect", d.idempotency_defect},
                           {"commutation_defect", d.commutation_defect},
                           {"orthogonality_defect", d.orthogonality_defect},
                           {"trace", cx_json(d.trace_value)},
                           {"nodes_used", d.nodes_used},
                           {"radius_used", d.radius_used}});
    return arr;
}

const char* branch_name(SupBranch b) {
    switch (b) {
        case SupBranch::PairSet: return "pair_set";
        case SupBranch::LambdaModulus: return "lambda_modulus";
        case SupBranch::BetaModulus: return "beta_modulus";
        case SupBranch::Empty: return "empty";
    }
    return "empty";
}

json breakdown_json(const GeometricBreakdown& br) {
    json pairs = json::array();
    for (const PairEntry& e : br.active_pairs)
        pairs.push_back(json{{"lambda", cx_json(e.lambda)},
                             {"beta", cx_json(e.beta)},
                             {"distance", e.distance},
                             {"product_norm", e.product_norm}});
    json wl = json::array(), wb = json::array();
    for (const ModulusEntry& e : br.w_lambda)
        wl.push_back(json{{"value", cx_json(e.value)}, {"modulus", e.modulus}, {"product_norm", e.product_norm}});
    for (const ModulusEntry& e : br.w_beta)
        wb.push_back(json{{"value", cx_json(e.value)}, {"modulus", e.modulus}, {"product_norm", e.product_norm}});
    return json{{"active_pairs", std::move(pairs)},
                {"w_lambda", std::move(wl)},
                {"w_beta", std::move(wb)},
                {"w_lambda_filtered", br.w_lambda_filtered},
                {"w_beta_filtered", br.w_beta_filtered},
                {"zero_pair_active", br.zero_pair_active},
                {"product_threshold", br.product_threshold},
                {"fragile", br.fragile},
                {"w_empty_branch", br.w_empty_branch},
                {"radius_sup", br.radius_sup},
                {"sup_branch", branch_name(br.sup_branch)}};
}

json geom_json(const GeomResult& g) {
    return json{{"value", g.value}, {"breakdown", breakdown_json(g.breakdown)}};
}

json def_json(const DefinitionEstimate& d) {
    return json{{"estimate", d.estimate},
                {"uncertainty", d.uncertainty},
                {"tail_fit_slope", d.tail_fit_slope},
                {"max_based", d.max_based},
                {"window", json::array({d.window_begin, d.window_end})}};
}

json growth_json(const GrowthEstimate& g) {
    return json{{"order", std::isfinite(g.order) ? json(g.order) : json("infinite")},
                {"type", g.type},
                {"n_used", g.n_used},
                {"degenerate", g.degenerate},
                {"type_applicable", g.type_applicable}};
}

json qe_json(const QeResult& q) {
    json matches = json::array();
    for (const QeMatchEntry& m : q.matches)
        matches.push_back(json{{"value_a", cx_json(m.value_a)},
                               {"value_b", cx_json(m.value_b)},
                               {"point_distance", m.point_distance},
                               {"projection_defect", m.projection_defect}});
    return json{{"verdict", q.verdict},
                {"matches", std::move(matches)},
                {"failure_reason", q.failure_reason},
                {"witness_distance", q.witness_distance},
                {"semisimple_defect", q.semisimple_defect}};
}

const char* method_name(Method m) {
    switch (m) {
        case Method::Definition: return "definition";
        case Method::Geometric: return "geometric";
        case Method::Charf: return "charf";
        case Method::Growth: return "growth";
        case Method::All: return "all";
    }
    return "all";
}

const char* norm_name(NormKind k) {
    switch (k) {
        case NormKind::Frobenius: return "fro";
        case NormKind::One: return "one";
        case NormKind::Inf: return "inf";
    }
    return "fro";
}

} // namespace

std::pair<Mat, Mat> pair_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::BadInput, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        fail(Errc::BadInput, "pair file must be an object with matrices 'a' and 'b'");
    Mat a = mat_from_json(j["a"], "a");
    Mat b = mat_from_json(j["b"], "b");
    if (a.dim() != b.dim())
        fail(Errc::BadInput, "matrices 'a' and 'b' have different dimensions (" +
                                 std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    return {std::move(a), std::move(b)};
}

std::string pair_to_json(const Mat& a, const Mat& b) {
    return json{{"a", mat_to_json_obj(a)}, {"b", mat_to_json_obj(b)}}.dump(2);
}

std::string report_to_json(const SemidistanceReport& rep) {
    json j{{"schema", 1},
           {"method", method_name(rep.method)},
           {"varrho_ab", rep.varrho_ab},
           {"varrho_ba", rep.varrho_ba},
           {"rho", rep.rho},
           {"fragile", rep.fragile}};
    j["options"] = json{{"n_max", rep.options.n_max},
                        {"norm", norm_name(rep.options.norm_kind)},
                        {"zero_radius", rep.options.zero_radius},
                        {"qe", rep.options.want_qe},
                        {"qe_tol", rep.options.qe_tol}};
    if (rep.spec_a) j["spectrum_a"] = spectrum_json(*rep.spec_a);
    if (rep.spec_b) j["spectrum_b"] = spectrum_json(*rep.spec_b);
    if (rep.diag_a) j["projections_a"] = diagnostics_json(*rep.diag_a);
    if (rep.diag_b) j["projections_b"] = diagnostics_json(*rep.diag_b);

    json methods = json::object();
    if (rep.def_ab) methods["definition"] = json{{"ab", def_json(*rep.def_ab)}, {"ba", def_json(*rep.def_ba)}};
    if (rep.geo_ab) methods["geometric"] = json{{"ab", geom_json(*rep.geo_ab)}, {"ba", geom_json(*rep.geo_ba)}};
    if (rep.charf_ab) methods["charf"] = json{{"ab", geom_json(*rep.charf_ab)}, {"ba", geom_json(*rep.charf_ba)}};
    if (rep.growth_ab)
        methods["growth"] = json{{"ab", growth_json(*rep.growth_ab)}, {"ba", growth_json(*rep.growth_ba)}};
    j["methods"] = std::move(methods);
    if (rep.qe) j["qe"] = qe_json(*rep.qe);
    return j.dump(2);
}

std::string report_to_csv(const SemidistanceReport& rep, const std::string& table) {
    std::ostringstream os;
    os.precision(17);
    if (table == "sequence") {
        os << "direction,n,log_norm,root\n";
        auto dump_seq = [&](const char* dir, const CommutatorSequence& seq) {
            for (int n = 0; n < static_cast<int>(seq.log_norms.size()); ++n) {
                const double ln = seq.log_norms[static_cast<size_t>(n)];
                if (!std::isfinite(ln)) break;
                os << dir << ',' << n << ',' << ln << ',' << (n > 0 ? std::exp(ln / n) : 0.0)
                   << '\n';
            }
        };
        if (rep.seq_ab) dump_seq("ab", *rep.seq_ab);
        if (rep.seq_ba) dump_seq("ba", *rep.seq_ba);
        return os.str();
    }
    if (table == "spectra") {
        os << "matrix,re,im,multiplicity\n";
        auto dump_spec = [&](const char* label, const SpectrumDescription& s) {
            for (const SpectralPoint& p : s.points)
                os << label << ',' << p.value.real() << ',' << p.value.imag() << ','
                   << p.multiplicity << '\n';
        };
        if (rep.spec_a) dump_spec("a", *rep.spec_a);
        if (rep.spec_b) dump_spec("b", *rep.spec_b);
        return os.str();
    }
    if (table == "wset") {
        os << "direction,kind,lambda_re,lambda_im,beta_re,beta_im,distance,product_norm\n";
        auto dump_breakdown = [&](const char* dir, const GeometricBreakdown& br) {
            for (const PairEntry& e : br.active_pairs)
                os << dir << ",pair," << e.lambda.real() << ',' << e.lambda.imag() << ','
                   << e.beta.real() << ',' << e.beta.imag() << ',' << e.distance << ','
                   << e.product_norm << '\n';
            for (const ModulusEntry& e : br.w_lambda)
                os << dir << ",lambda," << e.value.real() << ',' << e.value.imag() << ",0,0,"
                   << e.modulus << ',' << e.product_norm << '\n';
            for (const ModulusEntry& e : br.w_beta)
                os << dir << ",beta,0,0," << e.value.real() << ',' << e.value.imag() << ','
                   << e.modulus << ',' << e.product_norm << '\n';
        };
        if (rep.charf_ab) {
            dump_breakdown("ab", rep.charf_ab->breakdown);
            dump_breakdown("ba", rep.charf_ba->breakdown);
        } else if (rep.geo_ab) {
            dump_breakdown("ab", rep.geo_ab->breakdown);
            dump_breakdown("ba", rep.geo_ba->breakdown);
        }
        return os.str();
    }
    fail(Errc::BadInput, "unknown CSV table '" + table + "' (expected sequence|spectra|wset)");
}

} // namespace semispec
