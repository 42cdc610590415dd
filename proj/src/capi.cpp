#include "semispec.h"

#include <map>
#include <string>

#include <json.hpp>

#include "semispec/corpus.hpp"
#include "semispec/report.hpp"

using namespace semispec;

struct ss_mat {
    Mat m;
};

struct ss_result {
    SemidistanceReport report;
    std::string json_text;
    std::map<std::string, std::string> csv_cache;
};

namespace {

thread_local std::string g_last_error;

int status_of(const Error& e) {
    switch (e.code()) {
        case Errc::BadInput:
        case Errc::DimensionMismatch:
            return SS_ERR_INPUT;
        default:
            return SS_ERR_COMPUTE;
    }
}

template <typename F>
int guarded(F&& fn) {
    try {
        fn();
        return SS_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SS_ERR_COMPUTE;
    }
}

RhoOptions parse_options(const nlohmann::json& j, Method& method) {
    RhoOptions opts;
    method = Method::All;
    if (j.contains("method")) {
        const std::string m = j["method"].get<std::string>();
        if (m == "definition") method = Method::Definition;
        else if (m == "geometric") method = Method::Geometric;
        else if (m == "charf") method = Method::Charf;
        else if (m == "growth") method = Method::Growth;
        else if (m == "all") method = Method::All;
        else fail(Errc::BadInput, "unknown method '" + m + "'");
    }
    if (j.contains("n_max")) opts.n_max = j["n_max"].get<int>();
    if (j.contains("norm")) {
        const std::string k = j["norm"].get<std::string>();
        if (k == "fro") opts.norm_kind = NormKind::Frobenius;
        else if (k == "one") opts.norm_kind = NormKind::One;
        else if (k == "inf") opts.norm_kind = NormKind::Inf;
        else fail(Errc::BadInput, "unknown norm kind '" + k + "'");
    }
    if (j.contains("nodes_cap")) opts.geom.contour.node_cap = j["nodes_cap"].get<int>();
    if (j.contains("cluster_tol")) {
        opts.geom.cluster_tol = j["cluster_tol"].get<double>();
        if (opts.geom.cluster_tol <= 0.0) fail(Errc::BadInput, "cluster_tol must be positive");
    }
    if (j.contains("product_tol")) {
        opts.geom.product_threshold = j["product_tol"].get<double>();
        if (opts.geom.product_threshold <= 0.0) fail(Errc::BadInput, "product_tol must be positive");
    }
    if (j.contains("zero_radius")) opts.zero_radius = j["zero_radius"].get<double>();
    if (j.contains("qe")) opts.want_qe = j["qe"].get<bool>();
    if (j.contains("qe_tol")) opts.qe_tol = j["qe_tol"].get<double>();
    return opts;
}

} // namespace

extern "C" {

const char* ss_last_error(void) { return g_last_error.c_str(); }

int ss_mat_create(int n, const double* entries, ss_mat** out) {
    if (!entries || !out) {
        g_last_error = "ss_mat_create: null argument";
        return SS_ERR_INPUT;
    }
    return guarded([&] {
        std::vector<Cx> data;
        data.reserve(static_cast<size_t>(n) * n);
        for (size_t k = 0; k < static_cast<size_t>(n) * n; ++k)
            data.emplace_back(entries[2 * k], entries[2 * k + 1]);
        *out = new ss_mat{Mat(n, std::move(data))};
    });
}

int ss_mat_dim(const ss_mat* m) { return m ? m->m.dim() : 0; }

int ss_mat_get(const ss_mat* m, int i, int j, double* re, double* im) {
    if (!m || !re || !im || i < 0 || j < 0 || i >= m->m.dim() || j >= m->m.dim()) {
        g_last_error = "ss_mat_get: bad index or null argument";
        return SS_ERR_INPUT;
    }
    *re = m->m.at(i, j).real();
    *im = m->m.at(i, j).imag();
    return SS_OK;
}

void ss_mat_free(ss_mat* m) { delete m; }

int ss_pair_from_json(const char* text, ss_mat** a, ss_mat** b) {
    if (!text || !a || !b) {
        g_last_error = "ss_pair_from_json: null argument";
        return SS_ERR_INPUT;
    }
    return guarded([&] {
        auto [ma, mb] = pair_from_json(text);
        *a = new ss_mat{std::move(ma)};
        *b = new ss_mat{std::move(mb)};
    });
}

int ss_example_pair(const char* name, int n, unsigned long long seed, double gap, ss_mat** a,
                    ss_mat** b, double* zero_radius_hint) {
    if (!name || !a || !b) {
        g_last_error = "ss_example_pair: null argument";
        return SS_ERR_INPUT;
    }
    return guarded([&] {
        PairSpec spec;
        const std::string which = name;
        if (which == "free-algebra") {
            spec = free_algebra_pair();
        } else if (which == "l1") {
            spec = l1_discretization(n > 0 ? n : 4);
        } else if (which == "random") {
            spec = random_diagonalizable_pair(n > 0 ? n : 4, gap > 0.0 ? gap : 0.1, seed);
        } else {
            fail(Errc::BadInput, "unknown example '" + which + "' (expected free-algebra|l1|random)");
        }
        *a = new ss_mat{std::move(spec.a)};
        *b = new ss_mat{std::move(spec.b)};
        if (zero_radius_hint) *zero_radius_hint = spec.zero_radius.value_or(0.0);
    });
}

int ss_run(const ss_mat* a, const ss_mat* b, const char* options_json, ss_result** out) {
    if (!a || !b || !out) {
        g_last_error = "ss_run: null argument";
        return SS_ERR_INPUT;
    }
    return guarded([&] {
        nlohmann::json j = nlohmann::json::object();
        if (options_json && *options_json) {
            try {
                j = nlohmann::json::parse(options_json);
            } catch (const nlohmann::json::parse_error& e) {
                fail(Errc::BadInput, std::string("options: malformed JSON: ") + e.what());
            }
        }
        Method method = Method::All;
        RhoOptions opts = parse_options(j, method);
        auto* res = new ss_result{};
        try {
            res->report = rho(a->m, b->m, method, opts);
            res->json_text = report_to_json(res->report);
        } catch (...) {
            delete res;
            throw;
        }
        *out = res;
    });
}

const char* ss_result_json(const ss_result* r) { return r ? r->json_text.c_str() : ""; }

const char* ss_result_csv(ss_result* r, const char* table) {
    if (!r || !table) {
        g_last_error = "ss_result_csv: null argument";
        return nullptr;
    }
    try {
        auto it = r->csv_cache.find(table);
        if (it == r->csv_cache.end())
            it = r->csv_cache.emplace(table, report_to_csv(r->report, table)).first;
        return it->second.c_str();
    } catch (const Error& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

int ss_result_fragile(const ss_result* r) { return r && r->report.fragile ? 1 : 0; }

void ss_result_free(ss_result* r) { delete r; }

} // extern "C"
