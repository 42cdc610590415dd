// Command-line front end for the spectral semidistance toolkit. Talks to
// the core exclusively through the C API in semispec.h.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "semispec.h"

namespace {

int fail_input(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return out.good();
}

std::string csv_path(const std::string& base, const std::string& table) {
    const size_t dot = base.rfind('.');
    if (dot == std::string::npos) return base + "." + table + ".csv";
    return base.substr(0, dot) + "." + table + base.substr(dot);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semispec: spectral semidistance of complex matrix pairs"};

    std::string input_path, example, method = "all", norm = "fro", out_path, format = "json";
    int example_n = 0, n_max = 400, nodes_cap = 512;
    unsigned long long seed = 0;
    double gap = 0.1, cluster_tol = 0.0, product_tol = 0.0, zero_radius = 0.0;
    bool want_qe = false;

    auto* input_opt = app.add_option("--input", input_path, "JSON pair file");
    auto* example_opt =
        app.add_option("--example", example, "Built-in pair: free-algebra|l1|random")
            ->check(CLI::IsMember({"free-algebra", "l1", "random"}));
    input_opt->excludes(example_opt);
    app.add_option("--n", example_n, "Example size (l1 truncation level / random dimension)");
    app.add_option("--seed", seed, "Seed for the random example");
    app.add_option("--gap", gap, "Eigenvalue gap for the random example");
    app.add_option("--method", method, "definition|geometric|charf|growth|all")
        ->check(CLI::IsMember({"definition", "geometric", "charf", "growth", "all"}));
    app.add_option("--n-max", n_max, "Commutator sequence length (default 400)");
    app.add_option("--norm", norm, "fro|one|inf")->check(CLI::IsMember({"fro", "one", "inf"}));
    app.add_option("--nodes-cap", nodes_cap, "Contour quadrature node cap (default 512)");
    app.add_option("--cluster-tol", cluster_tol, "Eigenvalue clustering tolerance");
    app.add_option("--product-tol", product_tol, "Absolute threshold for p*q != 0");
    app.add_option("--zero-radius", zero_radius, "Zero-cluster radius (enables charf)");
    app.add_flag("--qe", want_qe, "Decide quasinilpotent equivalence");
    app.add_option("--out", out_path, "Report output path (default: stdout)");
    app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    if (input_path.empty() && example.empty())
        return fail_input("one of --input or --example is required");

    if (const char* env_seed = std::getenv("SEMISPEC_SEED")) {
        try {
            seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            return fail_input("SEMISPEC_SEED is not an integer");
        }
    }

    ss_mat* a = nullptr;
    ss_mat* b = nullptr;
    double zero_radius_hint = 0.0;
    if (!input_path.empty()) {
        std::ifstream in(input_path, std::ios::binary);
        if (!in) return fail_input("cannot open input file '" + input_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        if (ss_pair_from_json(buf.str().c_str(), &a, &b) != SS_OK)
            return fail_input(ss_last_error());
    } else {
        if (ss_example_pair(example.c_str(), example_n, seed, gap, &a, &b, &zero_radius_hint) !=
            SS_OK)
            return fail_input(ss_last_error());
    }
    if (zero_radius <= 0.0) zero_radius = zero_radius_hint;

    nlohmann::json opts{{"method", method}, {"n_max", n_max}, {"norm", norm},
                        {"nodes_cap", nodes_cap}, {"qe", want_qe}};
    if (cluster_tol > 0.0) opts["cluster_tol"] = cluster_tol;
    if (product_tol > 0.0) opts["product_tol"] = product_tol;
    if (zero_radius > 0.0) opts["zero_radius"] = zero_radius;

    ss_result* result = nullptr;
    const int rc = ss_run(a, b, opts.dump().c_str(), &result);
    ss_mat_free(a);
    ss_mat_free(b);
    if (rc != SS_OK) {
        const std::string msg = ss_last_error();
        std::cerr << "error: " << msg << "\n";
        if (!out_path.empty())
            write_file(out_path, nlohmann::json{{"schema", 1}, {"error", msg}}.dump(2));
        return rc == SS_ERR_INPUT ? 2 : 1;
    }

    bool io_ok = true;
    if (format == "json") {
        const std::string text = ss_result_json(result);
        if (out_path.empty())
            std::cout << text << "\n";
        else
            io_ok = write_file(out_path, text);
    } else {
        for (const char* table : {"sequence", "spectra", "wset"}) {
            const char* text = ss_result_csv(result, table);
            if (!text) continue;   // table not populated for this method
            if (out_path.empty())
                std::cout << "# table: " << table << "\n" << text;
            else
                io_ok &= write_file(csv_path(out_path, table), text);
        }
    }
    const bool fragile = ss_result_fragile(result) != 0;
    ss_result_free(result);
    if (!io_ok) return fail_input("cannot write output to '" + out_path + "'");
    return fragile ? 3 : 0;
}
