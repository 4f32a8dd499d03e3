#pragma once

// Single command-line entry point. Subcommands: classify, cones, models,
// toric, volume, beta, sweep, cox, tables. Machine-readable output only:
// JSON or CSV depending on the subcommand. Exit codes: 0 success, 2 named
// validation error (name printed on stderr), 1 internal error.

#include "mori/errors.hpp"
#include "mori/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace mori {

namespace detail {

struct ConfigFlags {
    long long n = 0, d = 0, k = 0, r = 0;
    bool pi_in_x = false;

    void attach(CLI::App* app, bool need_d = true, bool need_pi = true) {
        app->add_option("--n", n, "dimension of X")->required();
        if (need_d) app->add_option("--d", d, "degree of X")->required();
        app->add_option("--k", k, "dimension of the center")->required();
        app->add_option("--r", r, "degree of the center")->required();
        if (need_pi)
            app->add_flag("--pi-in-x", pi_in_x, "the span of the center lies inside X");
    }

    BlowupConfig to_config() const { return validate(n, d, k, r, pi_in_x); }
};

inline void emit(const std::string& payload, const std::string& out_path,
                 std::ostream& fallback) {
    if (out_path.empty()) {
        fallback << payload;
        if (!payload.empty() && payload.back() != '\n') fallback << "\n";
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw classification_error(errc::range_error,
                                   "cannot open output file " + out_path);
    file << payload;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw classification_error(errc::range_error, "cannot open " + path);
    Json json;
    try {
        file >> json;
    } catch (const std::exception& e) {
        throw classification_error(errc::parse_error,
                                   std::string("bad JSON in ") + path + ": " + e.what());
    }
    return json;
}

} // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact classification of blowups of hypersurfaces along "
                 "hypersurfaces of linear subspaces"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("--out", out_path, "write output to a file instead of stdout");

    // classify
    auto* classify_cmd = app.add_subcommand(
        "classify", "Fano classification table for centers of dimension k; CSV "
                    "columns r,d,n_min,n_max,pi_in_x,fano,weak_fano,sarkisov "
                    "(n_max 'inf' when unbounded, sarkisov 'na' unless d = 1)");
    long long classify_k = 1;
    std::string classify_format = "csv";
    classify_cmd->add_option("--k", classify_k, "center dimension (1 or 2)")->required();
    classify_cmd->add_option("--format", classify_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // cones
    auto* cones_cmd =
        app.add_subcommand("cones", "nef/movable/effective cones and chambers");
    detail::ConfigFlags cones_flags;
    cones_flags.attach(cones_cmd);

    // models
    auto* models_cmd = app.add_subcommand(
        "models", "wall-crossing type, singularities and fibration");
    detail::ConfigFlags models_flags;
    models_flags.attach(models_cmd);

    // toric
    auto* toric_cmd =
        app.add_subcommand("toric", "ambient toric presentation and cones");
    long long toric_n = 0, toric_k = 0, toric_r = 0;
    toric_cmd->add_option("--n", toric_n, "dimension parameter")->required();
    toric_cmd->add_option("--k", toric_k, "center dimension")->required();
    toric_cmd->add_option("--r", toric_r, "center degree")->required();
    std::vector<long long> toric_sections;
    toric_cmd
        ->add_option("--sections", toric_sections,
                     "list monomial sections of bidegree aH+bE")
        ->expected(2);

    // volume
    auto* volume_cmd = app.add_subcommand(
        "volume", "exact volume polynomial of -K_Y - uE on [0, tau]");
    detail::ConfigFlags volume_flags;
    volume_flags.attach(volume_cmd);
    bool volume_approx = false;
    volume_cmd->add_flag("--approx", volume_approx,
                         "add decimal convenience fields (approximate)");

    // beta
    auto* beta_cmd =
        app.add_subcommand("beta", "beta invariant of the exceptional divisor");
    detail::ConfigFlags beta_flags;
    beta_flags.attach(beta_cmd);
    bool beta_approx = false;
    beta_cmd->add_flag("--approx", beta_approx,
                       "add decimal convenience fields (approximate)");

    // sweep
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "exhaustive linear-center instability sweep; CSV columns "
                 "n,d,k,S_num,S_den,unstable,closed_form_agrees");
    long long sweep_n_max = 0, sweep_jobs = 1, sweep_k_factor = 3;
    bool sweep_progress = false;
    sweep_cmd->add_option("--n-max", sweep_n_max, "largest dimension of X")->required();
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads");
    sweep_cmd->add_option("--k-factor", sweep_k_factor,
                          "enumerate centers with k >= k_factor * d (default 3)");
    sweep_cmd->add_flag("--progress", sweep_progress, "report progress on stderr");

    // cox
    auto* cox_cmd = app.add_subcommand(
        "cox", "ideal generators of Y in the Cox ring from a decomposition");
    std::string cox_config_path, cox_data_path;
    cox_cmd->add_option("--config", cox_config_path, "JSON file with n,d,k,r,piContained")
        ->required();
    cox_cmd
        ->add_option("--data", cox_data_path,
                     "JSON file with polynomials h, F (list), g in the grammar "
                     "c*u^a*x0^b*...*z^e")
        ->required();

    // tables
    auto* tables_cmd = app.add_subcommand(
        "tables", "comparison profiles behind the closed forms; CSV columns "
                  "n,p,q with exact rational entries");
    std::string tables_variant = "I";
    long long tables_d = 2, tables_n_min = 3, tables_n_max = 20;
    std::string tables_format = "csv";
    tables_cmd->add_option("--variant", tables_variant, "I (lines) or II (planar r = d)")
        ->check(CLI::IsMember({"I", "II"}));
    tables_cmd->add_option("--d", tables_d, "degree (2 or 3)")->required();
    tables_cmd->add_option("--n-min", tables_n_min, "first dimension");
    tables_cmd->add_option("--n-max", tables_n_max, "last dimension");
    tables_cmd->add_option("--format", tables_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // let --out appear after the subcommand as well
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::stringstream help;
            int code = app.exit(e, help, help);
            out << help.str();
            return code;
        }
        err << "RangeError: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*classify_cmd) {
            if (classify_format == "json")
                detail::emit(classify_to_json(static_cast<int>(classify_k)).dump(2),
                             out_path, out);
            else
                detail::emit(classify_csv(static_cast<int>(classify_k)), out_path, out);
        } else if (*cones_cmd) {
            detail::emit(cones_to_json(cones_flags.to_config()).dump(2), out_path, out);
        } else if (*models_cmd) {
            detail::emit(models_to_json(models_flags.to_config()).dump(2), out_path, out);
        } else if (*toric_cmd) {
            Json json = toric_to_json(static_cast<int>(toric_n), static_cast<int>(toric_k),
                                      static_cast<int>(toric_r));
            if (!toric_sections.empty()) {
                long long a = toric_sections[0], b = toric_sections[1];
                auto names = cox_variable_names(static_cast<int>(toric_n));
                auto monomials =
                    section_monomials(static_cast<int>(toric_n), static_cast<int>(toric_k),
                                      static_cast<int>(toric_r), a, b);
                Json list = Json::array();
                for (const auto& exps : monomials)
                    list.push_back(monomial_string(names, exps));
                json["sections"] = Json{{"a", a},
                                        {"b", b},
                                        {"count", monomials.size()},
                                        {"monomials", list}};
            }
            detail::emit(json.dump(2), out_path, out);
        } else if (*volume_cmd) {
            detail::emit(volume_to_json(volume_flags.to_config(), volume_approx).dump(2),
                         out_path, out);
        } else if (*beta_cmd) {
            detail::emit(beta_to_json(beta_flags.to_config(), beta_approx).dump(2),
                         out_path, out);
        } else if (*sweep_cmd) {
            std::function<void(std::size_t, std::size_t)> progress;
            if (sweep_progress)
                progress = [&err](std::size_t done, std::size_t total) {
                    if (done % 1000 == 0 || done == total)
                        err << "sweep: " << done << "/" << total << "\n";
                };
            SweepResult result =
                sweep(static_cast<int>(sweep_n_max), static_cast<int>(sweep_k_factor),
                      static_cast<int>(sweep_jobs), progress);
            detail::emit(sweep_csv(result), out_path, out);
            err << "sweep summary: " << result.summary.total << " configs, "
                << result.summary.unstable_count << " unstable, "
                << result.summary.disagreements << " closed-form disagreements\n";
        } else if (*cox_cmd) {
            Json config_json = detail::load_json_file(cox_config_path);
            BlowupConfig cfg = config_from_json(config_json);
            Json data_json = detail::load_json_file(cox_data_path);
            auto vars = cox_variable_names(cfg.n);
            HypersurfaceData data;
            data.h = MPoly::parse(vars, data_json.at("h").get<std::string>());
            data.g = data_json.contains("g")
                         ? MPoly::parse(vars, data_json.at("g").get<std::string>())
                         : MPoly(vars);
            for (const auto& entry : data_json.at("F"))
                data.F.push_back(MPoly::parse(vars, entry.get<std::string>()));
            detail::emit(cox_to_json(cfg, data).dump(2), out_path, out);
        } else if (*tables_cmd) {
            PqVariant variant = tables_variant == "I" ? PqVariant::I : PqVariant::II;
            auto rows = pq_profiles(variant, tables_d, tables_n_min, tables_n_max);
            if (tables_format == "json") {
                Json list = Json::array();
                for (const auto& row : rows)
                    list.push_back(Json{{"n", row.n},
                                        {"p", rat_to_string(row.p)},
                                        {"q", rat_to_string(row.q)}});
                detail::emit(Json{{"variant", tables_variant},
                                  {"d", tables_d},
                                  {"rows", list}}
                                 .dump(2),
                             out_path, out);
            } else {
                std::ostringstream csv;
                csv << "n,p,q\n";
                for (const auto& row : rows)
                    csv << row.n << "," << rat_to_string(row.p) << ","
                        << rat_to_string(row.q) << "\n";
                detail::emit(csv.str(), out_path, out);
            }
        }
    } catch (const classification_error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "InternalError: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace mori
