#pragma once

// Command-line front end. run() is separate from main() so the test suite can
// drive every subcommand in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "siegelkit/siegelkit.hpp"

namespace siegelkit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kBound = 3 };

using nlohmann::json;

namespace detail {

inline bqf::QuadForm parse_form(const std::string& text) {
    std::vector<Int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        Int x = 0;
        try {
            x = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw CLI::ValidationError("--form", "expected a,b,c with integer entries");
        v.push_back(x);
    }
    if (v.size() != 3) throw CLI::ValidationError("--form", "expected exactly three entries a,b,c");
    return {v[0], v[1], v[2]};
}

inline json cyclo_json(const CycloRational& x) {
    json coeffs = json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(to_string(c));
    return {{"order", x.order()}, {"coefficients", coeffs}};
}

inline json cyclo_json(const CycloInteger& x) {
    json coeffs = json::array();
    for (const auto& c : x.coefficients()) coeffs.push_back(to_string(c));
    return {{"order", x.order()}, {"coefficients", coeffs}};
}

inline json form_json(const bqf::QuadForm& f) { return json::array({f.a, f.b, f.c}); }

inline std::string structure_string(const std::vector<Int>& s) {
    if (s.empty()) return "C1";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " x C" : "C") + std::to_string(s[i]);
    return out;
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline Int negative_disc(Int D) { return D < 0 ? D : -D; }

/// Lift of the unique normalized Jacobi cusp form of weight k, cached under
/// $SIEGEL_CACHE_DIR when set.
inline siegel::SiegelTable lift_table(int k, Int bound) {
    const std::string recipe = "sk_lift(cusp_basis(k=" + std::to_string(k) + ", dmax=" + std::to_string(bound) + ")[0]) v1";
    std::filesystem::path cache_file;
    if (const char* dir = std::getenv("SIEGEL_CACHE_DIR"); dir && *dir) {
        char hash[17];
        std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a(recipe)));
        cache_file = std::filesystem::path(dir) /
                     ("sk-lift-w" + std::to_string(k) + "-b" + std::to_string(bound) + "-" + hash + ".tbl");
        std::error_code ec;
        if (std::filesystem::exists(cache_file, ec)) {
            try {
                auto t = siegel::read_table(cache_file.string());
                if (t.weight() == k && t.disc_bound() == bound) return t;
            } catch (const Error&) {
                // stale or corrupt entry; rebuild below
            }
        }
    }
    const auto basis = jacobi::cusp_basis(k, bound);
    if (basis.size() != 1)
        throw DomainError("sk-lift: J_{" + std::to_string(k) + ",1} has cusp dimension " + std::to_string(basis.size()) +
                          "; only one-dimensional spaces are lifted");
    auto table = siegel::sk_lift(basis[0], bound);
    if (!cache_file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cache_file.parent_path(), ec);
        const auto tmp = cache_file.string() + ".tmp";
        try {
            siegel::write_table(tmp, table);
            std::filesystem::rename(tmp, cache_file, ec);
        } catch (const Error&) {
            // cache is best effort
        }
    }
    return table;
}

}  // namespace detail

/// Runs one command line; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Siegel modular form coefficients, class groups and Bessel periods", "siegelkit"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    bool as_json = false;
    int weight = 0;
    Int disc = 0, disc_bound = 0, nmax = 0, dmax = 0, prime = 0;
    std::size_t character = 0;
    std::string form_text, out_path;
    std::vector<std::string> tables;

    auto add_json = [&](CLI::App* s) { s->add_flag("--json", as_json, "Emit JSON"); };

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a binary quadratic form");
    reduce_cmd->add_option("--form", form_text, "a,b,c")->required();
    add_json(reduce_cmd);

    auto* classgroup_cmd = app.add_subcommand("classgroup", "Class group of a negative fundamental discriminant");
    classgroup_cmd->add_option("--disc", disc, "Discriminant D")->required();
    add_json(classgroup_cmd);

    auto* theta_cmd = app.add_subcommand("theta", "Theta series coefficients of a class group character");
    theta_cmd->add_option("--disc", disc, "Discriminant D")->required();
    theta_cmd->add_option("--character", character, "Character index")->default_val(0);
    theta_cmd->add_option("--nmax", nmax, "Number of coefficients")->default_val(20)->check(CLI::PositiveNumber);
    add_json(theta_cmd);

    auto* mf_cmd = app.add_subcommand("mf-basis", "Level-one modular forms of weight k");
    mf_cmd->add_option("--weight", weight, "Weight k")->required();
    mf_cmd->add_option("--nmax", nmax, "Truncation")->default_val(10)->check(CLI::PositiveNumber);
    add_json(mf_cmd);

    auto* jac_cmd = app.add_subcommand("jacobi-basis", "Cusp forms in J_{k,1}");
    jac_cmd->add_option("--weight", weight, "Weight k")->required();
    jac_cmd->add_option("--dmax", dmax, "Discriminant bound")->default_val(40)->check(CLI::PositiveNumber);
    add_json(jac_cmd);

    auto* lift_cmd = app.add_subcommand("sk-lift", "Saito-Kurokawa lift coefficient table");
    lift_cmd->add_option("--weight", weight, "Weight k")->required();
    lift_cmd->add_option("--disc-bound", disc_bound, "Discriminant bound")->required()->check(CLI::PositiveNumber);
    lift_cmd->add_option("--out", out_path, "Output table file (stdout if absent)");

    auto* coeff_cmd = app.add_subcommand("coeff", "Look up a(f, S)");
    coeff_cmd->add_option("--table", tables, "Table file")->required()->expected(1);
    coeff_cmd->add_option("--form", form_text, "a,b,c")->required();
    add_json(coeff_cmd);

    auto* hecke_cmd = app.add_subcommand("hecke", "Apply T(p) to a table");
    hecke_cmd->add_option("--table", tables, "Table file")->required()->expected(1);
    hecke_cmd->add_option("--p", prime, "Prime p")->required();
    hecke_cmd->add_option("--out", out_path, "Output table file (stdout if absent)");

    auto* eigen_cmd = app.add_subcommand("eigen", "Hecke eigenvalue lambda_p of a table");
    eigen_cmd->add_option("--table", tables, "Table file")->required()->expected(1);
    eigen_cmd->add_option("--p", prime, "Prime p")->required();
    add_json(eigen_cmd);

    auto* period_cmd = app.add_subcommand("period", "Bessel period R(f, K) or R(f, K, Lambda)");
    period_cmd->add_option("--table", tables, "Table file")->required()->expected(1);
    period_cmd->add_option("--disc", disc, "Discriminant -d")->required();
    auto* period_char = period_cmd->add_option("--character", character, "Character index");
    add_json(period_cmd);

    auto* scan_cmd = app.add_subcommand("scan-fundamental", "Smallest fundamental discriminant with a nonzero coefficient");
    scan_cmd->add_option("--table", tables, "Table file")->required()->expected(1);
    add_json(scan_cmd);

    auto* ratio_cmd = app.add_subcommand("ratio", "Report |R|^2 / (d^(k-1) w^2) per fundamental discriminant");
    ratio_cmd->add_option("--table", tables, "Table file")->required()->expected(1);
    auto* ratio_dmax = ratio_cmd->add_option("--dmax", dmax, "Largest d")->check(CLI::PositiveNumber);
    add_json(ratio_cmd);

    auto* demo_cmd = app.add_subcommand("multone-demo", "Separation step g1 = T1 - (R(T1)/R(T2)) T2 (demonstration)");
    demo_cmd->add_option("--table", tables, "T1 then T2")->required()->expected(2);
    auto* demo_disc = demo_cmd->add_option("--disc", disc, "Discriminant -d (default: scan T2)");
    auto* demo_char = demo_cmd->add_option("--character", character, "Character index (default: first nonvanishing)");
    auto* demo_p = demo_cmd->add_option("--p", prime, "Also report lambda_p of both tables");
    add_json(demo_cmd);

    auto* check_cmd = app.add_subcommand("ingest-check", "Validate a table file");
    check_cmd->add_option("--table", tables, "Table file")->required()->expected(1);
    add_json(check_cmd);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    auto pick_character = [&](const std::shared_ptr<const bqf::ClassGroup>& G) {
        auto chars = bqf::characters(G);
        if (character >= chars.size())
            throw DomainError("character index " + std::to_string(character) + " out of range (" + std::to_string(chars.size()) + " characters)");
        return chars[character];
    };
    auto emit_json = [&](const json& j) { out << j.dump(2) << '\n'; };

    try {
        if (*reduce_cmd) {
            const auto red = bqf::reduce(detail::parse_form(form_text));
            if (as_json) {
                emit_json({{"form", detail::form_json(red.form)},
                           {"transform", {red.transform.p(), red.transform.q(), red.transform.r(), red.transform.s()}},
                           {"disc", bqf::discriminant(red.form)}});
            } else {
                out << bqf::to_string(red.form) << '\n' << "transform: " << bqf::to_string(red.transform) << '\n';
            }
        } else if (*classgroup_cmd) {
            const auto G = bqf::class_group(detail::negative_disc(disc));
            if (as_json) {
                json forms = json::array();
                for (const auto& f : G->reps) forms.push_back(detail::form_json(f));
                emit_json({{"disc", G->D}, {"h", G->class_number()}, {"w", G->w}, {"structure", G->structure}, {"forms", forms}});
            } else {
                out << "disc: " << G->D << '\n'
                    << "h: " << G->class_number() << '\n'
                    << "w: " << G->w << '\n'
                    << "structure: " << detail::structure_string(G->structure) << '\n'
                    << "forms:\n";
                for (const auto& f : G->reps) out << bqf::to_string(f) << '\n';
            }
        } else if (*theta_cmd) {
            const auto G = bqf::class_group(detail::negative_disc(disc));
            const auto chi = pick_character(G);
            const auto theta = bqf::theta_coefficients(chi, nmax);
            if (as_json) {
                json coeffs = json::array();
                for (Int n = 1; n <= nmax; ++n) coeffs.push_back(detail::cyclo_json(theta.at(n)));
                emit_json({{"disc", G->D}, {"character", character}, {"order", chi.order()}, {"exponents", chi.exponents()}, {"coefficients", coeffs}});
            } else {
                out << "order: " << chi.order() << '\n' << "exponents:";
                for (Int e : chi.exponents()) out << ' ' << e;
                out << '\n';
                for (Int n = 1; n <= nmax; ++n) out << n << ": " << theta.at(n).to_string() << '\n';
            }
        } else if (*mf_cmd) {
            if (weight < 0 || weight % 2) throw DomainError("mf-basis: weight must be even and non-negative");
            const auto basis = jacobi::modular_monomials(weight, nmax);
            const int cusp_dim = qexp::dim_cusp_forms(weight);
            std::optional<qexp::QSeries> eigen;
            if (cusp_dim == 1) eigen = qexp::cusp_eigenform(weight, nmax);
            auto row = [](const qexp::QSeries& f) {
                std::vector<std::string> v;
                for (const auto& c : f.coefficients()) v.push_back(to_string(c));
                return v;
            };
            std::vector<std::string> labels;
            for (int a = weight / 4; a >= 0; --a)
                if ((weight - 4 * a) % 6 == 0) labels.push_back("E4^" + std::to_string(a) + "*E6^" + std::to_string((weight - 4 * a) / 6));
            if (as_json) {
                json j = {{"weight", weight}, {"dim", basis.size()}, {"cusp_dim", cusp_dim}, {"basis", json::array()}};
                for (std::size_t i = 0; i < basis.size(); ++i) j["basis"].push_back({{"monomial", labels[i]}, {"coefficients", row(basis[i])}});
                if (eigen) j["eigenform"] = row(*eigen);
                emit_json(j);
            } else {
                out << "dim: " << basis.size() << '\n' << "cusp-dim: " << cusp_dim << '\n';
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    out << labels[i] << ':';
                    for (const auto& c : row(basis[i])) out << ' ' << c;
                    out << '\n';
                }
                if (eigen) {
                    out << "eigenform:";
                    for (const auto& c : row(*eigen)) out << ' ' << c;
                    out << '\n';
                }
            }
        } else if (*jac_cmd) {
            const auto basis = jacobi::cusp_basis(weight, dmax);
            if (as_json) {
                json forms = json::array();
                for (const auto& phi : basis) {
                    json c = json::object();
                    for (Int D = 0; D <= dmax; ++D)
                        if (jacobi::on_grid(D)) c[std::to_string(D)] = to_string(phi.c(D));
                    forms.push_back(c);
                }
                emit_json({{"weight", weight}, {"dmax", dmax}, {"dim", basis.size()}, {"forms", forms}});
            } else {
                out << "dim: " << basis.size() << '\n';
                for (std::size_t i = 0; i < basis.size(); ++i)
                    for (Int D = 0; D <= dmax; ++D)
                        if (jacobi::on_grid(D)) out << i << ' ' << D << ' ' << to_string(basis[i].c(D)) << '\n';
            }
        } else if (*lift_cmd) {
            const auto t = detail::lift_table(weight, disc_bound);
            if (out_path.empty()) out << siegel::emit(t);
            else siegel::write_table(out_path, t);
        } else if (*coeff_cmd) {
            const auto t = siegel::read_table(tables[0]);
            const auto f = detail::parse_form(form_text);
            const Rational& v = t.coeff(f);
            if (as_json) emit_json({{"form", detail::form_json(f)}, {"reduced", detail::form_json(bqf::reduce(f).form)}, {"value", to_string(v)}});
            else out << to_string(v) << '\n';
        } else if (*hecke_cmd) {
            const auto image = siegel::hecke_tp(siegel::read_table(tables[0]), prime);
            if (out_path.empty()) out << siegel::emit(image);
            else siegel::write_table(out_path, image);
        } else if (*eigen_cmd) {
            const auto rec = siegel::eigenvalue_p(siegel::read_table(tables[0]), prime);
            if (as_json) emit_json({{"p", rec.p}, {"lambda", to_string(rec.lambda)}, {"verified", rec.verified_keys}});
            else out << "lambda: " << to_string(rec.lambda) << '\n' << "verified: " << rec.verified_keys << '\n';
        } else if (*period_cmd) {
            const auto t = siegel::read_table(tables[0]);
            const Int d = -detail::negative_disc(disc);
            periods::PeriodValue r = period_char->count() ? periods::bessel_period_chi(t, d, pick_character(bqf::class_group(-d)))
                                                          : periods::bessel_period(t, d);
            if (as_json) emit_json({{"d", d}, {"character", period_char->count() ? json(character) : json(nullptr)}, {"value", detail::cyclo_json(r)}});
            else out << r.to_string() << '\n';
        } else if (*scan_cmd) {
            const auto t = siegel::read_table(tables[0]);
            const auto hit = periods::fundamental_scan(t);
            if (!hit) throw DomainError("no fundamental witness within bound " + std::to_string(t.disc_bound()));
            if (as_json) emit_json({{"d", hit->d}, {"witness", detail::form_json(hit->witness)}, {"value", to_string(hit->value)}});
            else out << "d: " << hit->d << '\n' << "witness: " << bqf::to_string(hit->witness) << '\n' << "value: " << to_string(hit->value) << '\n';
        } else if (*ratio_cmd) {
            const auto t = siegel::read_table(tables[0]);
            const auto rows = periods::ratio_table(t, ratio_dmax->count() ? dmax : t.disc_bound());
            if (as_json) {
                json j = json::array();
                for (const auto& r : rows)
                    j.push_back({{"d", r.d}, {"h", r.h}, {"w", r.w}, {"R", to_string(r.R.constant())}, {"ratio", to_string(r.ratio)}});
                emit_json(j);
            } else {
                out << "# d h w R ratio=|R|^2/(d^(k-1) w^2)\n";
                for (const auto& r : rows)
                    out << r.d << ' ' << r.h << ' ' << r.w << ' ' << to_string(r.R.constant()) << ' ' << to_string(r.ratio) << '\n';
            }
        } else if (*demo_cmd) {
            const auto t1 = siegel::read_table(tables[0]);
            const auto t2 = siegel::read_table(tables[1]);
            Int d = 0;
            if (demo_disc->count()) {
                d = -detail::negative_disc(disc);
            } else {
                const auto hit = periods::fundamental_scan(t2);
                if (!hit) throw DomainError("multone-demo: T2 has no fundamental witness within its bound");
                d = hit->d;
            }
            const auto chi = demo_char->count() ? pick_character(bqf::class_group(-d)) : periods::choose_character(t2, d);
            std::size_t chi_index = 0;
            {
                const auto all = bqf::characters(chi.group_ptr());
                while (all[chi_index].exponents() != chi.exponents()) ++chi_index;
            }
            const auto sep = periods::separation_demo(t1, t2, d, chi);
            std::optional<siegel::EigenvalueRecord> l1, l2;
            if (demo_p->count()) {
                l1 = siegel::eigenvalue_p(t1, prime);
                l2 = siegel::eigenvalue_p(t2, prime);
            }
            if (as_json) {
                json j = {{"demonstration", true}, {"d", d}, {"character", chi_index}, {"order", chi.order()},
                          {"scalar", to_string(sep.scalar)}, {"g1_zero", sep.is_zero}, {"g1_period", detail::cyclo_json(sep.g1_period)}};
                if (l1) j["lambda"] = {to_string(l1->lambda), to_string(l2->lambda)};
                emit_json(j);
            } else {
                out << "# demonstration of the separation step; not a verification of multiplicity one\n"
                    << "d: " << d << '\n'
                    << "character: " << chi_index << " (order " << chi.order() << ")\n"
                    << "scalar: " << to_string(sep.scalar) << '\n'
                    << "g1-zero: " << (sep.is_zero ? "true" : "false") << '\n'
                    << "g1-period: " << sep.g1_period.to_string() << '\n';
                if (l1) out << "lambda_p: " << to_string(l1->lambda) << ' ' << to_string(l2->lambda) << '\n';
            }
        } else if (*check_cmd) {
            const auto t = siegel::read_table(tables[0]);
            if (as_json) emit_json({{"ok", true}, {"weight", t.weight()}, {"disc_bound", t.disc_bound()}, {"entries", t.entries().size()}});
            else out << "ok: weight " << t.weight() << ", disc-bound " << t.disc_bound() << ", entries " << t.entries().size() << '\n';
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const BoundError& e) {
        err << "error: " << e.what() << '\n';
        return kBound;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kOk;
}

}  // namespace siegelkit::cli
