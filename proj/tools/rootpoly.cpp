// Command-line front end for the exact root-system special-function engine.
//
// Exit codes: 0 success, 2 usage error (bad flags, caps exceeded, unsupported
// format), 3 mathematical or data error (singular systems, non-invariant
// input, malformed input files).  All exact output is deterministic byte for
// byte; floating-point values appear only in `eval1d` and `limits`.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootpoly/dunkl.hpp"
#include "rootpoly/io.hpp"
#include "rootpoly/onevar.hpp"
#include "rootpoly/orthopoly.hpp"
#include "rootpoly/verify.hpp"

using namespace rootpoly;

namespace {

struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Guard rails against accidentally huge exact computations; lifted by setting
// ROOTPOLY_CAP_OVERRIDE in the environment.
struct Caps {
    int height = 12;
    int degree = 8;
};

Caps active_caps() {
    if (std::getenv("ROOTPOLY_CAP_OVERRIDE") != nullptr) return {1000000, 1000000};
    return {};
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    return out;
}

Weight parse_weight_arg(const std::string& s, const RootSystem& rs) {
    std::vector<std::string> parts = split_commas(s);
    if (static_cast<int>(parts.size()) != rs.rank)
        throw usage_error("--lambda needs " + std::to_string(rs.rank) +
                          " comma-separated integers for " + rs.type_string());
    std::vector<int> v;
    for (const std::string& p : parts) v.push_back(std::stoi(p));
    Weight w = Weight::from_vector(v);
    rs.check_weight(w);
    return w;
}

// Multiplicities per root-length class, long roots first; a single value is
// broadcast to all classes.
MultiplicityFn parse_k_arg(const std::string& s, const RootSystem& rs) {
    std::vector<std::string> parts = split_commas(s);
    std::vector<int> v;
    for (const std::string& p : parts) v.push_back(std::stoi(p));
    if (v.size() == 1) v.assign(static_cast<std::size_t>(rs.num_classes()), v[0]);
    MultiplicityFn k{v};
    k.validate(rs.num_classes());
    return k;
}

std::vector<Rational> parse_xi_arg(const std::string& s, const RootSystem& rs) {
    std::vector<std::string> parts = split_commas(s);
    if (static_cast<int>(parts.size()) != rs.rank)
        throw usage_error("--xi needs " + std::to_string(rs.rank) + " comma-separated rationals");
    std::vector<Rational> v(kMaxRank, Rational(0));
    for (std::size_t i = 0; i < parts.size(); ++i) v[i] = rat_from_string(parts[i]);
    return v;
}

Json read_json_input(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open input file '" + path + "'");
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON input: ") + e.what());
    }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string list;
    for (const char* a : allowed) list += std::string(list.empty() ? "" : "|") + a;
    throw usage_error("this subcommand supports --format " + list);
}

void check_height(int height) {
    if (height > active_caps().height)
        throw usage_error("height " + std::to_string(height) +
                          " exceeds the safety cap (set ROOTPOLY_CAP_OVERRIDE to lift)");
}

void check_degree(int degree) {
    if (degree > active_caps().degree)
        throw usage_error("degree " + std::to_string(degree) +
                          " exceeds the safety cap (set ROOTPOLY_CAP_OVERRIDE to lift)");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jacobi/Macdonald polynomials and reflection-operator calculus "
                 "for root systems of rank <= 4"};
    app.require_subcommand(1);
    app.set_config("--config", "", "optional key=value config file (flags win)");

    std::string type = "A1", format = "json", karg = "1", lambda_arg, xi_arg = "1";
    std::string op = "heckman", input = "-", function = "bessel";
    int height = 3, power = 1, narg = 0, bigN = 200;
    double xval = 1.0, lam_scale = 1.0;
    app.add_option("--format", format, "output format: json, latex, or csv")
        ->check(CLI::IsMember({"json", "latex", "csv"}));

    auto add_type = [&](CLI::App* sub) {
        sub->add_option("--type", type, "root system, e.g. A2, B3, C2, D4");
    };
    auto add_k = [&](CLI::App* sub) {
        sub->add_option("--k", karg,
                        "multiplicities per length class, long first, e.g. 2 or 1,2");
    };

    CLI::App* rootinfo = app.add_subcommand("rootinfo", "positive roots, Cartan matrix, classes");
    add_type(rootinfo);

    CLI::App* msym = app.add_subcommand("msym", "orbit sum of a dominant weight");
    add_type(msym);
    msym->add_option("--lambda", lambda_arg, "dominant weight, comma-separated")->required();

    CLI::App* jacobi = app.add_subcommand("jacobi", "undeformed orthogonal family member");
    add_type(jacobi);
    add_k(jacobi);
    jacobi->add_option("--lambda", lambda_arg, "dominant weight")->required();

    CLI::App* macdonald = app.add_subcommand("macdonald", "deformed orthogonal family member");
    add_type(macdonald);
    add_k(macdonald);
    macdonald->add_option("--lambda", lambda_arg, "dominant weight")->required();

    CLI::App* gram = app.add_subcommand("gram", "pairing table of orbit sums over a height box");
    add_type(gram);
    add_k(gram);
    gram->add_option("--height", height, "maximum coordinate height of the box");

    CLI::App* norm = app.add_subcommand("norm", "norm / constant-term / ratio table");
    add_type(norm);
    add_k(norm);
    norm->add_option("--height", height, "maximum coordinate height of the box");

    CLI::App* dunkl = app.add_subcommand("dunkl", "apply a reflection operator");
    add_type(dunkl);
    add_k(dunkl);
    dunkl->add_option("--op", op, "rational | heckman | cherednik | laplace | symmetrized")
        ->check(CLI::IsMember({"rational", "heckman", "cherednik", "laplace", "symmetrized"}));
    dunkl->add_option("--xi", xi_arg, "direction, comma-separated rationals");
    dunkl->add_option("--power", power, "power for the symmetrized operator (1..3)");
    dunkl->add_option("--input", input, "Laurent-polynomial JSON file, or - for stdin");
    dunkl->add_option("--mono", lambda_arg, "monomial exponents (rational operator only)");

    CLI::App* verify = app.add_subcommand("verify", "run the full self-verification suite");

    CLI::App* eval1d = app.add_subcommand("eval1d", "numeric one-variable evaluation");
    eval1d->add_option("--function", function, "bessel | ultra")
        ->check(CLI::IsMember({"bessel", "ultra"}));
    eval1d->add_option("--k", karg, "parameter (rational for bessel, integer for ultra)");
    eval1d->add_option("--n", narg, "degree (ultra only)");
    eval1d->add_option("--x", xval, "evaluation point");

    CLI::App* limits = app.add_subcommand("limits", "scaled large-degree vs kernel gap");
    limits->add_option("--N", bigN, "scaling degree");
    limits->add_option("--k", karg, "integer parameter");
    limits->add_option("--lam", lam_scale, "spectral scale");
    limits->add_option("--x", xval, "evaluation point");

    // Let --format (and --config) appear after the subcommand name.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*rootinfo) {
            require_format(format, {"json"});
            RootSystem rs = RootSystem::build(type);
            Json o = Json::object();
            o["type"] = rs.type_string();
            o["rank"] = rs.rank;
            o["classes"] = rs.num_classes();
            Json cart = Json::array();
            for (int i = 0; i < rs.rank; ++i) {
                Json row = Json::array();
                for (int j = 0; j < rs.rank; ++j) row.push_back(rs.cartan[i][j]);
                cart.push_back(row);
            }
            o["cartan"] = cart;
            Json roots = Json::array();
            for (const Root& r : rs.positive) {
                Json jr = Json::object();
                jr["fund"] = weight_to_json(r.fund, rs.rank);
                jr["length2"] = rational_to_json(rs.inner(r.fund, r.fund));
                jr["class"] = r.cls;
                jr["height"] = r.height;
                roots.push_back(jr);
            }
            o["positive_roots"] = roots;
            Weight reg = Weight::zero(rs.rank);
            for (int i = 0; i < rs.rank; ++i) reg[static_cast<std::size_t>(i)] = 1;
            o["weyl_order"] = rs.weyl_orbit(reg).size();
            emit(o);
        } else if (*msym) {
            require_format(format, {"json", "latex"});
            RootSystem rs = RootSystem::build(type);
            Weight lam = parse_weight_arg(lambda_arg, rs);
            check_height(lam.height());
            LPRat m = monomial_sym(rs, lam);
            if (format == "latex")
                std::cout << laurent_to_latex(m) << "\n";
            else
                emit(laurent_to_json(m));
        } else if (*jacobi) {
            require_format(format, {"json", "latex"});
            RootSystem rs = RootSystem::build(type);
            MultiplicityFn k = parse_k_arg(karg, rs);
            Weight lam = parse_weight_arg(lambda_arg, rs);
            check_height(lam.height());
            OrthoPoly<Rational> p = jacobi_poly(rs, k, lam);
            if (format == "latex")
                std::cout << orthopoly_to_latex(rs, p) << "\n";
            else
                emit(orthopoly_to_json(rs, k, p));
        } else if (*macdonald) {
            require_format(format, {"json", "latex"});
            RootSystem rs = RootSystem::build(type);
            MultiplicityFn k = parse_k_arg(karg, rs);
            Weight lam = parse_weight_arg(lambda_arg, rs);
            check_height(lam.height());
            OrthoPoly<QRat> p = macdonald_poly(rs, k, lam);
            if (format == "latex")
                std::cout << orthopoly_to_latex(rs, p) << "\n";
            else
                emit(orthopoly_to_json(rs, p));
        } else if (*gram) {
            require_format(format, {"json", "csv"});
            RootSystem rs = RootSystem::build(type);
            MultiplicityFn k = parse_k_arg(karg, rs);
            check_height(height);
            std::vector<Weight> box = dominant_box(rs, height);
            GramTable<Rational> t = gram_table(rs, box, weight_function(rs, k));
            if (format == "csv") {
                std::vector<std::string> head = {"mu\\nu"};
                for (const Weight& w : box) head.push_back(w.to_string());
                std::cout << csv_row(head) << "\n";
                for (std::size_t i = 0; i < box.size(); ++i) {
                    std::vector<std::string> row = {box[i].to_string()};
                    for (std::size_t j = 0; j < box.size(); ++j)
                        row.push_back(rat_to_string(t.g[i][j]));
                    std::cout << csv_row(row) << "\n";
                }
            } else {
                Json o = Json::object();
                o["type"] = rs.type_string();
                o["k"] = k.to_string();
                Json jb = Json::array();
                for (const Weight& w : box) jb.push_back(weight_to_json(w, rs.rank));
                o["box"] = jb;
                Json g = Json::array();
                for (std::size_t i = 0; i < box.size(); ++i) {
                    Json row = Json::array();
                    for (std::size_t j = 0; j < box.size(); ++j)
                        row.push_back(rational_to_json(t.g[i][j]));
                    g.push_back(row);
                }
                o["gram"] = g;
                emit(o);
            }
        } else if (*norm) {
            require_format(format, {"json", "csv"});
            RootSystem rs = RootSystem::build(type);
            MultiplicityFn k = parse_k_arg(karg, rs);
            check_height(height);
            Rational ct = weight_function(rs, k).constant_term();
            std::vector<Weight> box = dominant_box(rs, height);
            if (format == "csv")
                std::cout << csv_row({"lambda", "norm2", "ct", "ratio"}) << "\n";
            Json rows = Json::array();
            for (const Weight& lam : box) {
                OrthoPoly<Rational> p = jacobi_poly(rs, k, lam);
                if (format == "csv") {
                    std::cout << csv_row({lam.to_string(), rat_to_string(p.norm2),
                                          rat_to_string(ct), rat_to_string(p.norm2 / ct)})
                              << "\n";
                } else {
                    Json r = Json::object();
                    r["lambda"] = weight_to_json(lam, rs.rank);
                    r["norm2"] = rational_to_json(p.norm2);
                    r["ct"] = rational_to_json(ct);
                    r["ratio"] = rational_to_json(p.norm2 / ct);
                    rows.push_back(r);
                }
            }
            if (format == "json") {
                Json o = Json::object();
                o["type"] = rs.type_string();
                o["k"] = k.to_string();
                o["rows"] = rows;
                emit(o);
            }
        } else if (*dunkl) {
            require_format(format, {"json", "latex"});
            RootSystem rs = RootSystem::build(type);
            MultiplicityFn k = parse_k_arg(karg, rs);
            if (op == "rational") {
                if (lambda_arg.empty())
                    throw usage_error("--mono is required for the rational operator");
                std::vector<std::string> parts = split_commas(lambda_arg);
                if (static_cast<int>(parts.size()) != rs.rank)
                    throw usage_error("--mono needs " + std::to_string(rs.rank) + " exponents");
                std::vector<int> e;
                int deg = 0;
                for (const std::string& p : parts) {
                    e.push_back(std::stoi(p));
                    deg += e.back();
                }
                check_degree(deg);
                AmbientPoly p = AmbientPoly::monomial(rs, Weight::from_vector(e), Rational(1));
                AmbientPoly d = dunkl_apply(rs, k, parse_xi_arg(xi_arg, rs), p);
                Json o = Json::object();
                o["type"] = rs.type_string();
                Json terms = Json::array();
                for (const auto& [w, c] : d.terms()) {
                    Json t = Json::object();
                    t["exp"] = weight_to_json(w, rs.rank);
                    t["coeff"] = rational_to_json(c);
                    terms.push_back(t);
                }
                o["terms"] = terms;
                emit(o);
            } else {
                LPRat f = parse_laurent<Rational>(read_json_input(input), rs);
                LPRat r(&rs);
                if (op == "heckman")
                    r = heckman_apply(rs, k, parse_xi_arg(xi_arg, rs), f);
                else if (op == "cherednik")
                    r = cherednik_apply(rs, k, parse_xi_arg(xi_arg, rs), f);
                else if (op == "laplace")
                    r = laplace_apply(rs, k, f);
                else
                    r = symmetrized_power_apply(rs, k, parse_xi_arg(xi_arg, rs), power, f);
                if (format == "latex")
                    std::cout << laurent_to_latex(r) << "\n";
                else
                    emit(laurent_to_json(r));
            }
        } else if (*verify) {
            bool ok = run_acceptance(std::cout);
            std::cout << (ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << std::endl;
            return ok ? 0 : 1;
        } else if (*eval1d) {
            if (function == "bessel") {
                std::cout << format_double(bessel_value_numeric(rat_from_string(karg), xval))
                          << "\n";
            } else {
                check_degree(narg);
                std::cout << format_double(
                                 ultraspherical_value_numeric(narg, std::stoi(karg), xval))
                          << "\n";
            }
        } else if (*limits) {
            double gap = scaling_limit_gap(bigN, std::stoi(karg), lam_scale, xval);
            if (format == "csv") {
                std::cout << csv_row({"N", "k", "lam", "x", "gap"}) << "\n";
                std::cout << csv_row({std::to_string(bigN), karg, format_double(lam_scale),
                                      format_double(xval), format_double(gap)})
                          << "\n";
            } else {
                Json o = Json::object();
                o["N"] = bigN;
                o["k"] = std::stoi(karg);
                o["lam"] = format_double(lam_scale);
                o["x"] = format_double(xval);
                o["gap"] = format_double(gap);
                emit(o);
            }
        }
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: malformed numeric argument (" << e.what() << ")\n";
        return 2;
    } catch (const math_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
