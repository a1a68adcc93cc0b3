#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quermass/linearization.hpp"
#include "quermass/parallel.hpp"
#include "quermass/sweep.hpp"

using json = nlohmann::ordered_json;
using namespace quermass;

namespace {

constexpr const char* kSchema = "quermass-report/1";

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open spec file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("spec parse error in " + path + ": " + e.what());
    }
}

Polynomial parse_polynomial(const json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("terms"))
        throw ConfigError("polynomial spec needs \"dimension\" and \"terms\"");
    const int dim = j.at("dimension").get<int>();
    std::vector<Polynomial::Monomial> terms;
    for (const json& t : j.at("terms")) {
        Polynomial::Monomial m;
        m.exponents = t.at("exponents").get<std::vector<int>>();
        m.coeff = t.at("coeff").get<double>();
        terms.push_back(std::move(m));
    }
    try {
        return Polynomial(dim, std::move(terms));
    } catch (const InputError& e) {
        throw ConfigError(std::string("polynomial spec: ") + e.what());
    }
}

Vec parse_vec(const json& j) {
    const std::vector<double> v = j.get<std::vector<double>>();
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

StarBody parse_body(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ConfigError("body spec needs \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "ball")
            return StarBody::ball(j.at("dimension").get<int>(),
                                  j.value("radius", 1.0));
        if (kind == "ellipsoid") return StarBody::ellipsoid(parse_vec(j.at("semiaxes")));
        if (kind == "shifted-ball")
            return StarBody::shifted_ball(parse_vec(j.at("center")),
                                          j.at("radius").get<double>());
        if (kind == "perturbed")
            return StarBody::perturbed(parse_polynomial(j.at("epsilon")),
                                       j.at("lambda").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("body spec: " + std::string(e.what()));
    } catch (const InputError& e) {
        throw ConfigError("body spec: " + std::string(e.what()));
    }
    throw ConfigError("unknown body kind: " + kind);
}

Direction parse_pole(const std::vector<double>& coords, int d) {
    if (coords.empty()) return Direction::axis(d, d - 1);
    if (static_cast<int>(coords.size()) != d)
        throw ConfigError("--pole needs exactly d components");
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = coords[i];
    const double n = v.norm();
    if (n <= 0.0) throw ConfigError("--pole must be a nonzero vector");
    return Direction(v / n);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json pole_json(const Direction& pole) {
    json arr = json::array();
    for (int i = 0; i < pole.dim(); ++i) arr.push_back(pole[i]);
    return arr;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + out_path);
    out << text;
}

std::string sweep_csv(const SweepReport& report, int d) {
    std::ostringstream os;
    for (int i = 0; i < d; ++i) os << "pole" << i << ",";
    os << "t_star,w_star,central_derivative,evenness_defect,boundary_warning,error\n";
    for (const PoleRecord& rec : report.records) {
        for (int i = 0; i < d; ++i) os << fmt(rec.pole[i]) << ",";
        os << fmt(rec.t_star) << "," << fmt(rec.w_star) << ","
           << fmt(rec.central_derivative) << "," << fmt(rec.profile_evenness_defect) << ","
           << (rec.boundary_warning ? 1 : 0) << "," << rec.error.value_or("") << "\n";
    }
    return os.str();
}

struct CommonOpts {
    std::string body_file;
    std::string out_path;
    std::string format = "json";
    unsigned seed = 20120;
    int quad_order = 0;
};

void emit(const json& report, const CommonOpts& common, const std::string& csv = "") {
    if (common.format == "csv" && !csv.empty()) {
        write_output(csv, common.out_path);
    } else if (common.format == "csv") {
        // Flat key,value fallback for commands without a natural table.
        std::ostringstream os;
        os << "key,value\n";
        for (const auto& [key, value] : report.items())
            os << key << ",\"" << value.dump() << "\"\n";
        write_output(os.str(), common.out_path);
    } else {
        write_output(report.dump(2) + "\n", common.out_path);
    }
}

int run_sweep(const CommonOpts& common, int l, int t_grid, int poles,
              const std::vector<double>& pole_coords) {
    const json body_spec = load_json(common.body_file);
    const StarBody body = parse_body(body_spec);
    SweepOptions opts;
    opts.grid_points = t_grid;
    opts.quad_order = common.quad_order;
    const std::vector<Direction> grid =
        pole_coords.empty() ? direction_grid(body.dim(), poles, common.seed)
                            : std::vector<Direction>{parse_pole(pole_coords, body.dim())};
    const SweepReport report = symmetry_report(body, l, grid, opts);

    json out;
    out["schema"] = kSchema;
    out["command"] = "sweep";
    out["parameters"] = {{"body", body_spec},         {"l", l},
                         {"t_grid", t_grid},          {"poles", (int)grid.size()},
                         {"seed", common.seed},       {"quad_order", common.quad_order}};
    out["summary"] = {{"max_abs_t_star", report.max_abs_t_star},
                      {"max_abs_central_derivative", report.max_abs_central_derivative}};
    json records = json::array();
    for (const PoleRecord& rec : report.records) {
        json r;
        r["pole"] = pole_json(rec.pole);
        r["t_star"] = rec.t_star;
        r["w_star"] = rec.w_star;
        r["central_derivative"] = rec.central_derivative;
        r["evenness_defect"] = rec.profile_evenness_defect;
        r["boundary_warning"] = rec.boundary_warning;
        if (rec.error) r["error"] = *rec.error;
        records.push_back(std::move(r));
    }
    out["records"] = std::move(records);
    emit(out, common, sweep_csv(report, body.dim()));
    return 0;
}

int run_perturb(const CommonOpts& common, int d, int l, const std::vector<double>& schedule,
                const std::string& variant_name, const std::vector<double>& pole_coords) {
    const json eps_spec = load_json(common.body_file);
    const Polynomial eps = parse_polynomial(eps_spec);
    if (eps.dim() != d) throw ConfigError("--d does not match the epsilon spec dimension");
    if (schedule.size() < 2) throw ConfigError("--lambda-schedule needs at least two values");
    for (std::size_t i = 1; i < schedule.size(); ++i)
        if (!(schedule[i] < schedule[i - 1]))
            throw ConfigError("--lambda-schedule must be strictly decreasing");
    parse_variant(variant_name);  // validate
    const Direction pole = parse_pole(pole_coords, d);
    const int order = common.quad_order > 0 ? common.quad_order : default_quad_order(d);

    const double integral = proposition_integral(eps, pole, order).value;
    const double coeff_paper = wl_derivative_coefficient(d, l, CoefficientVariant::paper);
    const double coeff_rederived = wl_derivative_coefficient(d, l, CoefficientVariant::rederived);

    json rows = json::array();
    double measured_constant = 0.0;
    for (double lambda : schedule) {
        const StarBody body = StarBody::perturbed(eps, lambda);
        const double measured = central_derivative(body, pole, l, 0.01, order);
        const double pred_paper = lambda * coeff_paper * integral;
        const double pred_rederived = lambda * coeff_rederived * integral;
        measured_constant = integral != 0.0 ? measured / (lambda * integral) : 0.0;
        rows.push_back({{"lambda", lambda},
                        {"measured", measured},
                        {"predicted_paper", pred_paper},
                        {"predicted_rederived", pred_rederived},
                        {"measured_constant", measured_constant}});
    }

    json out;
    out["schema"] = kSchema;
    out["command"] = "perturb";
    out["parameters"] = {{"epsilon", eps_spec}, {"d", d},
                         {"l", l},              {"lambda_schedule", schedule},
                         {"variant", variant_name}, {"pole", pole_json(pole)},
                         {"quad_order", order}};
    out["summary"] = {
        {"equator_integral", integral},
        {"coefficient_paper", coeff_paper},
        {"coefficient_rederived", coeff_rederived},
        {"measured_constant", measured_constant},
        {"closer_variant", std::abs(measured_constant - coeff_paper) <=
                                   std::abs(measured_constant - coeff_rederived)
                               ? "paper"
                               : "rederived"}};
    out["rows"] = rows;

    std::ostringstream csv;
    csv << "lambda,measured,predicted_paper,predicted_rederived,measured_constant\n";
    for (const json& r : out["rows"])
        csv << fmt(r["lambda"]) << "," << fmt(r["measured"]) << "," << fmt(r["predicted_paper"])
            << "," << fmt(r["predicted_rederived"]) << "," << fmt(r["measured_constant"]) << "\n";
    emit(out, common, csv.str());
    return 0;
}

int run_evenness(const CommonOpts& common, int poles, double tol) {
    const json f_spec = load_json(common.body_file);
    const Polynomial f = parse_polynomial(f_spec);
    if (tol <= 0.0) throw ConfigError("--tol must be positive");
    const int order = common.quad_order > 0 ? common.quad_order : default_quad_order(f.dim());
    const std::vector<Direction> grid = direction_grid(f.dim(), poles, common.seed);
    const EvennessVerdict verdict = evenness_classify(f, grid, tol, order);

    json out;
    out["schema"] = kSchema;
    out["command"] = "evenness";
    out["parameters"] = {{"function", f_spec}, {"poles", poles},       {"tol", tol},
                         {"seed", common.seed}, {"quad_order", order}};
    out["verdict"] = verdict.even_consistent ? "even-consistent" : "not-even";
    out["witness"] = pole_json(verdict.witness);
    out["max_abs_integral"] = verdict.max_abs_integral;
    emit(out, common);
    return 0;
}

int run_oracle(const CommonOpts& common, int l, double t,
               const std::vector<double>& pole_coords) {
    const json body_spec = load_json(common.body_file);
    const StarBody body = parse_body(body_spec);
    const Direction pole = parse_pole(pole_coords, body.dim());
    const int order =
        common.quad_order > 0 ? common.quad_order : default_quad_order(body.dim());
    const Section section(body, pole, t);

    const double curvature = l == 0 ? section_volume(section, order).value
                                    : curvature_quermass(section, l, order).value;
    SteinerOptions sopts;
    sopts.seed = common.seed;
    if (body.dim() >= 4) sopts.boundary_cloud_order = 24;
    const double steiner = steiner_quermass_oracle(section, l, sopts).value;

    json out;
    out["schema"] = kSchema;
    out["command"] = "oracle";
    out["parameters"] = {{"body", body_spec},   {"l", l},
                         {"t", t},              {"pole", pole_json(pole)},
                         {"seed", common.seed}, {"quad_order", order}};
    out["curvature_integral"] = curvature;
    out["steiner_fit"] = steiner;
    out["delta"] = std::abs(curvature - steiner);
    emit(out, common);
    return 0;
}

int run_remark2d(const CommonOpts& common, const std::vector<double>& pole_coords) {
    const json spec = load_json(common.body_file);
    if (!spec.contains("rho0") || !spec.contains("epsilon"))
        throw ConfigError("remark2d spec needs \"rho0\" and \"epsilon\" polynomials");
    const Polynomial rho0 = parse_polynomial(spec.at("rho0"));
    const Polynomial eps = parse_polynomial(spec.at("epsilon"));
    const Direction pole = parse_pole(pole_coords, 3);
    const int order = common.quad_order > 0 ? common.quad_order : 64;

    const Remark2dRaw raw = remark2d_raw_condition(rho0, eps, pole, order);
    const double op = remark2d_operator(rho0, eps, pole, order);

    json out;
    out["schema"] = kSchema;
    out["command"] = "remark2d";
    out["parameters"] = {{"spec", spec}, {"pole", pole_json(pole)}, {"quad_order", order}};
    out["raw"] = raw.raw;
    out["degree0"] = raw.degree0;
    out["truncation"] = raw.truncation;
    out["operator"] = op;
    out["ibp_defect"] = std::abs(op - (raw.truncation - raw.degree0));
    emit(out, common);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_cap_from_env();

    CLI::App app{"quermassintegrals of hyperplane sections: sweeps, perturbation "
                 "experiments, evenness checks, and oracles"};
    app.require_subcommand(1);

    CommonOpts common;
    int l = 1, d = 3, t_grid = 201, poles = 64;
    double t = 0.0, tol = 1e-7;
    std::string variant = "paper";
    std::vector<double> schedule, pole_coords;

    auto add_common = [&](CLI::App* cmd, bool needs_body = true) {
        CLI::Option* body = cmd->add_option("--body", common.body_file,
                                            "JSON body/function spec file");
        if (needs_body) body->required();
        cmd->add_option("--out", common.out_path, "output file (default: stdout)");
        cmd->add_option("--format", common.format, "report format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--seed", common.seed, "quasi-random seed");
        cmd->add_option("--quad-order", common.quad_order,
                        "quadrature order (0 = dimension default)");
        cmd->add_option("--pole", pole_coords, "pole direction components (default: last axis)")
            ->delimiter(',');
    };

    CLI::App* sweep = app.add_subcommand("sweep", "offset sweep and symmetry report");
    add_common(sweep);
    sweep->add_option("--l", l, "quermassintegral order");
    sweep->add_option("--t-grid", t_grid, "offset grid points (odd)");
    sweep->add_option("--poles", poles, "number of pole directions");

    CLI::App* perturb = app.add_subcommand("perturb", "first-order perturbation experiment");
    add_common(perturb);
    perturb->add_option("--d", d, "ambient dimension")->required();
    perturb->add_option("--l", l, "quermassintegral order");
    perturb->add_option("--lambda-schedule", schedule, "strictly decreasing lambdas")
        ->delimiter(',')
        ->required();
    perturb->add_option("--variant", variant, "coefficient variant")
        ->check(CLI::IsMember({"paper", "rederived"}));

    CLI::App* evenness = app.add_subcommand("evenness", "evenness criterion classifier");
    add_common(evenness);
    evenness->add_option("--poles", poles, "pole grid size");
    evenness->add_option("--tol", tol, "classification tolerance");

    CLI::App* oracle = app.add_subcommand("oracle", "curvature integral vs Steiner fit");
    add_common(oracle);
    oracle->add_option("--l", l, "quermassintegral order");
    oracle->add_option("--t", t, "section offset");

    CLI::App* remark2d = app.add_subcommand("remark2d", "d=3 perimeter-derivative operator");
    add_common(remark2d);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return run_sweep(common, l, t_grid, poles, pole_coords);
        if (perturb->parsed()) return run_perturb(common, d, l, schedule, variant, pole_coords);
        if (evenness->parsed()) return run_evenness(common, poles, tol);
        if (oracle->parsed()) return run_oracle(common, l, t, pole_coords);
        if (remark2d->parsed()) return run_remark2d(common, pole_coords);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
