// finestruct command-line front end.
//
// Exit codes: 0 success, 1 failed verification or a math error (singularity, point outside a
// convergence region, contour too close), 2 bad flags or unreadable input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "finestruct/finestruct.hpp"

namespace fs = finestruct;
using fs::json;

namespace {

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw usage_error(path + ": " + e.what());
    }
}

/// Inline JSON or @file.
json json_arg(const std::string& s) {
    if (!s.empty() && s[0] == '@') return read_json_file(s.substr(1));
    try {
        return json::parse(s);
    } catch (const json::exception& e) {
        throw usage_error(std::string("bad JSON argument: ") + e.what());
    }
}

void print(const fs::Quaternion& q) { std::cout << fs::format_quaternion(q) << '\n'; }

std::pair<double, double> parse_range(const std::string& s) {
    const auto c = s.find(',');
    if (c == std::string::npos) throw usage_error("range must be 'lo,hi'");
    return {std::stod(s.substr(0, c)), std::stod(s.substr(c + 1))};
}

// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string family, kernel, target, f, series, q, p, op, fueter;
    int n = 0;
    bool closed = false, numeric = false;
};

int run_eval(const EvalArgs& a) {
    const fs::Quaternion q = fs::parse_quaternion(a.q);
    const std::optional<fs::Quaternion> p = a.p.empty() ? std::nullopt : std::optional(fs::parse_quaternion(a.p));
    const auto need_p = [&] {
        if (!p) throw usage_error("--p is required here");
        return *p;
    };
    const int picked = !a.family.empty() + !a.fueter.empty() + !a.kernel.empty() + !a.target.empty() + !a.f.empty() +
                       !a.series.empty();
    if (picked != 1) throw usage_error("eval needs exactly one of --family, --fueter, --kernel, --target, --f, --series");

    if (!a.family.empty()) {
        const fs::Family id = fs::parse_family(a.family);
        if (id == fs::Family::Fueter) throw usage_error("use --fueter a,b,c for Fueter polynomials");
        std::optional<fs::StarCenter> c;
        if (fs::is_two_variable(id)) c = fs::StarCenter(need_p());
        print(a.closed ? fs::eval_family_closed(id, a.n, q, c) : fs::eval_family(id, a.n, q, c));
        return 0;
    }
    if (!a.fueter.empty()) {
        fs::MultiIndex nu{};
        char c1 = 0, c2 = 0;
        std::istringstream in(a.fueter);
        if (!(in >> nu[0] >> c1 >> nu[1] >> c2 >> nu[2]) || c1 != ',' || c2 != ',' || nu[0] < 0 || nu[1] < 0 || nu[2] < 0)
            throw usage_error("--fueter needs a multi-index 'a,b,c' of non-negative integers");
        print(fs::eval_fueter_polynomial(nu, q));
        return 0;
    }
    if (!a.kernel.empty()) {
        const fs::KernelId id = fs::parse_kernel(a.kernel);
        print(id == fs::KernelId::E ? fs::kernel_E(q) : fs::eval_kernel(id, need_p(), q));
        return 0;
    }
    if (!a.target.empty()) {
        fs::TargetKind kind;
        if (a.target == "star_power") kind = fs::TargetKind::star_power;
        else if (a.target == "spherical_block") kind = fs::TargetKind::spherical_block;
        else if (a.target == "spherical_linear") kind = fs::TargetKind::spherical_linear;
        else throw usage_error("unknown target: " + a.target);
        const fs::Target t{kind, fs::StarCenter(need_p()), a.n};
        if (a.op.empty()) print(fs::eval_target(t, q));
        else if (a.numeric)
            print(fs::apply_numeric(fs::parse_op(a.op), [&](const fs::Quaternion& x) { return fs::eval_target(t, x); }, q));
        else
            print(fs::apply_exact(fs::parse_op(a.op), t, q));
        return 0;
    }
    if (!a.f.empty()) {
        const fs::SliceFunction f = fs::parse_slice_function(a.f);
        if (a.op.empty()) print(f(q));
        else print(fs::apply_numeric(fs::parse_op(a.op), [&](const fs::Quaternion& x) { return f(x); }, q));
        return 0;
    }
    const fs::SeriesSpec s = fs::series_from_json(read_json_file(a.series));
    const auto v = fs::eval_series(s, q);
    if (v.outside_region) throw fs::region_error("q lies outside the convergence region of the series");
    print(v.value);
    return 0;
}

struct ExpandArgs {
    std::string kernel, p, center = "origin";
    int N = 32;
};

int run_expand(const ExpandArgs& a) {
    const fs::KernelId id = fs::parse_kernel(a.kernel);
    const fs::Quaternion p = fs::parse_quaternion(a.p);
    fs::KernelCenter where;
    if (a.center == "origin") where = fs::KernelCenter::origin;
    else if (a.center == "shifted") where = fs::KernelCenter::shifted;
    else throw usage_error("--center must be origin or shifted");
    const fs::SeriesSpec s = fs::expand_S_L_inv(p, where, a.N);
    switch (id) {
        case fs::KernelId::S_L_inv_I:
        case fs::KernelId::S_L_inv_II: std::cout << fs::to_json(s).dump() << '\n'; return 0;
        case fs::KernelId::Q_c_inv: {
            // D S_L^{-1} = -2 Q_c^{-1}
            fs::FineSeries f = fs::fine_transform(s, fs::Op::D);
            for (auto& [k, c] : f.coeffs) c = -0.5 * c;
            std::cout << fs::to_json(f).dump() << '\n';
            return 0;
        }
        case fs::KernelId::P2_L: std::cout << fs::to_json(fs::fine_transform(s, fs::Op::Dbar)).dump() << '\n'; return 0;
        case fs::KernelId::F_L: std::cout << fs::to_json(fs::fine_transform(s, fs::Op::Delta)).dump() << '\n'; return 0;
        default: throw usage_error("no series expansion for kernel " + a.kernel);
    }
}

struct TransformArgs {
    std::string spec, op, at;
};

int run_transform(const TransformArgs& a) {
    const fs::SeriesSpec s = fs::series_from_json(read_json_file(a.spec));
    const fs::Op op = fs::parse_op(a.op);
    const fs::FineSeries f = fs::fine_transform(s, op);
    if (a.at.empty()) std::cout << fs::to_json(f).dump() << '\n';
    else print(fs::eval_fine_series(f, fs::parse_quaternion(a.at)));
    return 0;
}

struct RegionArgs {
    std::string region, plane = "1,0,0", u = "-2,2", v = "-2,2", q;
    int steps = 41;
};

int run_region_sample(const RegionArgs& a) {
    const fs::Region r = fs::region_from_json(json_arg(a.region));
    const fs::ImaginaryUnit I = fs::parse_unit(a.plane);
    const auto [u0, u1] = parse_range(a.u);
    const auto [v0, v1] = parse_range(a.v);
    if (a.steps < 2) throw usage_error("--steps must be >= 2");
    std::cout << "u,v,inside\n";
    for (int i = 0; i < a.steps; ++i)
        for (int j = 0; j < a.steps; ++j) {
            const double u = u0 + (u1 - u0) * i / (a.steps - 1), v = v0 + (v1 - v0) * j / (a.steps - 1);
            std::cout << u << ',' << v << ',' << (fs::region_contains(r, I.at(u, v)) ? 1 : 0) << '\n';
        }
    return 0;
}

int run_region_contains(const RegionArgs& a) {
    const fs::Region r = fs::region_from_json(json_arg(a.region));
    std::cout << (fs::region_contains(r, fs::parse_quaternion(a.q)) ? "true" : "false") << '\n';
    return 0;
}

struct IntegrateArgs {
    std::string op = "id", f, plane = "1,0,0", at;
    double center = 0.0, radius = 2.0;
    int nodes = 1024;
};

int run_integrate(const IntegrateArgs& a) {
    const fs::SliceFunction f = fs::parse_slice_function(a.f);
    const fs::QFunction g = [&](const fs::Quaternion& x) { return f(x); };
    const fs::Contour c(fs::parse_unit(a.plane), a.center, a.radius, a.nodes);
    const fs::Quaternion q = fs::parse_quaternion(a.at);
    print(a.op == "id" ? fs::cauchy_eval(g, q, c) : fs::fine_integral(fs::parse_op(a.op), g, q, c));
    return 0;
}

struct VerifyArgs {
    std::string group;
    bool all = false;
    std::uint64_t seed = fs::verify::Options{}.seed;
};

int run_verify(const VerifyArgs& a) {
    if (a.all == !a.group.empty()) throw usage_error("verify needs exactly one of --group or --all");
    fs::verify::Options o;
    o.seed = a.seed;
    std::vector<std::string_view> groups;
    if (a.all) groups.assign(std::begin(fs::verify::kGroups), std::end(fs::verify::kGroups));
    else {
        if (std::find(std::begin(fs::verify::kGroups), std::end(fs::verify::kGroups), a.group) ==
            std::end(fs::verify::kGroups))
            throw usage_error("unknown group: " + a.group);
        groups.push_back(a.group);
    }
    bool ok = true;
    for (auto g : groups) {
        const auto r = fs::verify::run_group(g, o);
        std::printf("%s %s (%.2fs)\n", r.pass() ? "PASS" : "FAIL", r.group.c_str(), r.seconds);
        for (const auto& c : r.checks)
            std::printf("  %s %-72s max residual %.3g %s %.3g\n", c.pass() ? "ok  " : "FAIL", c.name.c_str(), c.residual,
                        c.reject ? ">" : "<=", c.tol);
        ok = ok && r.pass();
    }
    std::fflush(stdout);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fine structure operators on quaternionic slice functions"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate a family, kernel, target, function or series at q");
    eval->add_option("--family", ev.family, "H, CA, P2, Pneg, S, R, Ht, Qt, P2t, Hcal, Mcal, R2");
    eval->add_option("--fueter", ev.fueter, "Fueter polynomial multi-index a,b,c");
    eval->add_option("--kernel", ev.kernel, "S_L_inv[_I|_II], S_R_inv[_I|_II], Q_c_inv, F_L, P2_L, E");
    eval->add_option("--target", ev.target, "star_power, spherical_block, spherical_linear");
    eval->add_option("--f", ev.f, "slice function: q^k or a JSON descriptor");
    eval->add_option("--series", ev.series, "SeriesSpec JSON file");
    eval->add_option("--n", ev.n, "index / power");
    eval->add_option("--q", ev.q, "evaluation point q0,q1,q2,q3")->required();
    eval->add_option("--p", ev.p, "second variable / center");
    eval->add_option("--op", ev.op, "D, Dbar, Delta, d_q0, Euler, Gamma, V_left, V_right");
    eval->add_flag("--closed", ev.closed, "use the closed form of a family");
    eval->add_flag("--numeric", ev.numeric, "apply --op by finite differences instead of the closed form");

    ExpandArgs ex;
    auto* expand = app.add_subcommand("expand", "Series expansion of a kernel as JSON");
    expand->add_option("--kernel", ex.kernel, "S_L_inv, Q_c_inv, P2_L, F_L")->required();
    expand->add_option("--p", ex.p, "kernel variable p")->required();
    expand->add_option("--center", ex.center, "origin or shifted (about p+1)");
    expand->add_option("--N", ex.N, "truncation")->check(CLI::NonNegativeNumber);

    TransformArgs tr;
    auto* transform = app.add_subcommand("transform", "Fine transform of a SeriesSpec file");
    transform->add_option("--spec", tr.spec, "SeriesSpec JSON file")->required()->check(CLI::ExistingFile);
    transform->add_option("--op", tr.op, "D, Dbar, Delta")->required();
    transform->add_option("--at", tr.at, "evaluate the transformed series at this point");

    RegionArgs rg;
    auto* region = app.add_subcommand("region", "Convergence-region membership");
    region->require_subcommand(1);
    auto* sample = region->add_subcommand("sample", "CSV grid u,v,inside over a slice plane");
    auto* contains = region->add_subcommand("contains", "Print true/false for one point");
    for (auto* s : {sample, contains})
        s->add_option("--region", rg.region, "region JSON or @file")->required();
    sample->add_option("--plane", rg.plane, "imaginary unit i1,i2,i3");
    sample->add_option("--u", rg.u, "u range lo,hi");
    sample->add_option("--v", rg.v, "v range lo,hi");
    sample->add_option("--steps", rg.steps, "grid points per axis");
    contains->add_option("--q", rg.q, "point")->required();

    IntegrateArgs in;
    auto* integrate = app.add_subcommand("integrate", "Contour quadrature of f or of D, Dbar, Delta f");
    integrate->add_option("--op", in.op, "id, D, Dbar, Delta");
    integrate->add_option("--f", in.f, "slice function: q^k or a JSON descriptor")->required();
    integrate->add_option("--plane", in.plane, "imaginary unit of the contour plane");
    integrate->add_option("--center", in.center, "real center of the circle");
    integrate->add_option("--radius", in.radius, "circle radius");
    integrate->add_option("--nodes", in.nodes, "trapezoid nodes");
    integrate->add_option("--at", in.at, "evaluation point")->required();

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "Run invariant groups");
    verify->add_option("--group", vf.group, "operator-oracle, fueter-theorem, kernels, series, integrals, families, discrepancies");
    verify->add_flag("--all", vf.all, "run every group");
    verify->add_option("--seed", vf.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval) return run_eval(ev);
        if (*expand) return run_expand(ex);
        if (*transform) return run_transform(tr);
        if (*sample) return run_region_sample(rg);
        if (*contains) return run_region_contains(rg);
        if (*integrate) return run_integrate(in);
        if (*verify) return run_verify(vf);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
