// Command-line front end. Every report is line-oriented and ends with OK or FAIL.
//
// Exit codes: 0 success, 1 mathematical failure, 2 input error, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kanforge/io/json_io.hpp"
#include "kanforge/kanforge.hpp"
#include "kanforge/smooth.hpp"

namespace fs = std::filesystem;
using namespace kanforge;

namespace {

enum Exit { success = 0, math_failure = 1, input_error = 2, budget_error = 3 };

struct Settings {
    Budget budget;
};

Settings settings;

int finish(std::ostream& out, bool ok)
{
    out << (ok ? "OK" : "FAIL") << "\n";
    return ok ? success : math_failure;
}

void check_size(const Presentation& K)
{
    if (K.total_cells() > settings.budget.max_simplices)
        throw BudgetExceeded("nondegenerate simplices", K.total_cells());
}

io::ComplexFile load(const std::string& path)
{
    auto f = io::read_complex(path);
    check_size(f.complex);
    return f;
}

int top_dimension(const Presentation& K, std::optional<int> requested)
{
    const int d = requested.value_or(std::max(K.dimension(), 0));
    if (d < 0)
        throw InvalidParameters("--max-dim must be non-negative");
    check_dimension_cap(d, "max-dim");
    return d;
}

std::string coordinates(const IntVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? ", " : "") + v[i].str();
    return out + ")";
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path)
{
    const auto j = io::read_json(path);
    try {
        const auto f = io::complex_from_json(j);
        std::cout << "name: " << f.complex.name() << "\n";
        std::cout << "cells:";
        for (int c : f.complex.counts())
            std::cout << " " << c;
        std::cout << "\n";
        return finish(std::cout, true);
    } catch (const ValidationError& e) {
        std::cout << e.what() << "\n";
        return finish(std::cout, false);
    }
}

int cmd_homology(const std::string& path, const std::string& coeff, std::optional<int> max_dim, bool co)
{
    const auto f = load(path);
    const auto C = chain_complex(f.complex, top_dimension(f.complex, max_dim));
    const auto R = io::coefficients_from_name(coeff);
    std::cout << format_groups(co ? cohomology(C, R) : homology(C, R), co ? "H^" : "H");
    return finish(std::cout, true);
}

int cmd_cup(const std::string& path, int p, int q, const std::string& coeff)
{
    const auto f = load(path);
    const auto& K = f.complex;
    if (p < 0 || q < 0)
        throw InvalidParameters("cup degrees must be non-negative");
    const auto C = chain_complex(K, top_dimension(K, std::max(K.dimension(), p + q)));
    const auto R = io::coefficients_from_name(coeff);
    const auto Hp = cohomology_in_degree(C, p, R);
    const auto Hq = cohomology_in_degree(C, q, R);
    const auto Hpq = cohomology_in_degree(C, p + q, R);
    std::cout << "H^" << p << "=" << Hp.group().to_string() << "\n";
    std::cout << "H^" << q << "=" << Hq.group().to_string() << "\n";
    std::cout << "H^" << p + q << "=" << Hpq.group().to_string() << "\n";
    const auto a = generator_classes(Hp);
    const auto b = generator_classes(Hq);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto c = cup_product(K, a[i], b[j], Hpq);
            std::cout << "x" << p << "_" << i << " * x" << q << "_" << j << " = " << coordinates(c.coordinates) << "\n";
        }
    return finish(std::cout, true);
}

int cmd_pi1(const std::string& path, const std::optional<std::string>& basepoint)
{
    const auto f = load(path);
    const auto& K = f.complex;
    std::optional<CellRef> bp;
    if (const auto name = basepoint ? basepoint : f.basepoint) {
        const auto c = K.find(*name);
        if (!c || c->dim != 0)
            throw InvalidParameters("basepoint '" + *name + "' is not a vertex");
        bp = *c;
    }
    const auto P = pi1_presentation(K, bp, bp.has_value()).simplified();
    std::cout << "presentation: " << P.to_string() << "\n";
    if (const auto r = P.recognize())
        std::cout << "pi1=" << *r << "\n";
    std::cout << "pi1_ab=" << P.abelianization().to_string() << "\n";
    return finish(std::cout, true);
}

int cmd_kan(const std::string& path, int max_dim)
{
    const auto f = load(path);
    check_dimension_cap(max_dim, "max-dim");
    const auto r = kan_report(f.complex, max_dim, settings.budget);
    std::cout << "horns checked: " << r.horns_checked << "\n";
    std::cout << "unfilled: " << r.unfilled.size() << "\n";
    for (const auto& h : r.unfilled)
        std::cout << "witness " << format_horn(f.complex, h) << "\n";
    return finish(std::cout, r.empty());
}

int cmd_fibrant(const std::string& path, int max_dim, int stages, const std::optional<std::string>& out_path)
{
    const auto f = load(path);
    check_dimension_cap(max_dim, "max-dim");
    auto K = std::make_shared<const Presentation>(f.complex);
    const auto r = fibrant_approx_bounded(K, max_dim, stages, settings.budget);
    for (const auto& s : r.stages) {
        std::cout << "stage " << s.stage << ":";
        for (std::size_t p = 0; p < s.attached.size(); ++p)
            if (s.attached[p])
                std::cout << " p=" << p << " filled " << s.attached[p];
        std::cout << "\n";
    }
    std::cout << "cells:";
    for (int c : r.extended->counts())
        std::cout << " " << c;
    std::cout << "\n";
    const bool vertices = r.extended->cell_count(0) == K->cell_count(0);
    std::cout << "vertices preserved: " << (vertices ? "yes" : "no") << "\n";
    std::cout << "residual unfilled horns: " << r.residual.unfilled.size() << "\n";
    if (out_path) {
        std::ofstream out(*out_path);
        out << io::complex_to_json(*r.extended).dump(2) << "\n";
        std::cout << "wrote " << *out_path << "\n";
    }
    return finish(std::cout, vertices);
}

FiniteGroup finite_group(const std::string& name)
{
    auto g = io::group_from_name(name);
    if (!std::holds_alternative<FiniteGroup>(g))
        throw Unsupported("the classifying complex of " + name + " is infinite in every dimension");
    return std::get<FiniteGroup>(g);
}

struct EmitOptions {
    std::string kind;
    int p = 0;
    std::optional<int> k;
    std::optional<int> n;
    std::vector<std::string> files;
    std::string group = "z2";
    int max_dim = 3;
    std::optional<std::string> out;
};

int cmd_emit(const EmitOptions& o)
{
    Presentation K;
    if (o.kind == "delta")
        K = standard_simplex(o.p);
    else if (o.kind == "boundary")
        K = simplex_boundary(o.p);
    else if (o.kind == "horn")
        K = standard(StandardKind::horn, o.p, o.k);
    else if (o.kind == "circle")
        K = circle();
    else if (o.kind == "cycle")
        K = standard(StandardKind::cycle, 0, std::nullopt, o.n);
    else if (o.kind == "product") {
        if (o.files.size() != 2)
            throw InvalidParameters("emit product needs two complex files");
        K = product(load(o.files[0]).complex, load(o.files[1]).complex);
    } else if (o.kind == "wbar" || o.kind == "w") {
        check_dimension_cap(o.max_dim, "max-dim");
        const auto G = finite_group(o.group);
        K = o.kind == "wbar" ? wbar_truncated(G, o.max_dim) : *w_truncated(G, o.max_dim).total;
    } else {
        throw InvalidParameters("unknown construction '" + o.kind + "'");
    }
    check_size(K);
    const auto text = io::complex_to_json(K).dump(2);
    if (o.out) {
        std::ofstream out(*o.out);
        if (!out)
            throw ParseError("cannot write '" + *o.out + "'");
        out << text << "\n";
        std::cout << "wrote " << *o.out << "\n";
        return finish(std::cout, true);
    }
    std::cout << text << "\n";
    return success;
}

io::AnyTwisting load_twisting(const PresentationPtr& base, const std::string& path)
{
    return io::twisting_from_json(io::read_json(path), base);
}

int cmd_bundle_check(const std::string& base_path, const std::string& twist_path)
{
    auto B = std::make_shared<const Presentation>(load(base_path).complex);
    const auto any = load_twisting(B, twist_path);
    if (!std::holds_alternative<TwistingFunction<FiniteGroup>>(any))
        throw Unsupported("the total space of a bundle with an infinite group is not finite");
    const auto& tau = std::get<TwistingFunction<FiniteGroup>>(any);
    const auto P = tcp_build(tau);
    check_size(*P.total);
    std::cout << "group: " << tau.group().label() << "\n";
    std::cout << "total cells:";
    for (int c : P.total->counts())
        std::cout << " " << c;
    std::cout << "\n";
    std::cout << "components: " << pi0(*P.total).count << "\n";
    const auto pc = principal_check(P);
    for (const auto& d : pc.diagnostics)
        std::cout << "principal: " << d << "\n";
    std::cout << "principal: " << (pc.ok ? "ok" : "failed") << "\n";
    const auto cc = covering_check(P.projection, tau.group().order());
    std::cout << "covering: " << (cc.ok ? "ok" : "failed") << "\n";
    const auto cp = classifying_pullback_check(tau);
    std::cout << "classifying pullback: " << (cp.ok ? "ok" : "failed") << "\n";
    return finish(std::cout, pc.ok && cc.ok && cp.ok);
}

int cmd_cover_check(const std::string& map_path, int sheets)
{
    const auto f = io::map_from_json(io::read_json(map_path), fs::path(map_path).parent_path());
    const auto r = covering_check(f, sheets);
    for (const auto& d : r.diagnostics)
        std::cout << d << "\n";
    return finish(std::cout, r.ok);
}

int cmd_charclass(const std::string& base_path, const std::string& twist_path, const std::string& cocycle_path)
{
    auto B = std::make_shared<const Presentation>(load(base_path).complex);
    const auto any = load_twisting(B, twist_path);
    const auto cj = io::read_json(cocycle_path);
    const auto cls = std::visit(
        [&](const auto& tau) {
            const io::AnyGroup G = tau.group();
            const auto c = io::cocycle_from_json(cj, G);
            using Tau = std::decay_t<decltype(tau)>;
            if constexpr (std::is_same_v<Tau, TwistingFunction<FiniteGroup>>)
                return characteristic_class(tau, std::get<GroupCochain>(c));
            else
                return characteristic_class(tau, std::get<PresentedHomomorphism>(c));
        },
        any);
    const auto C = chain_complex(*B, std::max(B->dimension(), cls.degree));
    const auto H = cohomology_in_degree(C, cls.degree, cls.coeff);
    std::cout << "H^" << cls.degree << " class: " << (cls.is_zero() ? "zero" : "nonzero") << " ("
              << H.group().to_string() << ")\n";
    return finish(std::cout, true);
}

int cmd_smooth(const std::string& what, double eps, int grid)
{
    if (grid < 4)
        throw InvalidParameters("--grid must be at least 4");
    smooth::PropertyReport r;
    if (what == "mu")
        r = smooth::check_mu(grid * 5);
    else if (what == "F")
        r = smooth::check_F(grid);
    else if (what == "r")
        r = smooth::check_r(grid);
    else if (what == "psi2")
        r = smooth::check_psi2(eps, grid);
    else if (what == "tame")
        r = smooth::check_tame_composite(grid);
    else if (what == "extend")
        r = smooth::check_extension(eps, grid);
    else
        throw InvalidParameters("unknown smooth construction '" + what + "'");
    std::cout << r.to_string();
    return finish(std::cout, r.ok());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite simplicial sets: homology, horns, bundles and characteristic classes"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-simplices", settings.budget.max_simplices, "Budget on nondegenerate simplices");
    app.add_option("--max-horns", settings.budget.max_horns, "Budget on horn instances");

    std::string file, file2, file3, coeff = "z";
    std::optional<int> max_dim;
    int dim = 2, stages = 1, sheets = 2, grid = 200;
    double eps = 0.2;
    std::vector<int> degrees;
    std::optional<std::string> basepoint, out_path;
    std::function<int()> run;

    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a complex file");
    validate_cmd->add_option("file", file)->required();
    validate_cmd->callback([&] { run = [&] { return cmd_validate(file); }; });

    for (const bool co : {false, true}) {
        auto* c = app.add_subcommand(co ? "cohomology" : "homology", co ? "Cohomology groups" : "Homology groups");
        c->add_option("file", file)->required();
        c->add_option("--coeff", coeff, "z or zN");
        c->add_option("--max-dim", max_dim, "Highest degree reported");
        c->callback([&, co] { run = [&, co] { return cmd_homology(file, coeff, max_dim, co); }; });
    }

    auto* cup = app.add_subcommand("cup", "Cup products of cohomology generators");
    cup->add_option("file", file)->required();
    cup->add_option("--deg", degrees, "Degrees p q of the two factors")->expected(2)->required();
    cup->add_option("--coeff", coeff, "z or zN");
    cup->callback([&] { run = [&] { return cmd_cup(file, degrees[0], degrees[1], coeff); }; });

    auto* pi1 = app.add_subcommand("pi1", "Edge-path presentation of the fundamental group");
    pi1->add_option("file", file)->required();
    pi1->add_option("--basepoint", basepoint, "Vertex name; restricts to its component");
    pi1->callback([&] { run = [&] { return cmd_pi1(file, basepoint); }; });

    auto* kan = app.add_subcommand("kan", "Search for unfillable horns");
    kan->add_option("file", file)->required();
    kan->add_option("--max-dim", dim, "Largest horn dimension searched")->required();
    kan->callback([&] { run = [&] { return cmd_kan(file, dim); }; });

    auto* fib = app.add_subcommand("fibrant", "Bounded horn-filling extension");
    fib->add_option("file", file)->required();
    fib->add_option("--max-dim", dim, "Largest horn dimension filled")->required();
    fib->add_option("--stages", stages, "Number of filling rounds")->required();
    fib->add_option("-o,--output", out_path, "Write the extended complex here");
    fib->callback([&] { run = [&] { return cmd_fibrant(file, dim, stages, out_path); }; });

    EmitOptions emit_opts;
    auto* emit = app.add_subcommand("emit", "Write a standard complex as JSON");
    emit->add_option("kind", emit_opts.kind, "delta|boundary|horn|circle|cycle|product|wbar|w")->required();
    emit->add_option("files", emit_opts.files, "Factors for product");
    emit->add_option("--p", emit_opts.p, "Simplex dimension (delta, boundary, horn)");
    emit->add_option("--k", emit_opts.k, "Missing face of the horn");
    emit->add_option("--n", emit_opts.n, "Number of edges (cycle)");
    emit->add_option("--group", emit_opts.group, "zN, s3, AxB");
    emit->add_option("--max-dim", emit_opts.max_dim, "Truncation dimension (wbar, w)");
    emit->add_option("-o,--output", emit_opts.out, "Write here instead of stdout");
    emit->callback([&] { run = [&] { return cmd_emit(emit_opts); }; });

    auto* bundle = app.add_subcommand("bundle", "Principal bundles from twistings");
    bundle->require_subcommand(1);
    auto* bundle_check = bundle->add_subcommand("check", "Build and check the twisted product");
    bundle_check->add_option("base", file)->required();
    bundle_check->add_option("twist", file2)->required();
    bundle_check->callback([&] { run = [&] { return cmd_bundle_check(file, file2); }; });

    auto* cover = app.add_subcommand("cover", "Simplicial coverings");
    cover->require_subcommand(1);
    auto* cover_check = cover->add_subcommand("check", "Check that a map is an m-sheeted covering");
    cover_check->add_option("map", file)->required();
    cover_check->add_option("--sheets", sheets, "Expected fibre size")->required();
    cover_check->callback([&] { run = [&] { return cmd_cover_check(file, sheets); }; });

    auto* charclass = app.add_subcommand("charclass", "Characteristic class of a twisting");
    charclass->add_option("base", file)->required();
    charclass->add_option("twist", file2)->required();
    charclass->add_option("--cocycle", file3, "Group cocycle file")->required();
    charclass->callback([&] { run = [&] { return cmd_charclass(file, file2, file3); }; });

    std::string smooth_kind;
    auto* smooth_cmd = app.add_subcommand("smooth", "Grid checks of the smooth constructions");
    smooth_cmd->add_option("kind", smooth_kind, "mu|F|r|psi2|tame|extend")->required();
    smooth_cmd->add_option("--eps", eps, "Neighbourhood size epsilon_0");
    smooth_cmd->add_option("--grid", grid, "Grid resolution per side");
    smooth_cmd->callback([&] { run = [&] { return cmd_smooth(smooth_kind, eps, grid); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? success : input_error;
    }

    try {
        return run();
    } catch (const BudgetExceeded& e) {
        std::cout << "budget exceeded: " << e.what() << "\n";
        std::cout << "FAIL\n";
        return budget_error;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    }
}
