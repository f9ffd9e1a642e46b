// rephom: exact-arithmetic workbench for derived cotangent complexes and
// desk-scale representation-homology models.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "rephom/catalog.hpp"
#include "rephom/config.hpp"
#include "rephom/cotangent.hpp"
#include "rephom/emit.hpp"
#include "rephom/koszul.hpp"
#include "rephom/parallel.hpp"
#include "rephom/samplers.hpp"
#include "rephom/specseq.hpp"

namespace {

using namespace rephom;

struct CommonOpts {
    std::string space;
    std::string group = "GL2";
    std::string field = "q";
    std::string rep = "trivial";
    std::string format = "table";
    std::uint64_t seed = 1;
    int samples = 20;
    int cutoff = 6;
    long long budget = 20000;
    std::optional<int> smooth_dim;
};

void print_output(const std::string& format, const Json& json, const std::string& table,
                  const std::string& csv = "") {
    if (format == "json")
        std::cout << json.dump(2) << "\n";
    else if (format == "csv" && !csv.empty())
        std::cout << csv;
    else
        std::cout << table;
}

int generator_count(const SpaceModel& space) {
    if (std::holds_alternative<LensSpace>(space) || std::holds_alternative<CyclicGroupSpace>(space))
        return 1;
    return presentation_of(space).presentation.n_generators;
}

template <class F>
RepPoint<F> build_rep(const F& f, const AlgGroup& g, const SpaceModel& space,
                      const RepSpec& spec) {
    const int gens = generator_count(space);
    if (spec.kind == RepSpec::Kind::Trivial) {
        RepAssignment<F> assignment(static_cast<std::size_t>(gens), identity_element(f, g));
        return RepPoint<F>{g, std::move(assignment)};
    }
    if (spec.kind != RepSpec::Kind::Explicit)
        fail(ErrorCode::ConfigError,
             "certify handles samplers; cotangent needs trivial or explicit matrices");
    if (static_cast<int>(spec.matrices.size()) != gens)
        fail(ErrorCode::ConfigError, "representation assigns " +
                                         std::to_string(spec.matrices.size()) +
                                         " matrices, the space needs " + std::to_string(gens));
    if (g.factors.size() != 1)
        fail(ErrorCode::ConfigError, "explicit matrices target a single group factor");
    const int n = g.factors[0].n;
    RepAssignment<F> assignment;
    for (const auto& ms : spec.matrices) {
        std::vector<std::vector<typename F::Elem>> m(n, std::vector<typename F::Elem>(n, f.zero()));
        if (ms.diagonal) {
            if (static_cast<int>(ms.entries.size()) != n)
                fail(ErrorCode::ConfigError, "diag spec needs " + std::to_string(n) + " entries");
            for (int i = 0; i < n; ++i) m[i][i] = parse_scalar(f, ms.entries[i]);
        } else {
            if (static_cast<int>(ms.entries.size()) != n * n)
                fail(ErrorCode::ConfigError, "mat spec needs " + std::to_string(n * n) + " entries");
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] = parse_scalar(f, ms.entries[i * n + j]);
        }
        assignment.push_back(make_element(f, g, {m}));
    }
    return RepPoint<F>{g, std::move(assignment)};
}

int cmd_cotangent(const CommonOpts& opt) {
    auto space = parse_space(opt.space);
    auto group = parse_group(opt.group);
    auto field = parse_field(opt.field);
    auto spec = parse_rep(opt.rep);
    return std::visit(
        [&](const auto& f) {
            auto rho = build_rep(f, group, space, spec);
            auto rep = cotangent_homology(f, space, rho, opt.cutoff);
            print_output(opt.format, homology_json(rep), homology_table(rep));
            return 0;
        },
        field);
}

template <class F>
std::vector<Certificate> run_sampler(const F& f, const AlgGroup& group, const SpaceModel& space,
                                     const std::string& sampler, const CommonOpts& opt) {
    const auto n = static_cast<std::size_t>(opt.samples);
    std::vector<Certificate> certs(n);
    auto one = [&](std::size_t i) -> Certificate {
        RepPoint<F> rho{group, {}};
        if (const auto* s = std::get_if<Surface>(&space)) {
            if (sampler == "smooth" && s->genus == 2)
                rho = sample_genus2_irreducible(f, group, opt.seed, i);
            else
                rho = sample_surface_rep(f, group, s->genus, opt.seed, i);
        } else if (const auto* l = std::get_if<LinkComplement>(&space)) {
            rho = sample_link_rep(f, group, l->braid, opt.seed, i);
        } else if (sampler.rfind("torusknot:", 0) == 0) {
            int p = 0, q = 0;
            if (std::sscanf(sampler.c_str(), "torusknot:%d,%d", &p, &q) != 2 || p < 1 || q < 1)
                fail(ErrorCode::ConfigError, "torusknot sampler needs torusknot:p,q");
            rho = sample_torus_knot_rep(f, group, p, q, opt.seed, i);
        } else {
            fail(ErrorCode::ConfigError,
                 "no sampler for this space; pass --sampler or use explicit matrices");
        }
        return vanishing_certificate(f, space, rho, opt.smooth_dim, opt.cutoff);
    };
    parallel_for_index(n, [&](std::size_t i) { certs[i] = one(i); });
    return certs;
}

// Diagonal p-th-root certification for lens spaces and B Z_p: enumerates all
// exponent tuples up to permutation rather than sampling.
template <class F>
std::vector<Certificate> run_diagroot(const F& f, const AlgGroup& group, const SpaceModel& space,
                                      int p, const CommonOpts& opt) {
    if (group.factors.size() != 1 || group.factors[0].kind == AlgGroup::Kind::Torus)
        fail(ErrorCode::ConfigError, "diagroot certification targets one GL/SL factor");
    typename F::Elem zeta = f.zero();
    if constexpr (std::is_same_v<F, CyclotomicField>) {
        if (static_cast<int>(f.n()) % p != 0)
            fail(ErrorCode::ConfigError, "cyclotomic index must be a multiple of p");
        zeta = f.zeta(static_cast<long>(f.n()) / p);
    } else if constexpr (std::is_same_v<F, PrimeField>) {
        if (f.root_order() == 0 || f.root_order() % static_cast<std::uint32_t>(p) != 0)
            fail(ErrorCode::ConfigError,
                 "prime field needs a designated root of order divisible by p");
        zeta = f.pow(f.zeta(), f.root_order() / static_cast<std::uint32_t>(p));
    } else {
        if (p > 2) fail(ErrorCode::ConfigError, "Q has no p-th roots of unity beyond p = 2");
        zeta = f.from_long(-1);
    }
    const bool det_one = group.factors[0].kind == AlgGroup::Kind::SL;
    auto tuples = diagonal_root_exponents(p, group.factors[0].n, det_one);
    std::vector<Certificate> certs(tuples.size());
    parallel_for_index(tuples.size(), [&](std::size_t i) {
        auto rho = diagonal_root_rep(f, group, zeta, tuples[i]);
        certs[i] = vanishing_certificate(f, space, rho, opt.smooth_dim, opt.cutoff);
    });
    return certs;
}

int cmd_certify(const CommonOpts& opt, const std::string& sampler) {
    auto space = parse_space(opt.space);
    auto group = parse_group(opt.group);
    auto field = parse_field(opt.field);
    return std::visit(
        [&](const auto& f) {
            std::vector<Certificate> certs;
            if (sampler == "diagroot") {
                int p = 0;
                if (const auto* lens = std::get_if<LensSpace>(&space)) p = lens->p;
                if (const auto* bz = std::get_if<CyclicGroupSpace>(&space)) p = bz->p;
                if (p == 0) fail(ErrorCode::ConfigError, "diagroot applies to lens/bz spaces");
                certs = run_diagroot(f, group, space, p, opt);
            } else {
                certs = run_sampler(f, group, space, sampler, opt);
            }
            CertificateContext ctx{opt.space, opt.group, field_str(field), sampler, opt.seed};
            print_output(opt.format, certificate_batch_json(certs, ctx),
                         certificate_batch_table(certs, ctx));
            return 0;
        },
        field);
}

GradedDims parse_graded_dims(const std::string& text) {
    GradedDims h;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            fail(ErrorCode::ConfigError, "expected degree:dim in --h, got '" + item + "'");
        try {
            int deg = std::stoi(item.substr(0, colon));
            long long dim = std::stoll(item.substr(colon + 1));
            if (dim != 0) h[deg] += dim;
        } catch (const Error&) {
            throw;
        } catch (...) {
            fail(ErrorCode::ConfigError, "bad --h entry: '" + item + "'");
        }
    }
    return h;
}

int cmd_e2(const std::string& h_text, int p_max, int n_max, const std::string& format) {
    auto h = parse_graded_dims(h_text);
    auto page = e2_page(h, p_max, n_max);
    auto rep = degeneration_report(page);
    print_output(format, e2_json(page, rep), e2_table(page, rep), e2_csv(page));
    return 0;
}

int cmd_koszul(const std::string& model_spec, int cutoff, long long budget,
               const std::string& format) {
    KoszulModel model;
    if (model_spec.rfind("torus:", 0) == 0) {
        model = torus_model(parse_group(model_spec.substr(6)));
    } else if (model_spec.rfind("surface:", 0) == 0) {
        std::string body = model_spec.substr(8);
        auto colon = body.find(":g=");
        int genus = 1;
        std::string group = body;
        if (colon != std::string::npos) {
            group = body.substr(0, colon);
            genus = std::stoi(body.substr(colon + 3));
        }
        model = surface_model(parse_group(group), genus);
    } else {
        fail(ErrorCode::ConfigError,
             "koszul model must be torus:<group> or surface:<group>[:g=<g>]");
    }
    auto betti = truncated_homology(model, cutoff, budget);
    print_output(format, koszul_json(model, betti), koszul_table(model, betti), koszul_csv(betti));
    return 0;
}

int cmd_catalog(const std::string& bounds_space, const std::string& group_spec,
                const std::string& cpr_exponents, int cpr_r, int cutoff,
                const std::string& format) {
    if (!bounds_space.empty()) {
        auto space = parse_space(bounds_space);
        auto group = parse_group(group_spec);
        auto bounds = global_bounds(space, group);
        print_output(format, bounds_json(bounds, bounds_space, group_spec),
                     bounds_markdown(bounds, bounds_space, group_spec));
        return 0;
    }
    if (cpr_r > 0) {
        std::vector<int> exponents;
        if (cpr_exponents == "auto") {
            auto data = group_data(parse_group(group_spec));
            if (!data.exponents)
                fail(ErrorCode::ConfigError,
                     "group has no standard exponent convention; pass --exponents explicitly");
            exponents = *data.exponents;
        } else if (!cpr_exponents.empty()) {
            std::istringstream in(cpr_exponents);
            std::string tok;
            while (std::getline(in, tok, ',')) exponents.push_back(std::stoi(tok));
        }
        auto series = cpr_char_homology(exponents, cpr_r, cutoff);
        print_output(format, poincare_json(series), poincare_table(series));
        return 0;
    }
    fail(ErrorCode::ConfigError, "catalog needs --bounds or --cpr-r");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rephom: exact cotangent-complex and representation-homology workbench"};
    app.set_config("--config", "", "TOML config file (flags take precedence)");
    app.require_subcommand(1);

    CommonOpts opt;
    std::string sampler = "auto";
    std::string h_text;
    int p_max = 6, n_max = 12;
    std::string koszul_model;
    std::string bounds_space, cpr_exponents = "auto";
    int cpr_r = 0;
    int smooth_dim_arg = -1;

    auto add_common = [&](CLI::App* cmd, bool with_rep) {
        cmd->add_option("--space", opt.space, "space spec, e.g. surface:g=2, lens:p=5,q=1 2");
        cmd->add_option("--group", opt.group, "group spec: GL2, SL3, T^2, GL2xT^1");
        cmd->add_option("--field", opt.field, "q | fq:<q>[:n=<N>[,zeta=<z>]] | cyclotomic:<N>");
        if (with_rep)
            cmd->add_option("--rep", opt.rep, "trivial | diag:... | mat:... (';' per generator)");
        cmd->add_option("--cutoff", opt.cutoff, "homological cutoff for bz spaces");
        cmd->add_option("--format", opt.format, "table | json | csv");
    };

    auto* cot = app.add_subcommand("cotangent", "homology of the derived cotangent complex");
    add_common(cot, true);

    auto* cert =
        app.add_subcommand("certify", "vanishing certificates over sampled representations");
    add_common(cert, false);
    cert->add_option("--sampler", sampler, "auto | smooth | diagroot | torusknot:p,q");
    cert->add_option("--samples", opt.samples, "sample count");
    cert->add_option("--seed", opt.seed, "RNG seed");
    cert->add_option("--smooth-dim", smooth_dim_arg, "declared local dimension for the smooth flag");

    auto* e2 = app.add_subcommand("e2", "E2 page from cotangent homology dims");
    e2->set_help_flag("--help", "print help"); // frees --h for the dims option
    e2->add_option("--h", h_text, "dims as degree:dim,... e.g. 0:2,2:2")->required();
    e2->add_option("--pmax", p_max, "max weight");
    e2->add_option("--nmax", n_max, "max total degree");
    e2->add_option("--format", opt.format, "table | json | csv");

    auto* kos = app.add_subcommand("koszul", "truncated homology of Koszul models");
    kos->add_option("--model", koszul_model, "torus:<group> | surface:<group>[:g=<g>]")->required();
    kos->add_option("--cutoff", opt.cutoff, "max internal degree");
    kos->add_option("--budget", opt.budget, "max graded-piece dimension");
    kos->add_option("--format", opt.format, "table | json | csv");

    auto* cat = app.add_subcommand("catalog", "closed forms and global bounds");
    cat->add_option("--bounds", bounds_space, "space spec for vanishing bounds");
    cat->add_option("--group", opt.group, "group spec");
    cat->add_option("--exponents", cpr_exponents, "comma list or 'auto'");
    cat->add_option("--cpr-r", cpr_r, "CP^r parameter for the character-homology series");
    cat->add_option("--cutoff", opt.cutoff, "series cutoff");
    cat->add_option("--format", opt.format, "table | json | markdown");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << rephom::error_json("config_error", e.what()).dump() << "\n";
        return 2;
    }

    try {
        if (smooth_dim_arg >= 0) opt.smooth_dim = smooth_dim_arg;
        if (cot->parsed()) return cmd_cotangent(opt);
        if (cert->parsed()) return cmd_certify(opt, sampler);
        if (e2->parsed()) return cmd_e2(h_text, p_max, n_max, opt.format);
        if (kos->parsed()) return cmd_koszul(koszul_model, opt.cutoff, opt.budget, opt.format);
        if (cat->parsed())
            return cmd_catalog(bounds_space, opt.group, cpr_exponents, cpr_r, opt.cutoff,
                               opt.format);
    } catch (const rephom::Error& e) {
        std::cerr << rephom::error_json(rephom::error_code_name(e.code()), e.what()).dump() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << rephom::error_json("config_error", e.what()).dump() << "\n";
        return 2;
    }
    return 0;
}
