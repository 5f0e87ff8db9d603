// Command-line front end: every verification and search in the library as a
// subcommand with deterministic text output and an optional JSONL mode.
// Exit codes: 0 success/verified, 1 verification or runtime failure, 2 usage.

#include "CLI11.hpp"

#ifdef PTELAB_HAVE_OPENMP
#include <omp.h>
#endif

#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ptelab/cartan.hpp"
#include "ptelab/grassmann.hpp"
#include "ptelab/matrix_model.hpp"
#include "ptelab/partition.hpp"
#include "ptelab/pte.hpp"
#include "ptelab/report.hpp"
#include "ptelab/separation.hpp"
#include "ptelab/symfunc.hpp"
#include "ptelab/weights.hpp"

namespace {

using namespace ptelab;

struct GlobalConfig {
    std::string format = "text";
    int workers = 0;  // 0 keeps the runtime default
    std::uint64_t max_candidates = 50'000'000;
    int time_budget = 0;
    int p_bound = matmodel::kDefaultCasimirBound;
};

std::vector<std::int64_t> parse_i64_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw CLI::ValidationError("empty entry in integer list");
        std::size_t pos = 0;
        out.push_back(std::stoll(tok, &pos));
        if (pos != tok.size())
            throw CLI::ValidationError("bad integer entry '" + tok + "'");
    }
    if (out.empty()) throw CLI::ValidationError("empty integer list");
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (auto v : parse_i64_list(text)) out.push_back(static_cast<int>(v));
    return out;
}

Partition parse_partition_arg(const std::string& text) {
    if (text == "[]" || text.empty()) return Partition();
    return Partition::parse(text);
}

// Shared emitters so text and machine-readable outputs stay in lockstep.
void emit_report(const GlobalConfig& cfg, const CheckReport& rep) {
    if (cfg.format == "jsonl")
        std::cout << to_jsonl(rep);
    else
        std::cout << to_text(rep);
}

void emit_solutions(const GlobalConfig& cfg, const std::vector<pte::PteSolution>& sols) {
    for (const auto& s : sols) {
        if (cfg.format == "jsonl")
            std::cout << pte::solution_to_json(s) << '\n';
        else
            std::cout << pte::solution_to_text(s) << '\n';
    }
}

void emit_line(const GlobalConfig& cfg, const std::string& name, const std::string& params,
               bool pass, const std::string& detail) {
    CheckReport rep;
    rep.add(name, params, pass, detail);
    emit_report(cfg, rep);
}

int run_cli(int argc, char** argv) {
    GlobalConfig cfg;
    CLI::App app{"exact toolkit for power-sum separation and equal-power-sum search"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "jsonl"}))
        ->capture_default_str();
    app.add_option("--workers", cfg.workers, "worker threads (0 = runtime default)")
        ->envname("PTELAB_WORKERS");
    app.add_option("--max-candidates", cfg.max_candidates, "search candidate budget")
        ->capture_default_str();
    app.add_option("--time-budget", cfg.time_budget, "search time budget in seconds (0 = off)")
        ->capture_default_str();
    app.add_option("--p-bound", cfg.p_bound, "largest allowed casimir degree")
        ->capture_default_str();

    // The selected action runs after parsing; exit code by return value.
    std::function<int()> action;

    // ---- pte ----------------------------------------------------------
    auto* pte_cmd = app.add_subcommand("pte", "equal-power-sum solutions");
    pte_cmd->require_subcommand(1);
    {
        auto* verify_cmd = pte_cmd->add_subcommand("verify", "check a claimed solution");
        auto x_s = std::make_shared<std::string>();
        auto y_s = std::make_shared<std::string>();
        auto deg = std::make_shared<int>(1);
        verify_cmd->add_option("--x", *x_s, "first list, comma-separated")->required();
        verify_cmd->add_option("--y", *y_s, "second list, comma-separated")->required();
        verify_cmd->add_option("--degree", *deg, "degree to verify")->required();
        verify_cmd->callback([&cfg, x_s, y_s, deg, &action] {
            action = [&cfg, x_s, y_s, deg] {
                auto res = pte::verify(parse_i64_list(*x_s), parse_i64_list(*y_s), *deg);
                std::ostringstream detail;
                if (res.ok) detail << "verified, ";
                if (res.trivial)
                    detail << "trivial";
                else
                    detail << "max_degree=" << res.max_degree;
                std::ostringstream params;
                params << "x=" << *x_s << ",y=" << *y_s << ",degree=" << *deg;
                emit_line(cfg, "pte_verify", params.str(), res.ok, detail.str());
                return res.ok ? 0 : 1;
            };
        });

        auto* brute_cmd = pte_cmd->add_subcommand("brute", "exhaustive canonical search");
        auto size = std::make_shared<int>(2);
        auto bdeg = std::make_shared<int>(1);
        auto bound = std::make_shared<int>(3);
        auto serial = std::make_shared<bool>(false);
        brute_cmd->add_option("--size", *size, "list size")->required();
        brute_cmd->add_option("--degree", *bdeg, "degree")->required();
        brute_cmd->add_option("--bound", *bound, "entry bound")->required();
        brute_cmd->add_flag("--serial", *serial, "use the serial reference kernel");
        brute_cmd->callback([&cfg, size, bdeg, bound, serial, &action] {
            action = [&cfg, size, bdeg, bound, serial] {
                pte::SearchOptions opts;
                opts.max_candidates = cfg.max_candidates;
                opts.time_budget_seconds = cfg.time_budget;
                auto sols = *serial ? pte::brute_search_serial(*size, *bdeg, *bound, opts)
                                    : pte::brute_search(*size, *bdeg, *bound, opts);
                emit_solutions(cfg, sols);
                std::ostringstream params;
                params << "size=" << *size << ",degree=" << *bdeg << ",bound=" << *bound;
                std::ostringstream detail;
                detail << sols.size() << " solution classes";
                emit_line(cfg, "pte_brute", params.str(), true, detail.str());
                return 0;
            };
        });

        auto* ideal_cmd = pte_cmd->add_subcommand("ideal", "constructive ideal search");
        auto kk = std::make_shared<int>(2);
        auto nub = std::make_shared<std::int64_t>(2);
        auto ckpt = std::make_shared<std::string>();
        ideal_cmd->add_option("--k", *kk, "solution size (degree k-1)")->required();
        ideal_cmd->add_option("--bound", *nub, "weight coefficient bound")->required();
        ideal_cmd->add_option("--checkpoint", *ckpt, "resumable checkpoint file");
        ideal_cmd->callback([&cfg, kk, nub, ckpt, &action] {
            action = [&cfg, kk, nub, ckpt] {
                pte::IdealSearchOptions opts;
                opts.search.max_candidates = cfg.max_candidates;
                opts.search.time_budget_seconds = cfg.time_budget;
                opts.checkpoint_path = *ckpt;
                auto res = pte::ideal_search(*kk, *nub, opts);
                emit_solutions(cfg, res.solutions);
                std::ostringstream params;
                params << "k=" << *kk << ",bound=" << *nub;
                std::ostringstream detail;
                detail << res.solutions.size() << " ideal classes, "
                       << res.weights_scanned << " weights, " << res.collisions_found
                       << " collisions" << (res.resumed ? ", resumed" : "");
                bool pass = !res.solutions.empty();
                emit_line(cfg, "pte_ideal", params.str(), pass, detail.str());
                return pass ? 0 : 1;
            };
        });

        auto* fw_cmd = pte_cmd->add_subcommand("from-weights", "extract from a collision");
        auto fn = std::make_shared<int>(4);
        auto fk = std::make_shared<int>(2);
        auto fnu = std::make_shared<std::string>();
        auto fi = std::make_shared<std::string>();
        auto fj = std::make_shared<std::string>();
        fw_cmd->add_option("--n", *fn, "rank")->required();
        fw_cmd->add_option("--k", *fk, "subset size")->required();
        fw_cmd->add_option("--nu", *fnu, "weight coefficients a1,a2,...")->required();
        fw_cmd->add_option("--i", *fi, "first index set")->required();
        fw_cmd->add_option("--j", *fj, "second index set")->required();
        fw_cmd->callback([&cfg, fn, fk, fnu, fi, fj, &action] {
            action = [&cfg, fn, fk, fnu, fi, fj] {
                weights::FundWeight nu(*fn, parse_i64_list(*fnu));
                weights::IndexSet I(*fn, parse_int_list(*fi));
                weights::IndexSet J(*fn, parse_int_list(*fj));
                auto ex = pte::extract_from_collision(*fn, *fk, nu, I, J);
                pte::PteSolution sol;
                auto canon = pte::canonical_form(ex.x, ex.y);
                sol.x = canon.first;
                sol.y = canon.second;
                sol.degree = ex.guaranteed_degree;
                auto ver = pte::verify(ex.x, ex.y, ex.guaranteed_degree);
                sol.max_degree = ver.max_degree;
                sol.ideal = sol.max_degree == sol.size() - 1;
                pte::WeightProvenance prov;
                prov.nu = nu.coeffs();
                prov.I = I.elems();
                prov.J = J.elems();
                sol.provenance = std::move(prov);
                emit_solutions(cfg, {sol});
                std::ostringstream params;
                params << "n=" << *fn << ",k=" << *fk << ",nu=" << *fnu << ",I=" << *fi
                       << ",J=" << *fj;
                std::ostringstream detail;
                detail << "r=" << ex.r << ", guaranteed_degree=" << ex.guaranteed_degree;
                emit_line(cfg, "pte_from_weights", params.str(), true, detail.str());
                return 0;
            };
        });
    }

    // ---- char ---------------------------------------------------------
    auto* char_cmd = app.add_subcommand("char", "central characters");
    char_cmd->require_subcommand(1);
    {
        auto* eq = char_cmd->add_subcommand("equal", "compare central characters");
        auto p_s = std::make_shared<std::string>();
        auto q_s = std::make_shared<std::string>();
        eq->add_option("--p", *p_s, "first pattern f=[...] or comma list")->required();
        eq->add_option("--q", *q_s, "second pattern")->required();
        eq->callback([&cfg, p_s, q_s, &action] {
            action = [&cfg, p_s, q_s] {
                auto p = weights::YoungPattern::parse(*p_s);
                auto q = weights::YoungPattern::parse(*q_s);
                bool equal = weights::char_equal(p, q);
                std::ostringstream params;
                params << p.to_string() << " vs " << q.to_string();
                emit_line(cfg, "char_equal", params.str(), equal,
                          equal ? "characters equal" : "characters differ");
                return equal ? 0 : 1;
            };
        });
    }

    // ---- weights ------------------------------------------------------
    auto* weights_cmd = app.add_subcommand("weights", "pattern functionals");
    weights_cmd->require_subcommand(1);
    {
        auto* sfun = weights_cmd->add_subcommand("sfun", "power-sum functional values");
        auto pat = std::make_shared<std::string>();
        auto upto = std::make_shared<int>(2);
        sfun->add_option("--pattern", *pat, "pattern f=[...] or comma list")->required();
        sfun->add_option("--upto", *upto, "largest functional degree")->capture_default_str();
        sfun->callback([&cfg, pat, upto, &action] {
            action = [&cfg, pat, upto] {
                auto p = weights::YoungPattern::parse(*pat);
                if (*upto < 1) throw CLI::ValidationError("--upto must be >= 1");
                std::ostringstream detail;
                for (int t = 1; t <= *upto; ++t) {
                    if (t > 1) detail << ' ';
                    detail << 'S' << t << '=' << rat_str(weights::s_functional(p, t));
                }
                emit_line(cfg, "weights_sfun", p.to_string(), true, detail.str());
                return 0;
            };
        });
    }

    // ---- schur / lr ---------------------------------------------------
    {
        auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial");
        auto lam = std::make_shared<std::string>();
        auto nvars = std::make_shared<int>(2);
        auto alternant = std::make_shared<bool>(false);
        schur_cmd->add_option("--lambda", *lam, "partition, comma list")->required();
        schur_cmd->add_option("--nvars", *nvars, "variable count")->required();
        schur_cmd->add_flag("--alternant", *alternant, "use the alternant route");
        schur_cmd->callback([&cfg, lam, nvars, alternant, &action] {
            action = [&cfg, lam, nvars, alternant] {
                Partition p = parse_partition_arg(*lam);
                auto poly = *alternant ? symfunc::schur_alternant(p, *nvars)
                                       : symfunc::schur_jacobi_trudi(p, *nvars);
                std::ostringstream params;
                params << "lambda=" << p.to_string() << ",nvars=" << *nvars;
                emit_line(cfg, "schur", params.str(), true, poly.to_string());
                return 0;
            };
        });

        auto* lr_cmd = app.add_subcommand("lr", "Schur product expansion");
        auto mu = std::make_shared<std::string>();
        auto nu = std::make_shared<std::string>();
        lr_cmd->add_option("--mu", *mu, "first partition")->required();
        lr_cmd->add_option("--nu", *nu, "second partition")->required();
        lr_cmd->callback([&cfg, mu, nu, &action] {
            action = [&cfg, mu, nu] {
                auto exp = symfunc::lr_expand(parse_partition_arg(*mu),
                                              parse_partition_arg(*nu));
                std::ostringstream detail;
                bool first = true;
                for (const auto& [lam, c] : exp) {
                    if (!first) detail << " + ";
                    first = false;
                    if (c != 1) detail << int_str(c) << '*';
                    detail << 's' << lam.to_string();
                }
                if (first) detail << '0';
                std::ostringstream params;
                params << "mu=" << *mu << ",nu=" << *nu;
                emit_line(cfg, "lr_expand", params.str(), true, detail.str());
                return 0;
            };
        });
    }

    // ---- grassmann ----------------------------------------------------
    auto* gr_cmd = app.add_subcommand("grassmann", "box-truncated Schur ring");
    gr_cmd->require_subcommand(1);
    {
        auto* mul_cmd = gr_cmd->add_subcommand("mul", "multiply two classes");
        auto gk = std::make_shared<int>(2);
        auto gn = std::make_shared<int>(4);
        auto a_s = std::make_shared<std::string>();
        auto b_s = std::make_shared<std::string>();
        mul_cmd->add_option("--k", *gk)->required();
        mul_cmd->add_option("--n", *gn)->required();
        mul_cmd->add_option("--a", *a_s, "first partition")->required();
        mul_cmd->add_option("--b", *b_s, "second partition")->required();
        mul_cmd->callback([&cfg, gk, gn, a_s, b_s, &action] {
            action = [&cfg, gk, gn, a_s, b_s] {
                auto prod = grassmann::mul(
                    grassmann::GrassElement::schubert(*gk, *gn, parse_partition_arg(*a_s)),
                    grassmann::GrassElement::schubert(*gk, *gn, parse_partition_arg(*b_s)));
                std::ostringstream params;
                params << "k=" << *gk << ",n=" << *gn << ",a=" << *a_s << ",b=" << *b_s;
                emit_line(cfg, "grassmann_mul", params.str(), true, prod.to_string());
                return 0;
            };
        });

        auto* rel_cmd = gr_cmd->add_subcommand("relations", "relation polynomials");
        auto rk = std::make_shared<int>(2);
        auto rn = std::make_shared<int>(4);
        auto rs = std::make_shared<int>(0);
        auto runsigned = std::make_shared<bool>(false);
        rel_cmd->add_option("--k", *rk)->required();
        rel_cmd->add_option("--n", *rn)->required();
        rel_cmd->add_option("--s", *rs, "single relation index (default: all)");
        rel_cmd->add_flag("--unsigned", *runsigned, "use the unsigned variant");
        rel_cmd->callback([&cfg, rk, rn, rs, runsigned, &action] {
            action = [&cfg, rk, rn, rs, runsigned] {
                CheckReport rep;
                int lo = *rs > 0 ? *rs : 1;
                int hi = *rs > 0 ? *rs : *rk;
                for (int s = lo; s <= hi; ++s) {
                    auto f = grassmann::relation_f(s, *rk, *rn, !*runsigned);
                    auto image = grassmann::reduce_w_poly(f, *rk, *rn);
                    std::ostringstream name, params, detail;
                    name << "relation_s" << s;
                    params << "k=" << *rk << ",n=" << *rn
                           << (*runsigned ? ",unsigned" : ",signed");
                    detail << f.to_string() << " -> " << image.to_string();
                    rep.add(name.str(), params.str(), image.is_zero(), detail.str());
                }
                emit_report(cfg, rep);
                return rep.all_pass() ? 0 : 1;
            };
        });

        auto* ver_cmd = gr_cmd->add_subcommand("verify", "presentation report");
        auto vk = std::make_shared<int>(2);
        auto vn = std::make_shared<int>(4);
        ver_cmd->add_option("--k", *vk)->required();
        ver_cmd->add_option("--n", *vn)->required();
        ver_cmd->callback([&cfg, vk, vn, &action] {
            action = [&cfg, vk, vn] {
                auto rep = grassmann::verify_presentation(*vk, *vn);
                emit_report(cfg, rep.checks);
                return rep.pass() ? 0 : 1;
            };
        });
    }

    // ---- cartan -------------------------------------------------------
    auto* ca_cmd = app.add_subcommand("cartan", "diagonal restriction checks");
    ca_cmd->require_subcommand(1);
    {
        auto* ver_cmd = ca_cmd->add_subcommand("verify", "free-basis report");
        auto vk = std::make_shared<int>(1);
        auto vn = std::make_shared<int>(2);
        auto vb = std::make_shared<int>(4);
        ver_cmd->add_option("--k", *vk)->required();
        ver_cmd->add_option("--n", *vn)->required();
        ver_cmd->add_option("--bound", *vb, "degree bound")->capture_default_str();
        ver_cmd->callback([&cfg, vk, vn, vb, &action] {
            action = [&cfg, vk, vn, vb] {
                auto rep = cartan::verify_free_basis(*vk, *vn, *vb);
                emit_report(cfg, rep);
                return rep.all_pass() ? 0 : 1;
            };
        });
    }

    // ---- separation ---------------------------------------------------
    auto* sep_cmd = app.add_subcommand("separation", "constituent separation");
    sep_cmd->require_subcommand(1);
    {
        auto* dec = sep_cmd->add_subcommand("decompose", "tensor constituents");
        auto dn = std::make_shared<int>(4);
        auto dk = std::make_shared<int>(2);
        auto dnu = std::make_shared<std::string>();
        dec->add_option("--n", *dn)->required();
        dec->add_option("--k", *dk)->required();
        dec->add_option("--nu", *dnu, "weight coefficients")->required();
        dec->callback([&cfg, dn, dk, dnu, &action] {
            action = [&cfg, dn, dk, dnu] {
                weights::FundWeight nu(*dn, parse_i64_list(*dnu));
                auto cons = separation::tensor_decompose(*dn, *dk, nu);
                CheckReport rep;
                Int total(0);
                for (const auto& c : cons) {
                    std::ostringstream name, detail;
                    name << "constituent_" << c.I.to_string();
                    detail << c.pattern.to_string() << " dim=" << int_str(c.dim);
                    rep.add(name.str(), "nu=" + *dnu, true, detail.str());
                    total += c.dim;
                }
                std::ostringstream summary;
                summary << cons.size() << " constituents, total dim " << int_str(total);
                rep.add("decomposition", "n=" + std::to_string(*dn) +
                                             ",k=" + std::to_string(*dk) + ",nu=" + *dnu,
                        true, summary.str());
                emit_report(cfg, rep);
                return 0;
            };
        });

        auto* t0_cmd = sep_cmd->add_subcommand("t0", "separation index");
        auto tn = std::make_shared<int>(4);
        auto tk = std::make_shared<int>(2);
        auto tnu = std::make_shared<std::string>();
        t0_cmd->add_option("--n", *tn)->required();
        t0_cmd->add_option("--k", *tk)->required();
        t0_cmd->add_option("--nu", *tnu, "weight coefficients")->required();
        t0_cmd->callback([&cfg, tn, tk, tnu, &action] {
            action = [&cfg, tn, tk, tnu] {
                weights::FundWeight nu(*tn, parse_i64_list(*tnu));
                int t0 = separation::separation_index(*tn, *tk, nu);
                std::ostringstream params, detail;
                params << "n=" << *tn << ",k=" << *tk << ",nu=" << *tnu;
                detail << "t0=" << t0;
                emit_line(cfg, "separation_index", params.str(), true, detail.str());
                return 0;
            };
        });

        auto* col = sep_cmd->add_subcommand("collisions", "functional collisions");
        auto cn = std::make_shared<int>(4);
        auto ck = std::make_shared<int>(2);
        auto cnu = std::make_shared<std::string>();
        auto cd = std::make_shared<int>(2);
        col->add_option("--n", *cn)->required();
        col->add_option("--k", *ck)->required();
        col->add_option("--nu", *cnu, "weight coefficients")->required();
        col->add_option("--depth", *cd, "functional depth")->capture_default_str();
        col->callback([&cfg, cn, ck, cnu, cd, &action] {
            action = [&cfg, cn, ck, cnu, cd] {
                weights::FundWeight nu(*cn, parse_i64_list(*cnu));
                auto cols = separation::find_collisions(*cn, *ck, nu, *cd);
                std::ostringstream params;
                params << "n=" << *cn << ",k=" << *ck << ",nu=" << *cnu
                       << ",depth=" << *cd;
                CheckReport rep;
                for (const auto& c : cols) {
                    std::ostringstream name, detail;
                    name << "collision_" << c.I.to_string() << '_' << c.J.to_string();
                    detail << "shared=(";
                    for (std::size_t i = 0; i < c.shared.size(); ++i) {
                        if (i) detail << ',';
                        detail << rat_str(c.shared[i]);
                    }
                    detail << ')';
                    rep.add(name.str(), params.str(), true, detail.str());
                }
                std::ostringstream summary;
                summary << cols.size() << " collisions";
                rep.add("collision_scan", params.str(), true, summary.str());
                emit_report(cfg, rep);
                return 0;
            };
        });
    }

    // ---- matrix -------------------------------------------------------
    auto* mat_cmd = app.add_subcommand("matrix", "explicit matrix model");
    mat_cmd->require_subcommand(1);
    {
        auto* cas = mat_cmd->add_subcommand("casimir", "casimir matrix of a wedge rep");
        auto mn = std::make_shared<int>(2);
        auto mk = std::make_shared<int>(1);
        auto mp = std::make_shared<int>(2);
        cas->add_option("--n", *mn)->required();
        cas->add_option("--k", *mk)->required();
        cas->add_option("--p", *mp)->capture_default_str();
        cas->callback([&cfg, mn, mk, mp, &action] {
            action = [&cfg, mn, mk, mp] {
                auto rep = matmodel::fundamental_rep(*mn, *mk);
                auto c = matmodel::casimir(rep, *mp, cfg.p_bound);
                std::ostringstream params, detail;
                params << "n=" << *mn << ",k=" << *mk << ",p=" << *mp;
                auto scalar = c.as_scalar();
                if (scalar)
                    detail << "scalar " << rat_str(*scalar);
                else
                    detail << "non-scalar " << c.rows() << 'x' << c.cols();
                emit_line(cfg, "matrix_casimir", params.str(), true, detail.str());
                if (cfg.format == "text" && !scalar) std::cout << c.to_string();
                return 0;
            };
        });

        auto* kos = mat_cmd->add_subcommand("kostant", "difference matrix on a tensor");
        auto kn = std::make_shared<int>(2);
        auto kk = std::make_shared<int>(1);
        auto kj = std::make_shared<int>(1);
        auto kp = std::make_shared<int>(2);
        kos->add_option("--n", *kn)->required();
        kos->add_option("--k", *kk)->required();
        kos->add_option("--j", *kj)->required();
        kos->add_option("--p", *kp)->capture_default_str();
        kos->callback([&cfg, kn, kk, kj, kp, &action] {
            action = [&cfg, kn, kk, kj, kp] {
                auto a = matmodel::fundamental_rep(*kn, *kk);
                auto b = matmodel::fundamental_rep(*kn, *kj);
                auto m = matmodel::kostant_matrix(a, b, *kp, cfg.p_bound);
                std::ostringstream params, detail;
                params << "n=" << *kn << ",k=" << *kk << ",j=" << *kj << ",p=" << *kp;
                detail << m.rows() << 'x' << m.cols() << " matrix";
                emit_line(cfg, "matrix_kostant", params.str(), true, detail.str());
                if (cfg.format == "text") std::cout << m.to_string();
                return 0;
            };
        });

        auto* spec = mat_cmd->add_subcommand("spectrum", "certified spectrum report");
        auto sn = std::make_shared<int>(4);
        auto sk = std::make_shared<int>(2);
        auto sj = std::make_shared<int>(1);
        auto sp = std::make_shared<int>(2);
        spec->add_option("--n", *sn)->required();
        spec->add_option("--k", *sk)->required();
        spec->add_option("--j", *sj)->required();
        spec->add_option("--p", *sp)->capture_default_str();
        spec->callback([&cfg, sn, sk, sj, sp, &action] {
            action = [&cfg, sn, sk, sj, sp] {
                auto rep = matmodel::spectrum_verify(*sn, *sk, *sj, *sp);
                emit_report(cfg, rep.to_checks());
                return rep.pass() ? 0 : 1;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage problems (including --help) funnel through CLI11's printer.
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

#ifdef PTELAB_HAVE_OPENMP
    if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
#endif

    if (!action) {
        std::cerr << "no action selected\n";
        return 2;
    }
    return action();
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
