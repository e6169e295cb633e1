#include "loopqkz/fpl.hpp"
#include "loopqkz/ground_state.hpp"
#include "loopqkz/link_pattern.hpp"
#include "loopqkz/qkz.hpp"
#include "loopqkz/reproduction.hpp"
#include "loopqkz/serialize.hpp"
#include "loopqkz/sum_rules.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace loopqkz;
using nlohmann::json;

namespace {

/// Raised for arguments that parse but make no sense; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

// Largest sizes the symbolic constructions handle on a desk machine.
constexpr int kMaxPatternSize = 12;
constexpr int kMaxGroundStateSize = 9;
constexpr int kMaxSolutionSize = 5;
constexpr int kMaxSumRuleSize = 6;
constexpr int kMaxSymbolicChar = 6;
constexpr int kMaxFplSize = 15;

void require_range(const char* what, int value, int lo, int hi)
{
    if (value < lo || value > hi)
        throw UsageError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

/// Writes to --out when given, else to stdout.
void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << text;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json pattern_list(const PatternBasis& b)
{
    auto a = json::array();
    for (const auto& p : b.patterns()) a.push_back(p.encoding());
    return a;
}

template <class C>
json components_json(const QkzSolution<C>& sol)
{
    std::vector<std::string> rendered;
    for (const auto& c : sol.components) rendered.push_back(to_string(c));
    return loop_vector_json(sol.basis, rendered);
}

struct Common {
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* app, Common& c)
{
    app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--out", c.out, "output file (stdout when omitted)");
}

std::vector<FplConfig> read_fpls(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::vector<FplConfig> out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(fpl_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw UsageError(std::string("malformed line in ") + path + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("malformed line in ") + path + ": " + e.what());
        }
    }
    if (out.empty()) throw UsageError(path + " holds no configurations");
    for (const auto& c : out)
        if (c.n != out.front().n) throw UsageError(path + " mixes grid sizes");
    return out;
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact loop-model computations: link patterns, qKZ solutions, sum rules and FPL enumeration"};
    app.require_subcommand(1);
    std::function<int()> action;

    Common pc;
    int p_size = 0;
    auto* patterns = app.add_subcommand("patterns", "link patterns of size L in canonical order");
    patterns->add_option("--size", p_size, "L")->required();
    add_common(patterns, pc);
    patterns->callback([&] {
        action = [&] {
            require_range("--size", p_size, 1, kMaxPatternSize);
            const PatternBasis b(p_size);
            if (pc.format == "csv") {
                std::ostringstream s;
                s << "index,encoding\n";
                for (std::size_t k = 0; k < b.dimension(); ++k) s << k << ',' << b.pattern(k).encoding() << '\n';
                emit(s.str(), pc.out);
            } else {
                emit(dump({{"L", p_size}, {"dimension", b.dimension()}, {"patterns", pattern_list(b)}}), pc.out);
            }
            return kOk;
        };
    });

    Common hc;
    int h_size = 0;
    auto* ham = app.add_subcommand("hamiltonian", "Hamiltonian over Q[a] in the canonical basis");
    ham->add_option("--size", h_size, "L")->required();
    add_common(ham, hc);
    ham->callback([&] {
        action = [&] {
            require_range("--size", h_size, 1, kMaxGroundStateSize);
            const auto H = hamiltonian(h_size);
            const PatternBasis b(h_size);
            if (hc.format == "csv") {
                std::ostringstream s;
                s << "row,column,entry\n";
                for (Eigen::Index r = 0; r < H.rows(); ++r)
                    for (Eigen::Index c = 0; c < H.cols(); ++c)
                        if (H(r, c) != APolynomial()) s << r << ',' << c << ',' << H(r, c).str("a") << '\n';
                emit(s.str(), hc.out);
            } else {
                json rows = json::array();
                for (Eigen::Index r = 0; r < H.rows(); ++r) {
                    json row = json::array();
                    for (Eigen::Index c = 0; c < H.cols(); ++c) row.push_back(H(r, c).str("a"));
                    rows.push_back(std::move(row));
                }
                emit(dump({{"L", h_size}, {"basis", pattern_list(b)}, {"matrix", rows}}), hc.out);
            }
            return kOk;
        };
    });

    Common gc;
    int g_size = 0;
    auto* gs_cmd = app.add_subcommand("groundstate", "exact ground state over Q[a], normalised and verified");
    gs_cmd->add_option("--size", g_size, "L")->required();
    add_common(gs_cmd, gc);
    gs_cmd->callback([&] {
        action = [&] {
            require_range("--size", g_size, 1, kMaxGroundStateSize);
            const auto gs = ground_state(g_size);
            const Report r = verify_ground_state(gs);
            const auto ones = gs.at(1);
            if (gc.format == "csv") {
                std::ostringstream s;
                s << "encoding,component,at_a_1\n";
                for (std::size_t k = 0; k < gs.components.size(); ++k)
                    s << gs.basis.pattern(k).encoding() << ',' << gs.components[k].str("a") << ','
                      << to_string(ones[k]) << '\n';
                emit(s.str(), gc.out);
            } else {
                std::vector<std::string> rendered;
                for (const auto& c : gs.components) rendered.push_back(c.str("a"));
                const json comps = loop_vector_json(gs.basis, rendered);
                emit(dump({{"L", g_size},
                           {"components", comps},
                           {"sum", a_polynomial_sum(gs).str("a")},
                           {"status", r.ok() ? "PASS" : "FAIL"},
                           {"checks", to_json(r)}}),
                     gc.out);
            }
            return r.ok() ? kOk : kFailed;
        };
    });

    Common qc;
    int q_size = 0;
    std::string q_field = "generic";
    auto* qkz = app.add_subcommand("qkz", "polynomial qKZ solutions");
    qkz->require_subcommand(1);
    auto* qbuild = qkz->add_subcommand("build", "construct the solution and print its components");
    auto* qverify = qkz->add_subcommand("verify", "check every equation and structural property exactly");
    for (auto* sub : {qbuild, qverify}) {
        sub->add_option("--size", q_size, "L")->required();
        sub->add_option("--field", q_field, "generic (u, zeta symbolic) or stochastic (q a cube root of unity)")
            ->check(CLI::IsMember({"generic", "stochastic"}));
        sub->add_option("--out", qc.out, "output file (stdout when omitted)");
    }
    auto qkz_action = [&](bool verify) {
        return [&, verify] {
            require_range("--size", q_size, 1, kMaxSolutionSize);
            auto body = [&](const auto& sol) {
                json j{{"L", q_size}, {"field", q_field}, {"basis", pattern_list(sol.basis)}};
                if (!verify) {
                    j["components"] = components_json(sol);
                    emit(dump(j), qc.out);
                    return kOk;
                }
                Report r = verify_exchange_equations(sol);
                r.merge(verify_scattering_equation(sol));
                r.merge(verify_structure(sol));
                j["status"] = r.ok() ? "PASS" : "FAIL";
                j["checks"] = to_json(r);
                emit(dump(j), qc.out);
                return r.ok() ? kOk : kFailed;
            };
            if (q_field == "generic") return body(build_solution(generic_parameters(q_size)));
            return body(build_solution(stochastic_parameters(q_size)));
        };
    };
    qbuild->callback([&] { action = qkz_action(false); });
    qverify->callback([&] { action = qkz_action(true); });

    std::string s_out, s_mode = "sampled";
    int s_size = 0, s_points = 10;
    std::optional<std::uint64_t> s_seed;
    auto* sumrule = app.add_subcommand("sumrule", "sum rule at the stochastic point and its determinant form");
    sumrule->add_option("--size", s_size, "L")->required();
    sumrule->add_option("--points", s_points, "number of seeded exact sample points");
    sumrule->add_option("--seed", s_seed, "seed for the sample points (required when sampling)");
    sumrule->add_option("--mode", s_mode, "sampled, or symbolic (also proves the factorisation, L <= 3)")
        ->check(CLI::IsMember({"sampled", "symbolic"}));
    sumrule->add_option("--out", s_out, "output file (stdout when omitted)");
    sumrule->callback([&] {
        action = [&] {
            require_range("--size", s_size, 1, kMaxSumRuleSize);
            require_range("--points", s_points, 1, 1000);
            if (!s_seed) throw UsageError("--seed is required");
            const bool symbolic = s_mode == "symbolic";
            if (symbolic && s_size > 3) throw UsageError("symbolic mode is bounded by L <= 3");
            json j{{"L", s_size}, {"mode", s_mode}, {"points", s_points}, {"seed", *s_seed}};
            Report zdet, rec;
            if (s_size <= kMaxSolutionSize) {
                const auto sol = build_solution(stochastic_parameters(s_size));
                zdet = verify_zdet(sol, s_points, *s_seed, symbolic);
                if (s_size >= 2) rec = verify_sum_rule_recurrence(sol);
                if (s_size <= 3) j["Z"] = to_string(sum_rule(sol));
            } else {
                zdet = verify_zdet_fixed_vector(s_size, s_points, *s_seed);
            }
            j["zdet_status"] = zdet.ok() ? "PASS" : "FAIL";
            j["zdet_checks"] = to_json(zdet);
            if (!rec.results().empty()) {
                j["recurrence_status"] = rec.ok() ? "PASS" : "FAIL";
                j["recurrence_checks"] = to_json(rec);
            }
            emit(dump(j), s_out);
            return zdet.ok() && rec.ok() ? kOk : kFailed;
        };
    });

    std::string c_out;
    int c_n = 0;
    bool c_symbolic = false;
    auto* chi = app.add_subcommand("chi", "symplectic character with exponents 1, 2, 4, 5, 7, 8, ...");
    chi->add_option("--n", c_n, "number of variables")->required();
    chi->add_flag("--symbolic", c_symbolic, "also print the full Laurent polynomial (n <= 6)");
    chi->add_option("--out", c_out, "output file (stdout when omitted)");
    chi->callback([&] {
        action = [&] {
            require_range("--n", c_n, 1, 12);
            if (c_symbolic && c_n > kMaxSymbolicChar) throw UsageError("--symbolic is bounded by n <= 6");
            const auto h = symplectic_char_homogeneous(c_n);
            json j{{"n", c_n},
                   {"exponents", symplectic_exponents(c_n)},
                   {"at_ones", to_string(h.value)},
                   {"scaled", to_string(h.scaled)},
                   {"product_formula", scaled_char_product(c_n).get_str()},
                   {"edge", to_string(symplectic_char_edge(c_n))}};
            if (c_symbolic) {
                std::vector<std::string> names;
                for (int i = 1; i <= c_n; ++i) names.push_back("x" + std::to_string(i));
                j["symbolic"] = to_string(symplectic_char<BigRational>(c_n, make_universe(names), names));
            }
            emit(dump(j), c_out);
            return h.scaled == scaled_char_product(c_n) ? kOk : kFailed;
        };
    });

    Common fc;
    int f_n = 0;
    std::string f_in;
    auto* fpl = app.add_subcommand("fpl", "horizontally and vertically symmetric fully packed loops");
    fpl->require_subcommand(1);
    auto* fenum = fpl->add_subcommand("enumerate", "one JSON edge-occupation object per line");
    fenum->add_option("--n", f_n, "odd grid size")->required();
    fenum->add_option("--out", fc.out, "output file (stdout when omitted)");
    fenum->callback([&] {
        action = [&] {
            require_range("--n", f_n, 3, kMaxFplSize);
            if (f_n % 2 == 0) throw UsageError("--n must be odd");
            std::ostringstream s;
            for (const auto& c : enumerate_hvsfpl(f_n)) s << to_json(c).dump() << '\n';
            emit(s.str(), fc.out);
            return kOk;
        };
    });
    auto* fclass = fpl->add_subcommand("classify", "group configurations by link pattern with their a-weights");
    fclass->add_option("--in", f_in, "JSON lines written by fpl enumerate")->required();
    add_common(fclass, fc);
    fclass->callback([&] {
        action = [&] {
            const auto configs = read_fpls(f_in);
            if (configs.front().n < 5) throw UsageError("classification needs n >= 5");
            const auto cls = classify(configs);
            if (fc.format == "csv") {
                std::ostringstream s;
                s << "pattern,count,a_polynomial\n";
                for (std::size_t k = 0; k < cls.classes.size(); ++k)
                    s << cls.patterns[k].encoding() << ',' << cls.classes[k].count << ','
                      << cls.classes[k].weighted.str("a") << '\n';
                emit(s.str(), fc.out);
            } else {
                json classes = json::array();
                for (std::size_t k = 0; k < cls.classes.size(); ++k)
                    classes.push_back({{"pattern", cls.patterns[k].encoding()},
                                       {"count", cls.classes[k].count},
                                       {"a_polynomial", cls.classes[k].weighted.str("a")}});
                emit(dump({{"n", configs.front().n},
                           {"L", cls.L},
                           {"total", cls.total},
                           {"path_weight_agreements", cls.path_weight_agreements},
                           {"classes", classes}}),
                     fc.out);
            }
            return kOk;
        };
    });

    std::string v_out;
    int v_size = 0;
    auto* conj = app.add_subcommand("conjecture", "FPL classes against the exact ground state");
    conj->require_subcommand(1);
    auto* cverify = conj->add_subcommand("verify", "enumerate n = 2L+3 and compare every class");
    cverify->add_option("--size", v_size, "L")->required();
    cverify->add_option("--out", v_out, "output file (stdout when omitted)");
    cverify->callback([&] {
        action = [&] {
            require_range("--size", v_size, 1, (kMaxFplSize - 3) / 2);
            const Report r = verify_conjectures(v_size, classify(enumerate_hvsfpl(2 * v_size + 3)));
            emit(dump({{"L", v_size}, {"status", r.ok() ? "VERIFIED" : "REFUTED"}, {"findings", to_json(r)}}), v_out);
            return r.ok() ? kOk : kFailed;
        };
    });

    ReproductionOptions ro;
    std::string r_out;
    std::vector<int> r_only;
    auto* rep = app.add_subcommand("reproduce-paper", "run every acceptance check and print a summary table");
    rep->add_option("--max-size", ro.max_size, "cap on every system size (0 keeps the full bounds)");
    rep->add_option("--fpl-max", ro.fpl_max, "largest FPL grid size (odd, 7..15)");
    rep->add_option("--seed", ro.seed, "seed for sampled identities");
    rep->add_option("--only", r_only, "criterion ids to run");
    rep->add_option("--out", r_out, "directory for summary.json");
    rep->add_flag("--verbose", ro.verbose, "print each line as its criterion finishes");
    rep->callback([&] {
        action = [&] {
            require_range("--max-size", ro.max_size, 0, 8);
            require_range("--fpl-max", ro.fpl_max, 7, 15);
            if (ro.fpl_max % 2 == 0) throw UsageError("--fpl-max must be odd");
            for (int id : r_only) require_range("--only", id, 1, 12);
            const auto results = reproduce(ro, r_only);
            json all = json::array();
            for (const auto& r : results) {
                std::cout << summary_line(r) << '\n';
                for (const auto& n : r.notes) std::cout << "    note: " << n << '\n';
                all.push_back(to_json(r));
            }
            const bool ok = all_passed(results);
            std::cout << (ok ? "ALL PASS" : "SOME FAIL") << '\n';
            if (!r_out.empty()) {
                std::filesystem::create_directories(r_out);
                emit(dump({{"options", {{"max_size", ro.max_size}, {"fpl_max", ro.fpl_max}, {"seed", ro.seed}}},
                           {"all_pass", ok},
                           {"criteria", all}}),
                     (std::filesystem::path(r_out) / "summary.json").string());
            }
            return ok ? kOk : kFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
}
