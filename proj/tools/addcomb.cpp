#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "addcomb/energy.hpp"
#include "addcomb/examples.hpp"
#include "addcomb/json_io.hpp"
#include "addcomb/literal.hpp"
#include "addcomb/search.hpp"
#include "addcomb/theorems.hpp"

using namespace addcomb;

namespace {

constexpr int kExitVerdictFailedBase = 10;  // + TheoremId index
constexpr int kExitParseError = 3;
constexpr int kExitCounterexample = 1;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

Group group_from_arg(const std::string& arg) {
    std::vector<std::uint32_t> orders;
    for (const auto& tok : split(arg, ',')) orders.push_back(std::stoul(tok));
    return make_group(orders);
}

std::vector<std::uint32_t> u32_list(const std::string& arg, char sep) {
    std::vector<std::uint32_t> out;
    for (const auto& tok : split(arg, sep)) out.push_back(std::stoul(tok));
    return out;
}

unsigned default_threads() {
    if (const char* env = std::getenv("ADDCOMB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // resolved to hardware concurrency by run_campaign
}

std::string describe(const TheoremVerdict& v) {
    std::ostringstream os;
    const char* rel = v.holds ? ">=" : "<";
    switch (v.theorem) {
        case TheoremId::Kneser:
            os << "|A+B| = " << v.lhs << " " << rel << " " << v.rhs
               << " = |A+H|+|B+H|-|H|  (H = stabilizer(A+B)";
            if (v.branch == Branch::Equality) os << ", equality case";
            os << ")";
            break;
        case TheoremId::Pollard:
            os << "sum_{i<=t}|A+_iB| = " << v.lhs << " " << rel << " " << v.rhs
               << " = t*min(p, |A|+|B|-t)";
            break;
        case TheoremId::Chowla:
            os << "sum_{i<=t}|A+_iB| = " << v.lhs << " " << rel << " " << v.rhs
               << " = t*min(n, |A|+|B|-t)";
            break;
        case TheoremId::GreenRuzsa:
            os << "sum_{i<=t}|A+_iB| = " << v.lhs << " " << rel << " " << v.rhs
               << " = t*min(|G|, |A|+|B|-D-t)";
            break;
        case TheoremId::Main:
        case TheoremId::MainT2:
            if (v.branch == Branch::WeakBound) {
                os << "sum_{i<=t}|A+_iB| = " << v.lhs << " " << rel << " " << v.rhs
                   << (v.theorem == TheoremId::MainT2 ? " = 2|A|+2|B|-4"
                                                      : " = t|A|+t|B|-2t^2+1");
            } else if (v.witness) {
                os << "sum_{i<=t}|A+_iB| = " << v.lhs << " " << rel << " " << v.rhs
                   << " = t|A|+t|B|-(t-l)(|H|-rho)-t*l  (l=" << v.witness->l
                   << ", |H|=" << v.witness->H.order() << ", rho=" << v.witness->rho
                   << ")";
            } else {
                os << "no witness pair satisfies the structural branch";
            }
            break;
        case TheoremId::Corollary:
            if (v.branch == Branch::Coset)
                os << "coset of a subgroup with |H| = " << v.lhs
                   << " >= 3 inside A+_2B";
            else
                os << "|A+B|+|A+_2B| = " << v.lhs << " " << rel << " " << v.rhs
                   << " = 2|A|+2|B|-4";
            break;
        case TheoremId::Multiplicity:
            os << "min_{g in A+B} r_{A,B}(g) = " << v.lhs << " " << rel << " " << v.rhs
               << " = |A|+|B|-|A+B|";
            break;
        case TheoremId::Critical:
            os << "min_{b not in B} |A+(B u {b})| = " << v.lhs << " " << rel << " "
               << v.rhs << " = |A+B|+1";
            break;
        case TheoremId::Remark:
            os << "|H| = " << v.lhs << " " << rel << " " << v.rhs
               << " = 2t+rho, and A+_tB = A+_2tB";
            break;
        case TheoremId::EnergyLemma:
            os << "sum_{i<=t}|A+_iB| = " << v.lhs << " " << rel << " " << v.rhs
               << " = floor(t*min(|A||B|/(t+sqrt(t(t-1))), |A|^2|B|/(|T|(|B|-k)+k|A|)))";
            break;
    }
    return os.str();
}

void print_verdict(const TheoremVerdict& v, const std::string& format,
                   const Group& g, const GSet& A, const GSet& B, std::uint32_t t) {
    if (format == "json") {
        json j;
        j["group"] = group_to_json(*g);
        j["A"] = A.indices();
        j["B"] = B.indices();
        j["t"] = t;
        j["verdict"] = verdict_to_json(v);
        std::cout << j.dump() << "\n";
    } else if (format == "tsv") {
        std::cout << theorem_name(v.theorem) << "\t" << (v.holds ? "true" : "false")
                  << "\t" << branch_name(v.branch) << "\t" << v.lhs << "\t" << v.rhs
                  << "\n";
    } else {
        std::cout << theorem_name(v.theorem) << " [" << branch_name(v.branch)
                  << "]: ";
        if (v.branch == Branch::NotApplicable)
            std::cout << "hypotheses not satisfied; vacuously true";
        else
            std::cout << describe(v);
        std::cout << "\n  => " << (v.holds ? "HOLDS" : "FAILS") << "\n";
    }
}

int verdict_exit(const TheoremVerdict& v) {
    return v.holds ? 0 : kExitVerdictFailedBase + static_cast<int>(v.theorem);
}

std::map<std::string, std::string> parse_params(const std::string& arg) {
    std::map<std::string, std::string> out;
    for (const auto& kv : split(arg, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--params", "expected k=v, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

std::string need(const std::map<std::string, std::string>& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw CLI::ValidationError("--params", "missing required key '" + key + "'");
    return it->second;
}

int run_verify(const std::string& group_arg, const std::string& a_arg,
               const std::string& b_arg, std::uint32_t t, const std::string& theorem,
               std::uint32_t k, const std::string& format) {
    const Group g = group_from_arg(group_arg);
    const GSet A = parse_set(a_arg, g);
    const GSet B = parse_set(b_arg, g);

    const auto id = theorem_from_name(theorem);
    if (!id) throw CLI::ValidationError("--theorem", "unknown theorem '" + theorem + "'");

    TheoremVerdict v;
    switch (*id) {
        case TheoremId::Kneser: v = check_kneser(A, B); break;
        case TheoremId::Pollard: v = check_pollard_cyclic(A, B, t); break;
        case TheoremId::Chowla: v = check_chowla_pollard(A, B, t); break;
        case TheoremId::GreenRuzsa: v = check_green_ruzsa(A, B, t); break;
        case TheoremId::Main: v = check_main_theorem(A, B, t); break;
        case TheoremId::MainT2: v = check_t2_theorem(A, B); break;
        case TheoremId::Corollary: v = check_corollary(A, B); break;
        case TheoremId::Multiplicity: v = check_multiplicity_prop(A, B); break;
        case TheoremId::Critical: v = check_critical_pair(A, B); break;
        case TheoremId::Remark: v = check_double_rep_remark(A, B, t); break;
        case TheoremId::EnergyLemma: {
            const std::uint32_t kk =
                k > 0 ? k : static_cast<std::uint32_t>(std::min(A.card(), B.card()));
            v = check_energy_lemma(A, B, kk, t);
            break;
        }
    }
    print_verdict(v, format, g, A, B, t);
    return verdict_exit(v);
}

int run_search(std::uint32_t max_order, const std::string& t_range,
               const std::string& mode, std::uint64_t samples, std::uint64_t seed,
               unsigned threads, const std::string& out_path,
               const std::string& checkers) {
    CampaignConfig cfg;
    cfg.max_order = max_order;

    const auto dots = t_range.find("..");
    if (dots == std::string::npos) {
        cfg.t_min = cfg.t_max = std::stoul(t_range);
    } else {
        cfg.t_min = std::stoul(t_range.substr(0, dots));
        cfg.t_max = std::stoul(t_range.substr(dots + 2));
    }
    if (mode == "exhaustive") {
        cfg.mode = CampaignConfig::Mode::Exhaustive;
    } else if (mode == "sample") {
        cfg.mode = CampaignConfig::Mode::Sampled;
    } else {
        throw CLI::ValidationError("--mode", "expected exhaustive|sample");
    }
    cfg.samples_per_group = samples;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.stop_on_failure = true;
    for (const auto& name : split(checkers, ',')) {
        const auto id = theorem_from_name(name);
        if (!id) throw CLI::ValidationError("--checkers", "unknown checker '" + name + "'");
        cfg.checkers.push_back(*id);
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) throw CLI::ValidationError("--out", "cannot open " + out_path);
        out = &file;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const CampaignResult result = run_campaign(cfg, [&](const CampaignRecord& rec) {
        *out << record_to_json(rec).dump() << "\n";
        out->flush();
    });
    const auto secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::cerr << "search: " << result.records << " records, " << result.failures
              << " failures, " << result.witness_records
              << " witness records (max l = " << result.max_witness_l << ") in "
              << secs << " s\n";
    if (result.counterexample) {
        const auto& rec = *result.counterexample;
        std::string theorem = "main";
        for (const auto& v : rec.verdicts)
            if (!v.holds) theorem = theorem_name(v.theorem);
        std::string orders;
        for (std::size_t i = 0; i < rec.group_factors.size(); ++i)
            orders += (i ? "," : "") + std::to_string(rec.group_factors[i]);
        std::cerr << "counterexample! reproduce with:\n  addcomb verify --group "
                  << orders << " --A \"" << GSet::from_indices(make_group(rec.group_factors), rec.A).to_string()
                  << "\" --B \"" << GSet::from_indices(make_group(rec.group_factors), rec.B).to_string()
                  << "\" --t " << rec.t << " --theorem " << theorem << "\n";
        return kExitCounterexample;
    }
    return 0;
}

int run_example(int family, const std::string& params_arg, const std::string& format) {
    const auto params = parse_params(params_arg);
    ExampleInstance inst = [&] {
        if (family == 1) {
            return build_example1(std::stoul(need(params, "H")),
                                  std::stoul(need(params, "q")),
                                  std::stoul(need(params, "d")),
                                  std::stoul(need(params, "s")),
                                  std::stoul(need(params, "r")),
                                  std::stoul(need(params, "x")));
        }
        const Group g = make_group(u32_list(need(params, "group"), ':'));
        const auto hgens = u32_list(need(params, "H"), ':');
        const auto lgens = u32_list(need(params, "L"), ':');
        return build_example2(g, subgroup_generated_by(g, hgens),
                              subgroup_generated_by(g, lgens),
                              std::stoul(need(params, "r")),
                              std::stoul(need(params, "x")));
    }();

    const std::int64_t measured = measured_defect(inst);
    if (format == "json") {
        std::cout << example_to_json(inst, measured).dump() << "\n";
    } else {
        std::cout << "family " << inst.family << " over " << inst.G->describe()
                  << ": |A| = " << inst.A.card() << ", |B| = " << inst.B.card()
                  << ", t = " << inst.t << ", x = " << inst.x << "\n";
        std::cout << "  A = " << inst.A.to_string() << "\n";
        std::cout << "  B = " << inst.B.to_string() << "\n";
        std::cout << "  sum_{i<=t}|A+_iB| - t|A| - t|B| + t^2 = " << measured
                  << ", predicted " << (inst.family == 1 ? "x^2-x|H|" : "x^2-x|L|")
                  << " = " << inst.predicted_defect << "\n";
        std::cout << "  => " << (measured == inst.predicted_defect ? "IDENTITY HOLDS" : "MISMATCH")
                  << "\n";
    }
    return measured == inst.predicted_defect ? 0 : kExitCounterexample;
}

int run_energy(const std::string& group_arg, const std::string& a_arg,
               const std::string& b_arg, std::uint32_t k, std::uint32_t t,
               const std::string& format) {
    const Group g = group_from_arg(group_arg);
    const GSet A = parse_set(a_arg, g);
    const GSet B = parse_set(b_arg, g);
    const EnergyReport rep = energy_report(A, B, k, t);
    const auto lemma = check_energy_lemma(A, B, k, t);
    const auto upper = check_energy_upper_bound(A, B, rep.T, k);

    if (format == "json") {
        json j = energy_report_to_json(rep);
        j["lemma"] = verdict_to_json(lemma);
        j["upper_bound"] = verdict_to_json(upper);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "E(A,B) = " << rep.energy << ", T = " << rep.T.to_string()
                  << " (k = " << k << ", t = " << t << ")\n";
        std::cout << "  2E = " << 2 * rep.energy << " <= " << rep.upper_bound_rhs
                  << " = |T||B|(|B|-k)+(k-1)|A||B|  => "
                  << (upper.holds ? "HOLDS" : "FAILS") << "\n";
        std::cout << "  sum_{i<=t}|A+_iB| = " << lemma.lhs
                  << " >= " << rep.lower_bound << " (floored bound)  => "
                  << (lemma.holds ? "HOLDS" : "FAILS") << "\n";
    }
    if (!lemma.holds || !upper.holds)
        return kExitVerdictFailedBase + static_cast<int>(TheoremId::EnergyLemma);
    return 0;
}

int run_bench(std::uint32_t order, double density, std::uint64_t card,
              std::uint32_t reps, const std::string& kernel_name, std::uint64_t seed,
              const std::string& format) {
    RepKernel kernel;
    if (kernel_name == "naive") kernel = RepKernel::Naive;
    else if (kernel_name == "bitset") kernel = RepKernel::Bitset;
    else if (kernel_name == "transform") kernel = RepKernel::Transform;
    else throw CLI::ValidationError("--kernel", "expected naive|bitset|transform");
    if (kernel == RepKernel::Transform && !transform_kernel_available())
        throw CLI::ValidationError("--kernel", "transform kernel not built (FFTW missing)");

    const Group g = make_group({order});
    std::mt19937_64 rng(seed);
    auto draw = [&]() {
        std::vector<std::uint32_t> idx;
        if (card > 0) {
            std::vector<std::uint32_t> all(order);
            for (std::uint32_t i = 0; i < order; ++i) all[i] = i;
            std::shuffle(all.begin(), all.end(), rng);
            idx.assign(all.begin(), all.begin() + std::min<std::uint64_t>(card, order));
            std::sort(idx.begin(), idx.end());
        } else {
            for (std::uint32_t i = 0; i < order; ++i)
                if (std::generate_canonical<double, 53>(rng) < density) idx.push_back(i);
            if (idx.empty()) idx.push_back(static_cast<std::uint32_t>(rng() % order));
        }
        return GSet::from_indices(g, idx);
    };

    std::vector<double> ns;
    bool agree = true;
    for (std::uint32_t i = 0; i < reps; ++i) {
        const GSet A = draw(), B = draw();
        const auto t0 = std::chrono::steady_clock::now();
        const auto prof = rep_counts(A, B, kernel);
        const auto t1 = std::chrono::steady_clock::now();
        ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
        if (kernel != RepKernel::Naive)
            agree = agree && prof.counts == rep_counts(A, B, RepKernel::Naive).counts;
    }
    std::sort(ns.begin(), ns.end());
    const double median = ns[ns.size() / 2];
    double mean = 0;
    for (double x : ns) mean += x;
    mean /= static_cast<double>(ns.size());

    if (format == "json") {
        json j{{"order", order},   {"kernel", kernel_name}, {"reps", reps},
               {"median_ns", median}, {"mean_ns", mean},    {"agrees_with_naive", agree}};
        if (card > 0) j["card"] = card; else j["density"] = density;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "rep_counts kernel=" << kernel_name << " order=" << order;
        if (card > 0) std::cout << " |A|=|B|=" << card;
        else std::cout << " density=" << density;
        std::cout << ": median " << median / 1e6 << " ms, mean " << mean / 1e6
                  << " ms over " << reps << " reps"
                  << (kernel_name == "naive" ? "" : agree ? ", agrees with naive" : ", MISMATCH vs naive")
                  << "\n";
    }
    return agree ? 0 : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumset and t-representable-sum verification over finite abelian groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "addcomb 0.1.0");

    std::string group_arg, a_arg, b_arg, format = "text";
    std::uint32_t t = 1, k = 0;
    std::string theorem;

    auto* verify = app.add_subcommand("verify", "check one theorem on one instance");
    verify->add_option("--group", group_arg, "cyclic factor orders, e.g. 2,6")->required();
    verify->add_option("--A", a_arg, "set literal {i1,i2,...}")->required();
    verify->add_option("--B", b_arg, "set literal {i1,i2,...}")->required();
    verify->add_option("--t", t, "number of required representations")->default_val(1);
    verify
        ->add_option("--theorem", theorem,
                     "main|t2|kneser|pollard|chowla|green-ruzsa|corollary|mult|critical|remark|energy")
        ->required();
    verify->add_option("--k", k, "representation cap for --theorem energy (default min(|A|,|B|))");
    verify->add_option("--format", format, "text|json|tsv")->default_val("text");

    std::uint32_t max_order = 8;
    std::string t_range = "1..3", mode = "exhaustive", out_path, checkers;
    std::uint64_t samples = 1000, seed = 0;
    unsigned threads = default_threads();

    auto* search = app.add_subcommand("search", "run a verification campaign, JSONL records");
    search->add_option("--max-order", max_order, "largest group order")->default_val(8);
    search->add_option("--t", t_range, "t range, e.g. 1..3")->default_val("1..3");
    search->add_option("--mode", mode, "exhaustive|sample")->default_val("exhaustive");
    search->add_option("--samples", samples, "pairs per group in sample mode")->default_val(1000);
    search->add_option("--seed", seed, "sampling seed")->default_val(0);
    search->add_option("--threads", threads, "worker threads (default: ADDCOMB_THREADS or all cores)");
    search->add_option("--out", out_path, "output file (default stdout)");
    search->add_option("--checkers", checkers, "comma list restricting the checkers");

    int family = 1;
    std::string params_arg;
    auto* example = app.add_subcommand("example", "build an extremal family instance");
    example->add_option("--family", family, "1|2")->required()->check(CLI::Range(1, 2));
    example
        ->add_option("--params", params_arg,
                     "family 1: H=|H|,q=order,d=diff,s=len,r=len,x=defect-param; "
                     "family 2: group=2:8,H=gens,L=gens,r=len,x=defect-param")
        ->required();
    example->add_option("--format", format, "text|json")->default_val("text");

    auto* energy = app.add_subcommand("energy", "additive-energy report and lemma checks");
    energy->add_option("--group", group_arg)->required();
    energy->add_option("--A", a_arg)->required();
    energy->add_option("--B", b_arg)->required();
    energy->add_option("--k", k, "representation cap")->required();
    energy->add_option("--t", t)->default_val(1);
    energy->add_option("--format", format, "text|json")->default_val("text");

    std::uint32_t order = 4096, reps = 10;
    double density = 0.5;
    std::uint64_t card = 0;
    std::string kernel_name = "bitset";
    auto* bench = app.add_subcommand("bench", "time the rep_counts kernels");
    bench->add_option("--order", order)->default_val(4096);
    bench->add_option("--density", density, "inclusion probability per element")->default_val(0.5);
    bench->add_option("--card", card, "exact |A| = |B| (overrides --density)");
    bench->add_option("--reps", reps)->default_val(10);
    bench->add_option("--kernel", kernel_name, "naive|bitset|transform")->default_val("bitset");
    bench->add_option("--seed", seed)->default_val(1);
    bench->add_option("--format", format, "text|json")->default_val("text");

    try {
        app.parse(argc, argv);
        if (verify->parsed())
            return run_verify(group_arg, a_arg, b_arg, t, theorem, k, format);
        if (search->parsed())
            return run_search(max_order, t_range, mode, samples, seed, threads,
                              out_path, checkers);
        if (example->parsed()) return run_example(family, params_arg, format);
        if (energy->parsed()) return run_energy(group_arg, a_arg, b_arg, k, t, format);
        if (bench->parsed())
            return run_bench(order, density, card, reps, kernel_name, seed, format);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
