// Command-line front end: solve, inspect, kernelize, generate and verify.

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "stc/errors.hpp"
#include "stc/gallai.hpp"
#include "stc/io.hpp"
#include "stc/kernel.hpp"
#include "stc/reductions/eth.hpp"
#include "stc/reductions/lift.hpp"
#include "stc/reductions/nae.hpp"
#include "stc/reductions/setcover.hpp"
#include "stc/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;

struct Outcome {
    std::string out;
    std::string err;
    int code = kExitOk;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs one unit of work and maps library errors to exit codes.
Outcome guarded(const std::string& label, const std::function<std::string()>& work) {
    Outcome o;
    try {
        o.out = work();
    } catch (const stc::ValidationError& e) {
        o.err = label + ": " + e.what();
        o.code = kExitParse;
    } catch (const stc::ResourceLimitError& e) {
        o.err = label + ": resource limit: " + e.what();
        o.code = kExitLimit;
    } catch (const std::exception& e) {
        o.err = label + ": " + e.what();
        o.code = kExitFailure;
    }
    return o;
}

// Applies `work` to every file, on up to `jobs` threads. Output follows input
// order; with several files each block is introduced by a "# file" comment.
int for_each_file(const std::vector<std::string>& files, int jobs,
                  const std::function<std::string(const std::string& text)>& work) {
    std::vector<Outcome> results(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            results[i] = guarded(files[i], [&] { return work(read_file(files[i])); });
        }
    };
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), files.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
        t.join();
    }
    int code = kExitOk;
    for (std::size_t i = 0; i < files.size(); ++i) {
        if (files.size() > 1) {
            std::cout << "# file " << files[i] << '\n';
        }
        std::cout << results[i].out;
        if (!results[i].err.empty()) {
            std::cerr << "error: " << results[i].err << '\n';
        }
        if (code == kExitOk) {
            code = results[i].code;
        }
    }
    std::cout.flush();
    return code;
}

std::string verify_report(const stc::AnyInstance& inst, const stc::Labeling& lab) {
    const stc::ELInstance el = stc::normalize(inst);
    const stc::VerifyReport rep = stc::verify_labeling(el, lab);
    const stc::Graph& g = el.g;
    auto ends = [&](stc::EdgeId e) {
        return std::to_string(g.edge(e).u + 1) + " " + std::to_string(g.edge(e).v + 1);
    };
    std::ostringstream out;
    out << (rep.accepts(el.k) ? "s ACCEPT " : "s REJECT ") << rep.weak_count << '\n';
    for (const auto& v : rep.violations) {
        if (v.kind == stc::ViolationKind::StcP3) {
            out << "x p3 " << ends(v.first) << ' ' << ends(v.second) << '\n';
        } else {
            out << "x list " << ends(v.first) << '\n';
        }
    }
    if (rep.weak_count > el.k) {
        out << "x budget " << rep.weak_count << ' ' << el.k << '\n';
    }
    return out.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong triadic closure solvers and instance tools"};
    app.require_subcommand(1);
    app.fallthrough();

    stc::SolverLimits limits;
    app.add_option("--max-subsets", limits.max_subsets, "Subset DP table cap")->envname("STC_MAX_SUBSETS");
    app.add_option("--max-enum", limits.max_enum, "Oracle enumeration cap")->envname("STC_MAX_ENUM");
    app.add_option("--max-nodes", limits.max_nodes, "Branching solver node cap")->envname("STC_MAX_NODES");
    int jobs = 1;
    app.add_option("--jobs,-j", jobs, "Worker threads for multi-file commands")->check(CLI::PositiveNumber);

    std::vector<std::string> files;
    int code = kExitOk;

    auto* solve = app.add_subcommand("solve", "Decide instances and print a witness");
    std::string algo_name = "auto";
    solve->add_option("files", files, "Instance files")->required();
    solve->add_option("--algo", algo_name, "oracle | dp | fpt | auto")
        ->check(CLI::IsMember({"oracle", "dp", "fpt", "auto"}));
    solve->callback([&] {
        const stc::Algorithm algo = *stc::parse_algorithm(algo_name);
        code = for_each_file(files, jobs, [&](const std::string& text) {
            const stc::AnyInstance inst = stc::parse_instance(text);
            return stc::emit_result(stc::solve(inst, algo, limits), stc::graph_of(inst));
        });
    });

    auto* gallai = app.add_subcommand("gallai", "Print the Gallai graph");
    gallai->add_option("files", files, "Instance files")->required();
    gallai->callback([&] {
        code = for_each_file(files, jobs, [](const std::string& text) {
            return stc::emit_gallai(stc::graph_of(stc::parse_instance(text)));
        });
    });

    auto* k1 = app.add_subcommand("k1", "Print k1 and a minimum Gallai vertex cover");
    k1->add_option("files", files, "Instance files")->required();
    k1->callback([&] {
        code = for_each_file(files, jobs, [](const std::string& text) {
            return stc::emit_k1(stc::graph_of(stc::parse_instance(text)));
        });
    });

    auto* kern = app.add_subcommand("kernelize", "Apply the critical-clique rule to a fixpoint");
    bool trace = false;
    stc::KernelOptions kopts;
    kern->add_option("files", files, "Instance files")->required();
    kern->add_flag("--trace", trace, "Prefix the result with rule applications as comments");
    kern->add_flag("--normalize-empty-cc", kopts.normalize_empty_cc,
                   "Turn empty lists inside critical cliques into {1} first, lowering k");
    kern->callback([&] {
        code = for_each_file(files, jobs, [&](const std::string& text) {
            const stc::ELInstance el = stc::normalize(stc::parse_instance(text));
            const stc::KernelResult r = stc::kernelize(el, kopts);
            return (trace ? stc::emit_kernel_trace(r, el.g) : std::string()) + stc::emit_instance(r.reduced);
        });
    });

    auto* gen = app.add_subcommand("gen", "Build reduction instances");
    gen->require_subcommand(1);
    std::string input;
    auto one_input = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", input, what)->required();
    };
    auto run_gen = [&](const std::function<std::string(const std::string&)>& work) {
        const Outcome o = guarded(input, [&] { return work(read_file(input)); });
        std::cout << o.out;
        if (!o.err.empty()) {
            std::cerr << "error: " << o.err << '\n';
        }
        code = o.code;
    };

    auto* nae = gen->add_subcommand("nae3sat", "NAE-3SAT formula (DIMACS) to a two-color instance");
    one_input(nae, "DIMACS cnf file");
    nae->callback([&] {
        run_gen([](const std::string& text) {
            return stc::emit_instance(stc::reduce_nae3sat(stc::parse_dimacs_cnf(text)).instance);
        });
    });

    auto* lift = gen->add_subcommand("lift", "Multi-STC instance with c colors to one with c+1");
    one_input(lift, "mstc instance file");
    lift->callback([&] {
        run_gen([](const std::string& text) {
            const stc::AnyInstance inst = stc::parse_instance(text);
            const auto* multi = std::get_if<stc::MultiInstance>(&inst);
            if (!multi) {
                throw stc::ValidationError("lift needs an mstc instance");
            }
            return stc::emit_instance(stc::lift_color(*multi).instance);
        });
    });

    auto* sc = gen->add_subcommand("setcover", "Set cover to a vertex-list instance with k = 0");
    one_input(sc, "set cover file");
    sc->callback([&] {
        run_gen([](const std::string& text) {
            return stc::emit_instance(stc::reduce_setcover(stc::parse_setcover(text)).instance);
        });
    });

    auto* eth = gen->add_subcommand("eth3sat", "3-SAT (at most 4 occurrences per variable) to a vertex-list instance");
    one_input(eth, "DIMACS cnf file");
    eth->callback([&] {
        run_gen([](const std::string& text) {
            return stc::emit_instance(stc::reduce_3sat_eth(stc::parse_dimacs_cnf(text)).instance);
        });
    });

    auto* is2sc = gen->add_subcommand("is2sc", "Independent set of size s to set cover");
    int s = 0;
    one_input(is2sc, "instance file (its graph is used)");
    is2sc->add_option("--s", s, "Independent set size")->required();
    is2sc->callback([&] {
        run_gen([&](const std::string& text) {
            return stc::emit_setcover(stc::reduce_is_to_setcover(stc::graph_of(stc::parse_instance(text)), s));
        });
    });

    auto* verify = app.add_subcommand("verify", "Check a labeling against an instance");
    std::string instance_file;
    std::string labeling_file;
    verify->add_option("instance", instance_file, "Instance file")->required();
    verify->add_option("labeling", labeling_file, "Labeling file")->required();
    verify->callback([&] {
        bool accepted = false;
        const Outcome o = guarded(labeling_file, [&] {
            const stc::AnyInstance inst = stc::parse_instance(read_file(instance_file));
            const auto lab = stc::parse_labeling(read_file(labeling_file), stc::graph_of(inst));
            if (!lab) {
                throw stc::ValidationError("labeling file says NO; there is nothing to verify");
            }
            const std::string report = verify_report(inst, *lab);
            accepted = report.rfind("s ACCEPT", 0) == 0;
            return report;
        });
        std::cout << o.out;
        if (!o.err.empty()) {
            std::cerr << "error: " << o.err << '\n';
        }
        code = o.code != kExitOk ? o.code : (accepted ? kExitOk : kExitFailure);
    });

    CLI11_PARSE(app, argc, argv);
    return code;
}
