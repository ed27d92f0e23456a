// hamcay: enumerate groups, solve instances, verify certificates. All streams are NDJSON.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hamcay/corpus.hpp"
#include "hamcay/errors.hpp"
#include "hamcay/solver.hpp"

using namespace hamcay;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Source {
    std::string name;
    std::string text;
};

std::vector<Source> read_sources(const std::vector<std::string>& files) {
    std::vector<Source> out;
    if (files.empty() || (files.size() == 1 && files[0] == "-")) {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        out.push_back({"<stdin>", ss.str()});
        return out;
    }
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw UsageError("cannot open " + f);
        std::stringstream ss;
        ss << in.rdbuf();
        out.push_back({f, ss.str()});
    }
    return out;
}

// A source holds one JSON document, a JSON array, or one document per line.
std::vector<json> documents(const Source& src) {
    std::vector<json> docs;
    try {
        auto whole = json::parse(src.text);
        if (whole.is_array() && !(whole.size() > 0 && whole[0].is_number())) docs.assign(whole.begin(), whole.end());
        else docs.push_back(std::move(whole));
        return docs;
    } catch (const json::parse_error&) {
    }
    std::istringstream lines(src.text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            docs.push_back(json::parse(line));
        } catch (const json::parse_error& e) {
            throw UsageError(src.name + ":" + std::to_string(n) + ": " + e.what());
        }
    }
    return docs;
}

// An instance document, or a bare presentation solved with its standard generators.
Instance to_instance(const json& j) {
    if (j.contains("presentation")) return instance_from_json(j);
    Instance inst;
    inst.presentation = presentation_from_json(j);
    inst.gens = standard_generators(make_group(inst.presentation));
    return inst;
}

std::vector<CaseTag> parse_methods(const std::vector<std::string>& names) {
    std::vector<CaseTag> out;
    for (const auto& n : names) {
        auto t = case_tag_from_string(n);
        if (!t) throw UsageError("unknown case " + n);
        out.push_back(*t);
    }
    return out;
}

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < n;) f(i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

struct Row {
    std::string label;
    std::size_t order = 0;
    i64 derived = 0;
    std::string method;
    bool verified = false;
    double ms = 0;
    std::string error;
    std::string line;
};

int cmd_enumerate(const CorpusSpec& spec, bool acceptance, std::size_t per_bucket) {
    if (acceptance) {
        for (const auto& inst : acceptance_corpus(spec.max_order, per_bucket)) std::cout << to_json(inst).dump() << '\n';
        return kOk;
    }
    enumerate_presentations(spec, [](const PcPresentation& p) { std::cout << to_json(p).dump() << '\n'; });
    return kOk;
}

int cmd_solve(const std::vector<std::string>& files, const SolveOptions& base, std::size_t max_order, unsigned jobs,
              bool quiet) {
    std::vector<Instance> todo;
    for (const auto& src : read_sources(files))
        for (const auto& doc : documents(src)) {
            Instance inst;
            try {
                inst = to_instance(doc);
            } catch (const Error& e) {
                throw UsageError(src.name + ": " + e.what());
            }
            if (max_order && make_group(inst.presentation).order() > max_order) continue;
            if (inst.label.empty()) inst.label = src.name + "#" + std::to_string(todo.size() + 1);
            todo.push_back(std::move(inst));
        }
    std::vector<Row> rows(todo.size());
    parallel_for(todo.size(), jobs, [&](std::size_t i) {
        const auto& inst = todo[i];
        Row& r = rows[i];
        r.label = inst.label;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            auto g = std::make_shared<const Group>(make_group(inst.presentation));
            r.order = g->order();
            r.derived = derived_order(*g);
            SolveOptions o = base;
            if (o.methods.empty()) o.methods = parse_methods(inst.methods);
            auto c = solve(g, inst.gens, o);
            r.method = c.method;
            r.verified = verify(c).ok;
            json j = to_json(c);
            j["label"] = inst.label;
            r.line = j.dump();
        } catch (const std::exception& e) {
            r.error = e.what();
            r.line = json{{"label", inst.label}, {"error", r.error}}.dump();
        }
        r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    });
    bool all_ok = true;
    for (const auto& r : rows) {
        std::cout << r.line << '\n';
        all_ok = all_ok && r.error.empty() && r.verified;
    }
    if (!quiet) {
        std::fprintf(stderr, "%-32s %6s %6s %-18s %-8s %10s\n", "instance", "|G|", "|G'|", "method", "verified", "ms");
        std::map<std::string, std::size_t> tally;
        for (const auto& r : rows) {
            std::fprintf(stderr, "%-32s %6zu %6lld %-18s %-8s %10.1f\n", r.label.c_str(), r.order,
                         static_cast<long long>(r.derived), r.error.empty() ? r.method.c_str() : "error",
                         r.verified ? "yes" : "no", r.ms);
            if (!r.error.empty()) std::fprintf(stderr, "  %s\n", r.error.c_str());
            ++tally[r.error.empty() ? r.method : "error"];
        }
        std::fprintf(stderr, "%zu instances:", rows.size());
        for (const auto& [m, n] : tally) std::fprintf(stderr, " %s=%zu", m.c_str(), n);
        std::fprintf(stderr, "\n");
    }
    return all_ok ? kOk : kFailed;
}

int cmd_verify(const std::vector<std::string>& files) {
    std::size_t total = 0, failed = 0;
    for (const auto& src : read_sources(files)) {
        const auto docs = documents(src);
        for (std::size_t i = 0; i < docs.size(); ++i) {
            ++total;
            const std::string where = src.name + (docs.size() > 1 ? "#" + std::to_string(i + 1) : "");
            VerifyReport rep;
            if (docs[i].contains("error")) {
                rep.reason = "solve reported an error: " + docs[i]["error"].get<std::string>();
            } else {
                try {
                    rep = verify(certificate_from_json(docs[i]));
                } catch (const Error& e) {
                    rep.reason = e.what();
                }
            }
            json out{{"source", where}, {"ok", rep.ok}};
            if (!rep.ok) {
                ++failed;
                out["reason"] = rep.reason;
                if (rep.first_divergence) out["first_divergence"] = *rep.first_divergence;
            }
            std::cout << out.dump() << '\n';
        }
    }
    if (total == 0) std::fprintf(stderr, "warning: no certificates given\n");
    else std::fprintf(stderr, "%zu of %zu certificates verified\n", total - failed, total);
    return failed ? kFailed : kOk;
}

std::vector<std::vector<i64>> parse_shapes(const std::vector<std::string>& raw) {
    std::vector<std::vector<i64>> out;
    for (const auto& s : raw) {
        std::vector<i64> shape;
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ',')) shape.push_back(std::stoll(part));
        out.push_back(shape);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian cycles in Cayley graphs of odd-order groups with cyclic commutator subgroup"};
    app.require_subcommand(1);

    CorpusSpec spec;
    spec.max_order = 200;
    std::vector<std::string> shapes;
    bool acceptance = false;
    std::size_t per_bucket = 2;
    auto* en = app.add_subcommand("enumerate", "Stream consistent presentations as NDJSON");
    en->add_option("--max-order", spec.max_order, "Largest |G|")->capture_default_str();
    en->add_option("--min-prime", spec.min_prime, "Smallest prime dividing |G'|")->capture_default_str();
    en->add_option("--max-prime", spec.max_prime, "Largest prime dividing |G'|")->capture_default_str();
    en->add_option("--max-mu", spec.max_mu, "Exponent bound on the smaller prime")->capture_default_str();
    en->add_option("--max-nu", spec.max_nu, "Exponent bound on the larger prime")->capture_default_str();
    en->add_option("--shape", shapes, "Quotient shape as comma-separated orders, repeatable (default: built-in list)");
    en->add_option("--seed", spec.seed, "Seed for sampled choices")->capture_default_str();
    en->add_flag("--acceptance", acceptance, "Emit the acceptance corpus as instances instead");
    en->add_option("--per-bucket", per_bucket, "Acceptance corpus: groups kept per (|G|, |G'|)")->capture_default_str();

    std::vector<std::string> inputs;
    SolveOptions opts;
    std::vector<std::string> methods;
    std::size_t max_order = 0;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool quiet = false;
    auto* so = app.add_subcommand("solve", "Solve instances (files or stdin) and print certificates as NDJSON");
    so->add_option("inputs", inputs, "Instance or presentation files; '-' or none reads stdin");
    so->add_option("--budget", opts.budget, "Backtracking node budget for any search")->capture_default_str();
    so->add_option("--methods", methods, "Restrict dispatch to these cases")->delimiter(',');
    so->add_flag("--directed", opts.directed, "Oracle mode: directed brute force only");
    so->add_option("--max-order", max_order, "Skip instances with |G| above this (0: no limit)")->capture_default_str();
    so->add_option("-j,--jobs", jobs, "Instances solved in parallel (output order is input order)")->capture_default_str();
    so->add_flag("-q,--quiet", quiet, "No summary table on stderr");

    std::vector<std::string> certs;
    auto* ve = app.add_subcommand("verify", "Re-verify certificates from scratch");
    ve->add_option("certificates", certs, "Certificate files (JSON or NDJSON); '-' or none reads stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    try {
        if (*en) {
            if (!shapes.empty()) spec.shapes = parse_shapes(shapes);
            return cmd_enumerate(spec, acceptance, per_bucket);
        }
        if (*so) {
            opts.methods = parse_methods(methods);
            return cmd_solve(inputs, opts, max_order, jobs, quiet);
        }
        return cmd_verify(certs);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kUsage;
    }
}
