#include "mlines/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mlines/errors.hpp"
#include "mlines/fixtures.hpp"
#include "mlines/metric_lines.hpp"

namespace mlines {

std::string metric_instance_id(const DistanceMatrix& d) {
    std::string id = "m" + std::to_string(d.n()) + ":";
    for (int i = 0; i < d.n(); ++i)
        for (int j = i + 1; j < d.n(); ++j) {
            const int v = d(i, j);
            if (v >= 0 && v <= 9)
                id += static_cast<char>('0' + v);
            else
                id += "(" + std::to_string(v) + ")";
        }
    return id;
}

namespace {

Instance graph_instance(const Graph& g, std::string id) {
    Instance inst;
    inst.id = std::move(id);
    inst.graph = g;
    if (is_connected(g) && g.n() >= 1) inst.metric = shortest_path_metric(g);
    return inst;
}

}  // namespace

InstanceSource family_source(const FamilySpec& spec) {
    return [spec](const InstanceSink& sink) {
        if (spec.family == Family::TwoMetric) {
            enumerate_two_metrics(spec, [&](const DistanceMatrix& d) {
                Instance inst;
                inst.id = metric_instance_id(d);
                inst.metric = d;
                return sink(std::move(inst));
            });
        } else {
            enumerate_graphs(spec, [&](const Graph& g) {
                return sink(graph_instance(g, graph6_encode(g)));
            });
        }
    };
}

InstanceSource fixture_source(const std::vector<std::string>& names) {
    std::vector<const Fixture*> picked;
    for (const auto& name : names) {
        const Fixture* f = find_fixture(name);
        if (!f) throw std::invalid_argument("unknown fixture '" + name + "'");
        picked.push_back(f);
    }
    return [picked](const InstanceSink& sink) {
        for (const Fixture* f : picked) {
            Instance inst = graph_instance(f->graph, f->name);
            inst.vertex_names = f->vertex_names;
            inst.is_fixture = true;
            if (!sink(std::move(inst))) return;
        }
    };
}

InstanceSource graph6_file_source(const std::string& path) {
    return [path](const InstanceSink& sink) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open graph6 file '" + path + "'");
        std::string line;
        long long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line == "\r") continue;
            Graph g = graph6_decode(line);
            if (!sink(graph_instance(g, path + ":" + std::to_string(lineno)))) return;
        }
    };
}

InstanceSource metric_file_source(const std::string& path) {
    return [path](const InstanceSink& sink) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open metric file '" + path + "'");
        DistanceMatrix d = read_distance_matrix(in);
        const auto violations = validate_metric(d);
        if (!violations.empty()) {
            std::string msg = "invalid metric in '" + path + "':";
            for (const auto& v : violations) msg += " " + v.describe() + ";";
            throw ParseError(msg);
        }
        Instance inst;
        inst.id = path;
        inst.metric = std::move(d);
        sink(std::move(inst));
    };
}

InstanceSource concat_sources(std::vector<InstanceSource> sources) {
    return [sources = std::move(sources)](const InstanceSink& sink) {
        bool keep_going = true;
        for (const auto& src : sources) {
            if (!keep_going) return;
            src([&](Instance&& inst) {
                keep_going = sink(std::move(inst));
                return keep_going;
            });
        }
    };
}

namespace {

Verdict not_applicable(const std::string& check, const Instance& inst, const std::string& why) {
    return Verdict{check, inst.id, Status::PreconditionUnmet,
                   nlohmann::json{{"reason", why}}, {}};
}

std::vector<CheckDef> build_registry() {
    std::vector<CheckDef> defs;
    defs.push_back({"chen_chvatal", "fewer lines than points forces a universal line",
                    [](const Instance& i) {
                        if (!i.metric)
                            return not_applicable("chen_chvatal", i, "no metric for instance");
                        return check_chen_chvatal(*i.metric, i.id);
                    }});
    defs.push_back({"br_bound",
                    "distance-2 lines plus bridges reach n on connected bipartite graphs",
                    [](const Instance& i) {
                        if (!i.graph) return not_applicable("br_bound", i, "not a graph instance");
                        return check_br_bound(*i.graph, i.id);
                    }});
    defs.push_back({"notwins_bound",
                    "2-connected bipartite twin-free graphs have at least n distance-2 lines",
                    [](const Instance& i) {
                        if (!i.graph)
                            return not_applicable("notwins_bound", i, "not a graph instance");
                        return check_notwins_bound(*i.graph, i.id);
                    }});
    defs.push_back({"up_bound",
                    "non-universal lines plus universal pairs reach n on 2-metrics",
                    [](const Instance& i) {
                        if (!i.metric)
                            return not_applicable("up_bound", i, "no metric for instance");
                        return check_up_bound(*i.metric, i.id);
                    }});
    defs.push_back({"line_families",
                    "base-point line families: counts, capture, and disjointness",
                    [](const Instance& i) {
                        if (!i.metric)
                            return not_applicable("line_families", i, "no metric for instance");
                        return check_line_families_all(*i.metric, i.id);
                    }});
    defs.push_back({"twin_removal", "line and universal-pair bookkeeping when a twin is removed",
                    [](const Instance& i) {
                        if (!i.metric)
                            return not_applicable("twin_removal", i, "no metric for instance");
                        return check_twin_removal(*i.metric, i.id);
                    }});
    defs.push_back({"structural", "structural facts about distance-2 lines (bundled clauses)",
                    [](const Instance& i) {
                        if (!i.graph)
                            return not_applicable("structural", i, "not a graph instance");
                        return check_structural(*i.graph, i.id);
                    }});
    defs.push_back({"exceptional_graphs",
                    "the six exceptional graphs: ell + br < n with two universal pairs",
                    [](const Instance& i) {
                        const auto& names = exceptional_fixture_names();
                        if (!i.is_fixture ||
                            std::find(names.begin(), names.end(), i.id) == names.end())
                            return not_applicable("exceptional_graphs", i,
                                                  "not one of the six exceptional fixtures");
                        return check_exceptional_graphs(i.id);
                    }});
    return defs;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = build_registry();
    return defs;
}

const CheckDef* find_check(std::string_view name) {
    for (const auto& def : check_registry())
        if (def.name == name) return &def;
    return nullptr;
}

std::int64_t SuiteReport::total_fails() const {
    std::int64_t total = 0;
    for (const auto& [name, tally] : by_check) total += tally.fail;
    return total;
}

namespace {

struct InstanceResult {
    std::vector<Verdict> verdicts;
    std::vector<std::int64_t> durations_ms;
};

InstanceResult run_checks(const Instance& inst, const std::vector<const CheckDef*>& checks,
                          bool timed) {
    InstanceResult r;
    r.verdicts.reserve(checks.size());
    r.durations_ms.reserve(checks.size());
    for (const CheckDef* check : checks) {
        const auto start = std::chrono::steady_clock::now();
        r.verdicts.push_back(check->run(inst));
        const auto stop = std::chrono::steady_clock::now();
        r.durations_ms.push_back(
            timed ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()
                  : 0);
    }
    return r;
}

}  // namespace

SuiteReport run_suite(const InstanceSource& source, const std::vector<const CheckDef*>& checks,
                      const SuiteOptions& options) {
    if (checks.empty()) throw std::invalid_argument("run_suite: need at least one check");
    SuiteReport report;
    for (const CheckDef* c : checks) report.by_check[c->name];  // stable summary rows

    constexpr std::size_t kBatch = 512;
    std::vector<Instance> batch;
    batch.reserve(kBatch);

    auto flush = [&]() {
        if (batch.empty()) return;
        std::vector<InstanceResult> results(batch.size());
        const int jobs = std::max(1, options.jobs);
        if (jobs == 1 || batch.size() == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                results[i] = run_checks(batch[i], checks, options.timings);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::vector<std::thread> workers;
            const int count = std::min<std::size_t>(jobs, batch.size());
            workers.reserve(count);
            for (int t = 0; t < count; ++t)
                workers.emplace_back([&]() {
                    for (std::size_t i = cursor.fetch_add(1); i < batch.size();
                         i = cursor.fetch_add(1))
                        results[i] = run_checks(batch[i], checks, options.timings);
                });
            for (auto& w : workers) w.join();
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            for (std::size_t k = 0; k < results[i].verdicts.size(); ++k) {
                Verdict& v = results[i].verdicts[k];
                CheckTally& tally = report.by_check[v.check];
                switch (v.status) {
                    case Status::Pass: ++tally.pass; break;
                    case Status::Fail: ++tally.fail; break;
                    case Status::Exempt: ++tally.exempt; break;
                    case Status::PreconditionUnmet: ++tally.unmet; break;
                }
                if (options.on_verdict) options.on_verdict(v, results[i].durations_ms[k]);
                if (v.status == Status::Fail) report.failures.push_back(std::move(v));
            }
        }
        batch.clear();
    };

    source([&](Instance&& inst) {
        if (options.max_instances >= 0 && report.instances >= options.max_instances) {
            report.complete = false;
            return false;
        }
        ++report.instances;
        batch.push_back(std::move(inst));
        if (batch.size() >= kBatch) flush();
        return true;
    });
    flush();
    return report;
}

std::string verdict_jsonl(const Verdict& v, bool with_timing, std::int64_t duration_ms) {
    nlohmann::json j;
    j["check"] = v.check;
    j["instance"] = v.instance;
    j["status"] = std::string(status_name(v.status));
    if (!v.witness.is_null()) j["witness"] = v.witness;
    nlohmann::json metrics = nlohmann::json::object();
    for (const auto& [key, value] : v.metrics) metrics[key] = value;
    j["metrics"] = metrics;
    if (with_timing) j["duration_ms"] = duration_ms;
    return j.dump();
}

std::string summary_csv(const SuiteReport& report) {
    std::ostringstream os;
    os << "check,pass,fail,exempt,unmet\n";
    for (const auto& [name, tally] : report.by_check)
        os << name << ',' << tally.pass << ',' << tally.fail << ',' << tally.exempt << ','
           << tally.unmet << '\n';
    return os.str();
}

std::string summary_human(const SuiteReport& report) {
    std::ostringstream os;
    os << "instances: " << report.instances << (report.complete ? "" : " (incomplete run)")
       << '\n';
    for (const auto& [name, tally] : report.by_check) {
        os << "  " << name << ": pass=" << tally.pass << " fail=" << tally.fail
           << " exempt=" << tally.exempt << " unmet=" << tally.unmet << '\n';
    }
    for (const auto& failure : report.failures)
        os << "  FAIL " << failure.check << " on " << failure.instance << ": "
           << failure.witness.dump() << '\n';
    return os.str();
}

}  // namespace mlines
