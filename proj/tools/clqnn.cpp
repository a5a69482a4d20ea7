// Copyright 2026 The clqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// clqnn command-line front end. Every subcommand resolves its parameters from
// built-in defaults, then an optional JSON config (or an earlier manifest),
// then explicit flags, and writes its outputs plus a manifest to --out.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "clqnn/common.hpp"
#include "clqnn/experiments.hpp"
#include "clqnn/io.hpp"
#include "clqnn/rng.hpp"
#include "clqnn/theory.hpp"

#ifndef CLQNN_VERSION
#define CLQNN_VERSION "0.0.0"
#endif

namespace {

using namespace clqnn;

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

enum class Kind { Uint, Real, Text, Flag };

struct Param {
    Param(std::string k, Kind kd, Json d, std::string h)
        : key(std::move(k)), kind(kd), def(std::move(d)), help(std::move(h)) {}

    std::string key;
    Kind kind;
    Json def; // null: optional, or resolved later from --full
    std::string help;
    std::string text; // raw flag value
    bool flag = false;
    CLI::Option *opt = nullptr;
};

struct Command {
    std::string name;
    std::vector<Param> params;
    std::string config_path;
    CLI::App *app = nullptr;
};

std::string flag_name(const std::string &key) {
    std::string s = "--" + key;
    std::replace(s.begin(), s.end(), '_', '-');
    return s;
}

Json convert_text(const Param &p, const std::string &text) {
    const auto bad = [&] {
        return ConfigError("parameter '" + p.key + "': cannot parse '" + text + "'");
    };
    switch (p.kind) {
    case Kind::Uint: {
        std::uint64_t v = 0;
        const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
        if (r.ec != std::errc() || r.ptr != text.data() + text.size()) {
            throw bad();
        }
        return v;
    }
    case Kind::Real: {
        double v = 0.0;
        const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
        if (r.ec != std::errc() || r.ptr != text.data() + text.size()) {
            throw bad();
        }
        return v;
    }
    case Kind::Text:
        return text;
    case Kind::Flag:
        break;
    }
    throw bad();
}

void check_type(const Param &p, const Json &v) {
    if (v.is_null()) {
        return;
    }
    bool ok = false;
    switch (p.kind) {
    case Kind::Uint:
        ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
        break;
    case Kind::Real:
        ok = v.is_number();
        break;
    case Kind::Text:
        ok = v.is_string();
        break;
    case Kind::Flag:
        ok = v.is_boolean();
        break;
    }
    if (!ok) {
        throw ConfigError("config key '" + p.key + "' has the wrong type");
    }
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
}

/// defaults < config file < explicit flags
Json resolve(const Command &cmd) {
    Json cfg = Json::object();
    for (const auto &p : cmd.params) {
        cfg[p.key] = p.def;
    }
    if (!cmd.config_path.empty()) {
        Json file = read_json_file(cmd.config_path);
        // A manifest from an earlier run carries its resolved config.
        if (file.is_object() && file.contains("manifest") && file.contains("config")) {
            if (file.value("command", std::string()) != cmd.name) {
                throw ConfigError("manifest was written by '" +
                                  file.value("command", std::string("?")) + "'");
            }
            file = file["config"];
        }
        if (!file.is_object()) {
            throw ConfigError("config must be a JSON object");
        }
        for (const auto &[key, value] : file.items()) {
            const auto it = std::find_if(cmd.params.begin(), cmd.params.end(),
                                         [&](const Param &p) { return p.key == key; });
            if (it == cmd.params.end()) {
                throw ConfigError("unknown config key '" + key + "'");
            }
            check_type(*it, value);
            cfg[key] = value;
        }
    }
    for (const auto &p : cmd.params) {
        if (p.opt->count() == 0) {
            continue;
        }
        cfg[p.key] = p.kind == Kind::Flag ? Json(p.flag) : convert_text(p, p.text);
    }
    return cfg;
}

void add_params(Command &cmd, std::vector<Param> params) {
    params.push_back({"seed", Kind::Uint, 0, "master seed"});
    params.push_back({"out", Kind::Text, "out", "output directory"});
    params.push_back({"jobs", Kind::Uint, 0, "worker threads (0: all cores)"});
    params.push_back({"full", Kind::Flag, false, "paper-scale sizes"});
    cmd.params = std::move(params);
    for (auto &p : cmd.params) {
        if (p.kind == Kind::Flag) {
            std::string names = flag_name(p.key);
            if (p.def != false) {
                names += ",!--no-" + p.key;
            }
            p.opt = cmd.app->add_flag(names, p.flag, p.help);
        } else {
            p.opt = cmd.app->add_option(flag_name(p.key), p.text, p.help);
        }
    }
    cmd.app->add_option("--config", cmd.config_path, "JSON config or manifest; flags win");
}

std::uint64_t as_uint(const Json &cfg, const char *key) { return cfg.at(key).get<std::uint64_t>(); }

std::size_t as_size(const Json &cfg, const char *key) {
    return static_cast<std::size_t>(as_uint(cfg, key));
}

std::size_t jobs_of(const Json &cfg) {
    const auto j = as_size(cfg, "jobs");
    return j != 0 ? j : std::max(1u, std::thread::hardware_concurrency());
}

std::pair<std::size_t, std::size_t> parse_range(const std::string &text) {
    const auto parse = [&](std::string_view s) {
        std::size_t v = 0;
        const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size()) {
            throw ConfigError("parameter 'n': bad range '" + text + "'");
        }
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = parse(text);
        return {v, v};
    }
    const auto lo = parse(std::string_view(text).substr(0, dots));
    const auto hi = parse(std::string_view(text).substr(dots + 2));
    if (lo > hi) {
        throw ConfigError("parameter 'n': empty range '" + text + "'");
    }
    return {lo, hi};
}

std::vector<Ansatz> parse_ansatz_list(const std::string &text) {
    std::vector<Ansatz> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_ansatz(item));
    }
    if (out.empty()) {
        throw ConfigError("parameter 'ansatz': empty list");
    }
    return out;
}

OptimizerConfig optimizer_of(const Json &cfg, double default_lr_sgd) {
    OptimizerConfig o;
    const auto name = cfg.at("optimizer").get<std::string>();
    if (name == "adam") {
        o.kind = OptimizerKind::Adam;
        o.lr = 0.01;
    } else if (name == "sgd") {
        o.kind = OptimizerKind::Sgd;
        o.lr = default_lr_sgd;
    } else {
        throw ConfigError("parameter 'optimizer': expected adam or sgd, got '" + name + "'");
    }
    if (!cfg.at("lr").is_null()) {
        o.lr = cfg["lr"].get<double>();
    }
    return o;
}

Architecture arch_of(const Json &cfg) {
    Architecture a;
    a.cl_blocks = as_size(cfg, "cl_blocks");
    a.cl_s = as_size(cfg, "cl_s");
    a.inner_layers = as_size(cfg, "inner_layers");
    a.he_layers = as_size(cfg, "he_layers");
    return a;
}

std::vector<Param> arch_params() {
    return {{"cl_blocks", Kind::Uint, 2, "CL blocks L"},
            {"cl_s", Kind::Uint, 1, "controlled qubits S"},
            {"inner_layers", Kind::Uint, 5, "inner HE layers of CL"},
            {"he_layers", Kind::Uint, 10, "HE baseline layers"}};
}

struct Output {
    std::filesystem::path dir;
    Json files = Json::array();

    void write(const std::string &name, const std::string &text) {
        write_text_file(dir / name, text);
        files.push_back(name);
    }
};

/// {manifest, command, version, seed, config, outputs, ...extra}
void write_manifest(Output &out, const std::string &command, const Json &cfg, Json extra) {
    Json m{{"manifest", 1},
           {"command", command},
           {"version", CLQNN_VERSION},
           {"seed", cfg.at("seed")},
           {"config", cfg},
           {"outputs", out.files}};
    for (auto &[k, v] : extra.items()) {
        m[k] = v;
    }
    write_text_file(out.dir / (command + "_manifest.json"), m.dump(2) + "\n");
}

template <class Rec> std::string csv_of(void (*fn)(std::ostream &, std::span<const Rec>),
                                        std::span<const Rec> rows) {
    std::ostringstream s;
    fn(s, rows);
    return s.str();
}

Json final_metrics(const TrainResult &r) {
    Json m{{"iterations", r.records.size()}, {"diverged", r.diverged}};
    if (!r.records.empty()) {
        const auto &last = r.records.back();
        m["final_loss"] = last.loss;
        m["final_grad_norm"] = last.grad_norm;
        if (last.test_error) {
            m["final_test_error"] = *last.test_error;
        }
        if (last.exact_loss) {
            m["final_exact_loss"] = *last.exact_loss;
        }
    }
    if (r.diverged) {
        m["diagnostic"] = r.diagnostic;
    }
    return m;
}

int run_verify_lemmas(const Json &cfg) {
    const auto rep = run_lemma_suite(as_size(cfg, "trials"), as_size(cfg, "nodes"),
                                     as_uint(cfg, "seed"));
    std::cout << "instances " << rep.instances << "\n"
              << "max |lhs-rhs| lemma2 " << format_double(rep.max_deviation_lemma2) << "\n"
              << "max |lhs-rhs| lemma3 " << format_double(rep.max_deviation_lemma3) << "\n"
              << (rep.passed ? "PASS" : "FAIL") << "\n";
    Output out{cfg.at("out").get<std::string>()};
    write_manifest(out, "verify-lemmas", cfg, {{"metrics", to_json(rep)}});
    return rep.passed ? kExitOk : kExitCheck;
}

int run_verify_bounds(const Json &cfg) {
    const auto n = as_size(cfg, "n");
    const auto inner_name = cfg.at("inner").get<std::string>();
    InnerAnsatz inner;
    if (inner_name == "he") {
        inner = InnerAnsatz::hardware_efficient(as_size(cfg, "inner_layers"));
    } else if (inner_name != "tensor") {
        throw ConfigError("parameter 'inner': expected tensor or he, got '" + inner_name + "'");
    }
    if (n < 1) {
        throw ConfigError("parameter 'n' must be positive");
    }
    const auto c = build_cl_qnn(n, as_size(cfg, "s"), as_size(cfg, "l"), inner);
    const auto sigma = PauliString::parse("Z" + std::string(n - 1, 'I'));
    const auto input = PureState::basis(n, 0);
    const auto samples = as_size(cfg, "samples");
    const auto jobs = jobs_of(cfg);
    auto rng_f = make_rng(as_uint(cfg, "seed"), {0});
    auto rng_g = make_rng(as_uint(cfg, "seed"), {1});
    const auto f = mc_expected_f_sq(c, sigma, input, samples, rng_f, jobs);
    const auto g = mc_expected_grad_norm_sq(c, sigma, input, samples, rng_g, jobs);

    const Json report{{"f_sq", to_json(f)}, {"grad_norm_sq", to_json(g)}};
    std::cout << report.dump(2) << "\n";
    Output out{cfg.at("out").get<std::string>()};
    out.write("bounds.json", report.dump(2) + "\n");
    write_manifest(out, "verify-bounds", cfg,
                   {{"budgets", to_json(gate_budget(c))},
                    {"bounds", {{"f_sq", f.bound}, {"grad_norm_sq", g.bound}}},
                    {"metrics", report}});
    return f.passed && g.passed ? kExitOk : kExitCheck;
}

int run_toy(const Json &cfg) {
    ToyScanConfig tc;
    std::string range = cfg.at("n").is_null()
                            ? (cfg.at("full").get<bool>() ? "3..20" : "3..12")
                            : cfg["n"].get<std::string>();
    std::tie(tc.n_min, tc.n_max) = parse_range(range);
    tc.ansatze = parse_ansatz_list(cfg.at("ansatz").get<std::string>());
    tc.rounds = as_size(cfg, "rounds");
    if (!cfg.at("noise").is_null()) {
        tc.noise_q = cfg["noise"].get<double>();
    }
    const auto init = cfg.at("init").get<std::string>();
    if (init == "uniform") {
        tc.init = InitKind::Uniform;
    } else if (init == "haar") {
        tc.init = InitKind::HaarLocal;
    } else {
        throw ConfigError("parameter 'init': expected uniform or haar, got '" + init + "'");
    }
    // Noisy gradients cost P density-matrix runs each, so they are opt-in.
    tc.gradients = cfg.at("gradients").is_null() ? !tc.noise_q.has_value()
                                                 : cfg["gradients"].get<bool>();
    tc.arch = arch_of(cfg);
    tc.seed = as_uint(cfg, "seed");
    tc.jobs = jobs_of(cfg);

    Json resolved = cfg;
    resolved["n"] = range;
    resolved["gradients"] = tc.gradients;
    const auto res = toy_scan(tc);

    Output out{cfg.at("out").get<std::string>()};
    out.write("toy_samples.csv", csv_of<ToySample>(write_toy_samples_csv, res.samples));
    out.write("toy_summary.csv", csv_of<ToyRow>(write_toy_rows_csv, res.rows));

    bool ok = true;
    Json bounds = Json::array();
    for (const auto &r : res.rows) {
        if (r.bound_f_sq) {
            const bool f_ok = r.mean_f_sq >= *r.bound_f_sq - 3.0 * r.stderr_f_sq;
            bool g_ok = true;
            if (r.mean_grad_sq && r.bound_grad_sq) {
                g_ok = *r.mean_grad_sq >= *r.bound_grad_sq - 3.0 * *r.stderr_grad_sq;
            }
            ok = ok && f_ok && g_ok;
            bounds.push_back({{"n", r.num_qubits},
                              {"bound_f_sq", *r.bound_f_sq},
                              {"bound_grad_sq", r.bound_grad_sq ? Json(*r.bound_grad_sq) : Json()},
                              {"passed", f_ok && g_ok}});
        }
    }
    write_manifest(out, "toy", resolved,
                   {{"bounds", bounds}, {"metrics", {{"rows", res.rows.size()}}}});
    std::cout << "wrote " << res.rows.size() << " rows to " << out.dir.string() << "\n";
    return ok ? kExitOk : kExitCheck;
}

TrainConfig train_of(const Json &cfg, double default_lr_sgd) {
    TrainConfig t;
    t.iterations = as_size(cfg, "iterations");
    t.shots_per_term = as_uint(cfg, "shots");
    t.seed = as_uint(cfg, "seed");
    t.optimizer = optimizer_of(cfg, default_lr_sgd);
    return t;
}

int run_ising(const Json &cfg) {
    IsingConfig ic;
    const bool full = cfg.at("full").get<bool>();
    ic.num_qubits = cfg.at("n").is_null() ? (full ? 16 : 10) : as_size(cfg, "n");
    ic.blocks = cfg.at("blocks").is_null() ? (full ? 6 : 4) : as_size(cfg, "blocks");
    ic.s = as_size(cfg, "s");
    ic.ansatz = parse_ansatz(cfg.at("ansatz").get<std::string>());
    ic.train = train_of(cfg, 0.15);

    Json resolved = cfg;
    resolved["n"] = ic.num_qubits;
    resolved["blocks"] = ic.blocks;
    resolved["lr"] = ic.train.optimizer.lr;
    const auto res = ising_experiment(ic);

    Output out{cfg.at("out").get<std::string>()};
    out.write("ising.csv", csv_of<RunRecord>(write_records_csv, res.run.records));
    Json metrics = final_metrics(res.run);
    metrics["params"] = res.params;
    Json bounds = Json::object();
    if (res.ground_energy) {
        bounds["ground_energy"] = *res.ground_energy;
    }
    write_manifest(out, "ising", resolved,
                   {{"budgets", to_json(res.budget)}, {"bounds", bounds}, {"metrics", metrics}});
    std::cout << "final loss " << format_double(res.run.records.back().loss) << "\n";
    return res.run.diverged ? kExitCheck : kExitOk;
}

std::optional<std::pair<int, int>> parse_classes(const Json &v) {
    if (v.is_null()) {
        return std::nullopt;
    }
    const auto text = v.get<std::string>();
    int a = 0;
    int b = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> a >> comma >> b) || comma != ',' || !in.eof()) {
        throw ConfigError("parameter 'classes': expected A,B, got '" + text + "'");
    }
    return std::make_pair(a, b);
}

int run_wine(Json cfg) {
    if (cfg.at("data").is_null()) {
        const char *env = std::getenv("WINE_DATA");
        if (env == nullptr || *env == '\0') {
            throw DataError("no wine data: pass --data or set WINE_DATA");
        }
        cfg["data"] = env;
    }
    const auto data = load_wine(cfg["data"].get<std::string>(), parse_classes(cfg.at("classes")),
                                as_uint(cfg, "seed"));
    cfg["classes"] = std::to_string(data.classes.first) + "," +
                     std::to_string(data.classes.second);
    WineConfig wc;
    wc.ansatz = parse_ansatz(cfg.at("ansatz").get<std::string>());
    wc.arch = arch_of(cfg);
    wc.train = train_of(cfg, 0.01);
    wc.train.batch_size = as_size(cfg, "batch");
    wc.jobs = jobs_of(cfg);
    cfg["lr"] = wc.train.optimizer.lr;
    const auto res = classification_experiment(data, wc);

    Output out{cfg.at("out").get<std::string>()};
    out.write("wine.csv", csv_of<RunRecord>(write_records_csv, res.run.records));
    Json metrics = final_metrics(res.run);
    metrics["params"] = res.params;
    write_manifest(out, "wine", cfg, {{"budgets", to_json(res.budget)}, {"metrics", metrics}});
    std::cout << "final loss " << format_double(res.run.records.back().loss) << ", test error "
              << format_double(res.run.records.back().test_error.value_or(0.0)) << "\n";
    return res.run.diverged ? kExitCheck : kExitOk;
}

int run_bloch(const Json &cfg) {
    const auto name = cfg.at("mode").get<std::string>();
    BlochMode mode;
    if (name == "uniform") {
        mode = BlochMode::UniformAngles;
    } else if (name == "haar") {
        mode = BlochMode::HaarLocal;
    } else {
        throw ConfigError("parameter 'mode': expected uniform or haar, got '" + name + "'");
    }
    auto rng = make_rng(as_uint(cfg, "seed"), {});
    const auto pts = bloch_sample(mode, as_size(cfg, "samples"), rng);
    const double var = z_variance(pts);
    Output out{cfg.at("out").get<std::string>()};
    out.write("bloch.csv", csv_of<BlochVector>(write_bloch_csv, pts));
    write_manifest(out, "bloch", cfg, {{"metrics", {{"z_variance", var}}}});
    std::cout << "z variance " << format_double(var) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"clqnn: controlled-layer QNN experiments"};
    app.require_subcommand(1);
    app.set_version_flag("--version", CLQNN_VERSION);

    std::map<std::string, Command> cmds;
    const auto make = [&](const std::string &name, const std::string &help,
                          std::vector<Param> params) {
        auto &cmd = cmds[name];
        cmd.name = name;
        cmd.app = app.add_subcommand(name, help);
        add_params(cmd, std::move(params));
    };
    make("verify-lemmas", "randomized check of the twirl identities",
         {{"trials", Kind::Uint, 100, "instances per matrix size"},
          {"nodes", Kind::Uint, kDefaultNodes, "quadrature nodes"}});
    make("verify-bounds", "Monte Carlo check of the f^2 and gradient lower bounds",
         {{"n", Kind::Uint, 4, "qubits"},
          {"l", Kind::Uint, 2, "CL blocks"},
          {"s", Kind::Uint, 1, "controlled qubits"},
          {"samples", Kind::Uint, 2000, "Monte Carlo draws"},
          {"inner", Kind::Text, "tensor", "inner ansatz: tensor or he"},
          {"inner_layers", Kind::Uint, 1, "inner HE layers when --inner he"}});
    auto toy = arch_params();
    toy.insert(toy.begin(),
               {{"ansatz", Kind::Text, "cl,he,random", "comma list of cl, he, random"},
                {"n", Kind::Text, nullptr, "qubit range A..B (default 3..12, 3..20 with --full)"},
                {"rounds", Kind::Uint, 100, "random draws per (N, ansatz)"},
                {"noise", Kind::Real, nullptr, "depolarizing q; enables density matrices"},
                {"init", Kind::Text, "uniform", "uniform or haar"},
                {"gradients", Kind::Flag, nullptr, "record exact gradient norms (default: off under noise)"}});
    make("toy", "scan f^2 and gradient norms over N", std::move(toy));
    make("ising", "train on the transverse-field Ising model",
         {{"n", Kind::Uint, nullptr, "qubits (default 10, 16 with --full)"},
          {"blocks", Kind::Uint, nullptr, "CL blocks (default 4, 6 with --full)"},
          {"s", Kind::Uint, 1, "controlled qubits"},
          {"ansatz", Kind::Text, "cl", "cl or random"},
          {"optimizer", Kind::Text, "adam", "adam or sgd"},
          {"lr", Kind::Real, nullptr, "learning rate (adam 0.01, sgd 0.15)"},
          {"iterations", Kind::Uint, 200, "training iterations"},
          {"shots", Kind::Uint, 100, "shots per Pauli term"}});
    auto wine = arch_params();
    wine.insert(wine.begin(),
                {{"data", Kind::Text, nullptr, "wine file (default $WINE_DATA)"},
                 {"classes", Kind::Text, nullptr, "class pair A,B (default first two in file)"},
                 {"ansatz", Kind::Text, "cl", "cl, he or random"},
                 {"optimizer", Kind::Text, "adam", "adam or sgd"},
                 {"lr", Kind::Real, nullptr, "learning rate (default 0.01)"},
                 {"iterations", Kind::Uint, 200, "training iterations"},
                 {"shots", Kind::Uint, 100, "shots per expectation"},
                 {"batch", Kind::Uint, 8, "batch size"}});
    make("wine", "binary wine classification", std::move(wine));
    make("bloch", "sample single-qubit Bloch vectors",
         {{"mode", Kind::Text, "uniform", "uniform or haar"},
          {"samples", Kind::Uint, 100000, "points"}});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (auto &[name, cmd] : cmds) {
            if (!cmd.app->parsed()) {
                continue;
            }
            const Json cfg = resolve(cmd);
            if (name == "verify-lemmas") return run_verify_lemmas(cfg);
            if (name == "verify-bounds") return run_verify_bounds(cfg);
            if (name == "toy") return run_toy(cfg);
            if (name == "ising") return run_ising(cfg);
            if (name == "wine") return run_wine(cfg);
            if (name == "bloch") return run_bloch(cfg);
        }
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const DataError &e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheck;
    }
    return kExitUsage;
}
