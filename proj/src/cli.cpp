#include "qbw/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <regex>
#include <sstream>

#include "qbw/verify.hpp"

namespace qbw {

namespace {

using json = nlohmann::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const char* kReportSchema = "qbw-report/1";

const char* format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return "text";
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
    }
    return "?";
}

ExitCode exit_for(Status s) {
    switch (s) {
        case Status::pass: return ExitCode::pass;
        case Status::fail: return ExitCode::fail;
        case Status::inconclusive: return ExitCode::inconclusive;
    }
    return ExitCode::fail;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string theta_text(const Subset& th) {
    std::string s = "{";
    for (std::size_t k = 0; k < th.size(); ++k) s += (k ? "," : "") + std::to_string(th[k] + 1);
    return s + "}";
}

int coord_sum(const Weight& w) {
    int s = 0;
    for (int x : w) s += x;
    return s;
}

const CartanData& algebra_of(const JobConfig& cfg) {
    const std::string name = cfg.algebra.value_or("A1");
    const auto& names = supported_algebras();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unsupported algebra '" + name + "' (expected A1, A2, A3 or B2)");
    return CartanData::get(name);
}

Weight weight_arg(const CartanData& cd, const std::optional<std::string>& text, const char* flag) {
    if (!text) throw UsageError(std::string("missing ") + flag);
    Weight w;
    try {
        w = parse_weight(*text);
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + flag + " '" + *text + "'");
    }
    if (static_cast<int>(w.size()) != cd.rank())
        throw UsageError(std::string(flag) + " needs " + std::to_string(cd.rank()) + " coordinates");
    return w;
}

Weight dominant_arg(const CartanData& cd, const std::optional<std::string>& text, const char* flag) {
    Weight w = weight_arg(cd, text, flag);
    for (int x : w)
        if (x < 0) throw UsageError(std::string(flag) + " must be dominant, got " + weight_to_string(w));
    return w;
}

Subset theta_arg(const CartanData& cd, const std::string& text) {
    Subset th;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" ") == std::string::npos) continue;
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(tok, &used);
            if (tok.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("cannot parse --theta '" + text + "'");
        }
        if (i < 1 || i > cd.rank()) throw UsageError("--theta index " + std::to_string(i) + " out of range");
        th.push_back(i - 1);
    }
    std::sort(th.begin(), th.end());
    th.erase(std::unique(th.begin(), th.end()), th.end());
    return th;
}

std::shared_ptr<const Store> store_for(const JobConfig& cfg) {
    if (cfg.cache_dir.empty()) return nullptr;
    return std::make_shared<Store>(cfg.cache_dir);
}

json envelope(const char* command, const JobConfig& cfg) {
    return {{"schema", kReportSchema}, {"command", command}, {"config", cfg.to_json()}};
}

void print_json(std::ostream& out, const json& j) {
    out << j.dump(2) << "\n";
}

void print_checks_text(std::ostream& out, const Report& r) {
    for (const auto& c : r.checks) out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "\n";
}

void print_checks_csv(std::ostream& out, const std::string& subject, const Report& r) {
    for (const auto& c : r.checks)
        out << csv_field(subject) << "," << csv_field(c.name) << "," << (c.pass ? "pass" : "fail") << "\n";
}

// ----------------------------------------------------------------- irrep

int cmd_irrep(const JobConfig& cfg, std::ostream& out) {
    const CartanData& cd = algebra_of(cfg);
    const Weight l = dominant_arg(cd, cfg.weight, "--weight");
    Algebra A(cd, store_for(cfg));
    auto m = A.irrep(l);
    auto rel = check_serre(*m);
    const RationalFunction dq = quantum_dimension(*m);
    const bool bar = dq.bar() == dq;
    const long weyl = weyl_dim(cd, l);
    const bool pass = rel.all_pass() && bar && static_cast<long>(m->dim()) == weyl;
    const Status st = pass ? Status::pass : Status::fail;
    switch (cfg.format) {
        case OutputFormat::json: {
            json j = envelope("irrep", cfg);
            j["lambda"] = l;
            j["dim"] = m->dim();
            j["weyl_dim"] = weyl;
            j["quantum_dimension"] = dq.to_string();
            j["bar_invariant"] = bar;
            if (cfg.v0) j["quantum_dimension_at_v0"] = specialize(dq, *cfg.v0).to_string();
            j["relations"] = {{"pass", rel.all_pass()}, {"failures", rel.failures()}};
            j["module"] = irrep_to_json(*m);
            j["status"] = status_name(st);
            print_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "index,weight\n";
            for (std::size_t b = 0; b < m->dim(); ++b)
                out << b + 1 << "," << csv_field(weight_to_string(m->weights[b])) << "\n";
            break;
        case OutputFormat::text: {
            out << "W" << weight_to_string(l) << " of " << cd.name() << "\n";
            out << "dim " << m->dim() << " (Weyl dimension " << weyl << ")\n";
            out << "weights:";
            for (const auto& w : m->weights) out << " " << weight_to_string(w);
            out << "\nquantum dimension: " << dq.to_string() << "\n";
            if (cfg.v0)
                out << "quantum dimension at v0=" << rational_to_string(*cfg.v0) << ": "
                    << specialize(dq, *cfg.v0).to_string() << "\n";
            out << "bar invariant: " << (bar ? "yes" : "no") << "\n";
            out << "relations: " << (rel.all_pass() ? "pass" : "FAIL") << "\n";
            for (const auto& f : rel.failures()) out << "  failed: " << f << "\n";
            break;
        }
    }
    return static_cast<int>(exit_for(st));
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::vector<std::string> checks;
    std::optional<int> max_weight;
    std::uint64_t seed = VerifyOptions{}.seed;
};

int cmd_verify(const JobConfig& cfg, const VerifyArgs& va, std::ostream& out) {
    VerifyOptions opt;
    for (const auto& c : va.checks) {
        if (!is_suite(c)) throw UsageError("unknown check '" + c + "'");
        opt.suites.push_back(c);
    }
    if (cfg.algebra) {
        algebra_of(cfg);
        opt.algebras = {*cfg.algebra};
    }
    if (va.max_weight && *va.max_weight < 0) throw UsageError("--max-weight must be >= 0");
    opt.max_weight = va.max_weight;
    if (cfg.v0) opt.v0 = *cfg.v0;
    opt.seed = va.seed;
    opt.detail = std::find(va.checks.begin(), va.checks.end(), "schur") != va.checks.end();
    opt.store = store_for(cfg);
    VerifyResult res = run_verify(opt);
    switch (cfg.format) {
        case OutputFormat::json: {
            json j = envelope("verify", cfg);
            for (auto& [k, v] : res.report.items())
                if (k != "schema" && k != "command") j[k] = v;
            print_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "suite,check,pass\n";
            for (const auto& s : res.report["suites"])
                for (const auto& c : s["checks"])
                    out << csv_field(s["subject"].get<std::string>()) << "," << csv_field(c["name"].get<std::string>())
                        << "," << (c["pass"].get<bool>() ? "pass" : "fail") << "\n";
            break;
        case OutputFormat::text:
            for (const auto& s : res.report["suites"]) {
                std::size_t n = s["checks"].size(), bad = 0;
                for (const auto& c : s["checks"]) bad += !c["pass"].get<bool>();
                out << s["subject"].get<std::string>() << ": " << s["status"].get<std::string>() << " (" << n
                    << " checks";
                if (bad) out << ", " << bad << " failed";
                out << ")\n";
                for (const auto& c : s["checks"])
                    if (!c["pass"].get<bool>()) out << "  FAIL  " << c["name"].get<std::string>() << "\n";
                if (s["data"].contains("table")) {
                    out << "  algebra lambda mu variant i j r s value\n";
                    for (const auto& e : s["data"]["table"]) {
                        out << "  " << e["algebra"].get<std::string>() << " "
                            << weight_to_string(e["lambda"].get<Weight>()) << " "
                            << weight_to_string(e["mu"].get<Weight>()) << " " << e["variant"].get<std::string>();
                        for (const auto& x : e["index"]) out << " " << x.get<int>();
                        out << " " << e["value"].get<std::string>() << "\n";
                    }
                }
            }
            out << "status: " << status_name(res.status) << "\n";
            break;
    }
    return static_cast<int>(exit_for(res.status));
}

// -------------------------------------------------------------- sections

int cmd_sections(const JobConfig& cfg, const std::string& vspec, std::ostream& out) {
    const CartanData& cd = algebra_of(cfg);
    const Subset th = theta_arg(cd, cfg.theta);
    const Weight mu = vspec == "trivial" ? cd.zero() : weight_arg(cd, vspec, "--v");
    if (!is_theta_dominant(mu, th)) throw UsageError("--v must be theta-dominant, got " + weight_to_string(mu));
    const int h = cfg.trunc.value_or(2);
    if (h < 0) throw UsageError("--trunc must be >= 0");
    Algebra A(cd, store_for(cfg));
    ParabolicData p(cd, th);
    auto V = A.levi(mu, th);
    json rows = json::array();
    bool ok = true;
    for (const auto& l : dominant_weights_upto(cd, h)) {
        auto levi = sections_direct(A, V, p, l, HomFlavor::levi);
        auto par = sections_direct(A, V, p, l, HomFlavor::parabolic);
        for (const auto& z : levi) ok = ok && satisfies_defining_property(A, z, p.levi_generators);
        rows.push_back({{"lambda", l}, {"dim_W", weyl_dim(cd, l)}, {"sections", levi.size()}, {"holomorphic", par.size()}});
    }
    const Status st = ok ? Status::pass : Status::fail;
    switch (cfg.format) {
        case OutputFormat::json: {
            json j = envelope("sections", cfg);
            j["V"] = {{"mu", mu}, {"dim", V->dim()}};
            j["pieces"] = rows;
            j["status"] = status_name(st);
            print_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "lambda,dim_W,sections,holomorphic\n";
            for (const auto& r : rows)
                out << csv_field(weight_to_string(r["lambda"].get<Weight>())) << "," << r["dim_W"] << ","
                    << r["sections"] << "," << r["holomorphic"] << "\n";
            break;
        case OutputFormat::text:
            out << "sections of V" << weight_to_string(mu) << " (dim " << V->dim() << ") on " << cd.name()
                << ", theta=" << theta_text(th) << ", truncation height " << h << "\n";
            out << "lambda      dim W   F_q piece   O_q piece\n";
            for (const auto& r : rows) {
                std::string lw = weight_to_string(r["lambda"].get<Weight>());
                lw.resize(std::max<std::size_t>(lw.size(), 12), ' ');
                out << lw << r["dim_W"].dump() << "\t" << r["sections"].dump() << "\t" << r["holomorphic"].dump() << "\n";
            }
            out << "status: " << status_name(st) << "\n";
            break;
    }
    return static_cast<int>(exit_for(st));
}

// ----------------------------------------------------- reports of bundle

int print_report(const char* command, const JobConfig& cfg, const Report& rep, const std::string& headline,
                 std::ostream& out) {
    switch (cfg.format) {
        case OutputFormat::json: {
            json j = envelope(command, cfg);
            j["report"] = rep.to_json();
            j["status"] = status_name(rep.status);
            print_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "subject,check,pass\n";
            print_checks_csv(out, rep.subject, rep);
            break;
        case OutputFormat::text:
            out << headline << "\n";
            print_checks_text(out, rep);
            if (rep.data.contains("reason")) out << "reason: " << rep.data["reason"].get<std::string>() << "\n";
            out << "status: " << status_name(rep.status) << "\n";
            break;
    }
    return static_cast<int>(exit_for(rep.status));
}

int cmd_borel_weil(const JobConfig& cfg, std::ostream& out) {
    const CartanData& cd = algebra_of(cfg);
    const Subset th = theta_arg(cd, cfg.theta);
    const Weight mu = weight_arg(cd, cfg.mu, "--mu");
    if (!is_theta_dominant(mu, th)) throw UsageError("--mu must be theta-dominant, got " + weight_to_string(mu));
    const Weight m = -levi_lowest_weight(cd, mu, th);
    const bool dominant = std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
    int h = dominant ? coord_sum(dagger(cd, m)) : 1;
    if (cfg.trunc) h = *cfg.trunc;
    if (h < 0) throw UsageError("--trunc must be >= 0");
    Algebra A(cd, store_for(cfg));
    auto rep = borel_weil_check(A, A.levi(mu, th), ParabolicData(cd, th), TruncationPolicy::up_to(h));
    std::ostringstream head;
    head << "O_q(V" << weight_to_string(mu) << ") on " << cd.name() << ", theta=" << theta_text(th)
         << ", truncation height " << h << ": ";
    if (rep.status == Status::inconclusive)
        head << "inconclusive";
    else if (rep.data.value("dim", 0) == 0)
        head << "zero, dim 0";
    else
        head << "isomorphic to W" << weight_to_string(rep.data["nu"].get<Weight>()) << ", dim "
             << rep.data["dim"].get<long>();
    return print_report("borel-weil", cfg, rep, head.str(), out);
}

int cmd_frobenius(const JobConfig& cfg, std::ostream& out) {
    const CartanData& cd = algebra_of(cfg);
    const Subset th = theta_arg(cd, cfg.theta);
    const Weight l = dominant_arg(cd, cfg.weight, "--weight");
    const Weight mu = weight_arg(cd, cfg.mu, "--mu");
    if (!is_theta_dominant(mu, th)) throw UsageError("--mu must be theta-dominant, got " + weight_to_string(mu));
    const int h = cfg.trunc.value_or(coord_sum(l));
    if (h < 0) throw UsageError("--trunc must be >= 0");
    Algebra A(cd, store_for(cfg));
    auto rep = frobenius_maps(A, *A.irrep(l), A.levi(mu, th), ParabolicData(cd, th), TruncationPolicy::up_to(h));
    std::ostringstream head;
    head << "Hom(W" << weight_to_string(l) << ", F_q(V" << weight_to_string(mu) << ")) on " << cd.name()
         << ", theta=" << theta_text(th) << ": dim " << rep.data.value("dim_module_hom", 0)
         << ", levi hom dim " << rep.data.value("dim_levi_hom", 0);
    return print_report("frobenius", cfg, rep, head.str(), out);
}

// ------------------------------------------------------------------ haar

// [star |S ]* t(a,b)[i,j], indices 1-based
CoeffElement parse_coeff(const Algebra& A, const std::string& text) {
    static const std::regex re(R"(^\s*((?:(?:star|S)\s+)*)t\(\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\)\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw UsageError("cannot parse coefficient '" + text + "'");
    const CartanData& cd = A.cd();
    const Weight l = dominant_arg(cd, m[2].str(), "coefficient weight");
    const std::size_t d = A.irrep(l)->dim();
    const long i = std::stol(m[3].str()), j = std::stol(m[4].str());
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > d || static_cast<std::size_t>(j) > d)
        throw UsageError("index out of range in '" + text + "' (dim " + std::to_string(d) + ")");
    CoeffElement a = CoeffElement::t(l, i - 1, j - 1);
    std::vector<std::string> ops;
    std::stringstream ss(m[1].str());
    for (std::string op; ss >> op;) ops.push_back(op);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) a = *it == "star" ? star(A, a) : antipode(A, a);
    return a;
}

int cmd_haar(const JobConfig& cfg, const std::vector<std::string>& pair, std::ostream& out) {
    const CartanData& cd = algebra_of(cfg);
    if (pair.empty() || pair.size() > 2) throw UsageError("--pair takes one or two coefficients");
    Algebra A(cd, store_for(cfg));
    CoeffElement a = parse_coeff(A, pair[0]);
    CoeffElement prod = a;
    if (pair.size() == 2) prod = product(A, a, parse_coeff(A, pair[1]));
    const RationalFunction value = haar(prod);
    std::optional<std::string> num;
    if (cfg.v0) num = specialize(value, *cfg.v0).to_string();
    switch (cfg.format) {
        case OutputFormat::json: {
            json j = envelope("haar", cfg);
            j["pair"] = pair;
            j["value"] = value.to_string();
            j["value_at_v0"] = num ? json(*num) : json();
            j["status"] = "pass";
            print_json(out, j);
            break;
        }
        case OutputFormat::csv:
            out << "quantity,value\n";
            out << "value," << csv_field(value.to_string()) << "\n";
            if (num) out << "value_at_v0," << csv_field(*num) << "\n";
            break;
        case OutputFormat::text:
            out << "integral: " << value.to_string() << "\n";
            if (num) out << "at v0=" << rational_to_string(*cfg.v0) << ": " << *num << "\n";
            break;
    }
    return 0;
}

void add_job_options(CLI::App& app, JobConfig& cfg, std::string& v0, std::string& format) {
    app.add_option("--algebra", cfg.algebra, "A1, A2, A3 or B2");
    app.add_option("--weight", cfg.weight, "highest weight, fundamental coordinates, e.g. 1,1");
    app.add_option("--theta", cfg.theta, "simple roots of the Levi factor, 1-based, e.g. 1 or 1,2; empty for the Borel");
    app.add_option("--mu", cfg.mu, "weight of the Levi module V_mu");
    app.add_option("--trunc", cfg.trunc, "truncation height (sum of fundamental coordinates)");
    app.add_option("--v0", v0, "positive rational specialization of v");
    app.add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--cache-dir", cfg.cache_dir, "content-addressed cache directory")->envname("QBW_CACHE_DIR");
}

}  // namespace

json JobConfig::to_json() const {
    json j;
    j["algebra"] = algebra ? json(*algebra) : json();
    j["weight"] = weight ? json(*weight) : json();
    json th = json::array();
    if (!theta.empty()) {
        std::stringstream ss(theta);
        for (std::string tok; std::getline(ss, tok, ',');)
            if (tok.find_first_not_of(' ') != std::string::npos) th.push_back(std::stoi(tok));
    }
    j["theta"] = th;
    j["mu"] = mu ? json(*mu) : json();
    j["trunc"] = trunc ? json(*trunc) : json();
    j["v0"] = v0 ? json(rational_to_string(*v0)) : json();
    j["format"] = format_name(format);
    return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with quantized enveloping algebras, matrix coefficients and sections"};
    app.name(args.empty() ? "qbw" : args[0]);
    app.set_config("--config", "", "TOML or INI file with option defaults; command-line flags win");
    app.require_subcommand(1);
    app.fallthrough();

    JobConfig cfg;
    std::string v0, format = "text";
    add_job_options(app, cfg, v0, format);

    VerifyArgs va;
    std::string vspec = "trivial";
    std::vector<std::string> pair;
    auto* irrep = app.add_subcommand("irrep", "build W(lambda): dimension, weights, quantum dimension, relations");
    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--check", va.checks, "suites to run (default: all)")->delimiter(',');
    verify->add_option("--max-weight", va.max_weight, "cap on the coordinate sum of grid weights");
    verify->add_option("--seed", va.seed, "seed of the sampled elements");
    auto* sections = app.add_subcommand("sections", "graded dimensions of F_q(V) and O_q(V)");
    sections->add_option("--v", vspec, "trivial, or the highest weight of the Levi module V");
    auto* bw = app.add_subcommand("borel-weil", "O_q(V_mu) and its identification with an irrep");
    auto* frob = app.add_subcommand("frobenius", "Hom(W, F_q(V)) against Hom_l(W, V)");
    auto* haar_cmd = app.add_subcommand("haar", "Haar integral of a coefficient or of a product of two");
    haar_cmd->add_option("--pair", pair, "one or two coefficients like \"t(1)[1,1]\" or \"star t(1)[1,2]\"")
        ->expected(1, 2)
        ->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitCode::pass);
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitCode::pass);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return static_cast<int>(ExitCode::usage);
    }
    try {
        if (!v0.empty()) {
            Rational r;
            try {
                r = parse_rational(v0);
            } catch (const std::exception&) {
                throw UsageError("cannot parse --v0 '" + v0 + "'");
            }
            if (sgn(r) <= 0 || r == 1) throw UsageError("--v0 must be positive and different from 1");
            cfg.v0 = r;
        }
        cfg.format = format == "json" ? OutputFormat::json : format == "csv" ? OutputFormat::csv : OutputFormat::text;
        if (cfg.trunc && *cfg.trunc < 0) throw UsageError("--trunc must be >= 0");
        if (*irrep) return cmd_irrep(cfg, out);
        if (*verify) return cmd_verify(cfg, va, out);
        if (*sections) return cmd_sections(cfg, vspec, out);
        if (*bw) return cmd_borel_weil(cfg, out);
        if (*frob) return cmd_frobenius(cfg, out);
        if (*haar_cmd) return cmd_haar(cfg, pair, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    } catch (const CacheIntegrityError& e) {
        err << "cache integrity error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::cache_integrity);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::usage);
    }
    return static_cast<int>(ExitCode::usage);
}

}  // namespace qbw
