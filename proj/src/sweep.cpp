#include "sweep.hpp"
#include <cstring>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "errata.hpp"
#include "errors.hpp"

namespace linklab::sweep {

using analytic::Method;
using analytic::MetricKind;
using json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

int find_line(const std::string& text, const std::string& key) {
    const auto pos = text.find("\"" + key + "\"");
    if (pos == std::string::npos) return 0;
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + pos, '\n'));
}

[[noreturn]] void fail_key(const std::string& text, const std::string& key,
                           const std::string& why) {
    const int line = find_line(text, key);
    std::string msg = "config error at key \"" + key + "\"";
    if (line > 0) msg += " (line " + std::to_string(line) + ")";
    msg += ": " + why;
    throw parse_error(msg, key, line);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t mix_string(std::uint64_t h, const std::string& s) {
    for (char c : s) h = splitmix64(h ^ static_cast<unsigned char>(c));
    return h;
}

struct FamilyValue {
    int n_users;
    Regime regime;
};

}  // namespace

std::vector<double> default_gamma_grid() {
    std::vector<double> g;
    for (int d = 0; d <= 45; ++d) g.push_back(d);
    return g;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed";
        case Method::Quadrature: return "quad";
        case Method::MonteCarlo: return "mc";
    }
    return "?";
}

const char* metric_name(MetricKind k) {
    return k == MetricKind::Outage ? "outage" : "ber";
}

std::string Regime::tag() const {
    switch (kind) {
        case Kind::ModerateGg: return "moderate-gg";
        case Kind::StrongGg: return "strong-gg";
        case Kind::CustomGg:
            return "gg-a" + fmt(alpha) + "-b" + fmt(beta) + "-xi" + fmt(xi);
        case Kind::NegExp: return "negexp-l" + fmt(lambda);
    }
    return "?";
}

channels::TurbulenceModel Regime::model(double mean_snr) const {
    if (kind == Kind::NegExp)
        return {channels::NegExpTurbulence(lambda), mean_snr};
    if (kappa > 0.0)
        return {channels::GammaGammaPointing(alpha, beta, xi, kappa), mean_snr};
    return {channels::GammaGammaPointing(alpha, beta, xi), mean_snr};
}

Regime Regime::named(const std::string& name) {
    Regime r;
    if (name == "moderate-gg") {
        r.kind = Kind::ModerateGg;
        r.alpha = 4.0; r.beta = 1.9; r.xi = 10.45;
    } else if (name == "strong-gg") {
        r.kind = Kind::StrongGg;
        r.alpha = 4.2; r.beta = 1.4; r.xi = 2.45;
    } else if (name == "negexp") {
        r.kind = Kind::NegExp;
    } else {
        throw parse_error("unknown regime \"" + name + "\"", "regime");
    }
    return r;
}

namespace {

void check_keys(const std::string& text, const json& obj, const char* where,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) { ok = true; break; }
        if (!ok)
            fail_key(text, key, std::string("unknown key in ") + where);
    }
}

double get_number(const std::string& text, const json& j, const std::string& key,
                  double lo, double hi) {
    if (!j.at(key).is_number()) fail_key(text, key, "expected a number");
    const double v = j.at(key).get<double>();
    if (!(v >= lo && v <= hi))
        fail_key(text, key, "value " + fmt(v) + " out of range [" + fmt(lo) + ", " + fmt(hi) + "]");
    return v;
}

Regime parse_regime(const std::string& text, const json& j) {
    if (!j.contains("regime")) fail_key(text, "regime", "missing required key");
    if (!j.at("regime").is_string()) fail_key(text, "regime", "expected a string");
    const std::string name = j.at("regime").get<std::string>();
    if (name == "gg") {
        if (!j.contains("gg")) fail_key(text, "gg", "regime \"gg\" needs a gg parameter object");
        const json& g = j.at("gg");
        check_keys(text, g, "gg", {"alpha", "beta", "xi", "kappa"});
        for (const char* k : {"alpha", "beta", "xi"})
            if (!g.contains(k)) fail_key(text, k, "missing Gamma-Gamma parameter");
        Regime r;
        r.kind = Regime::Kind::CustomGg;
        r.alpha = get_number(text, g, "alpha", 1e-6, 1e6);
        r.beta = get_number(text, g, "beta", 1e-6, 1e6);
        r.xi = get_number(text, g, "xi", 1e-6, 1e6);
        if (g.contains("kappa")) r.kappa = get_number(text, g, "kappa", 1e-9, 1e9);
        return r;
    }
    Regime r = Regime::named(name);
    if (r.kind == Regime::Kind::NegExp && j.contains("lambda"))
        r.lambda = get_number(text, j, "lambda", 1e-9, 1e9);
    return r;
}

}  // namespace

SweepSpec parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("config root must be a JSON object");
    check_keys(text, j, "config",
               {"metric", "relay", "n_users", "c", "gamma_th_db", "eta", "regime", "lambda",
                "gg", "sweep", "gamma_grid_db", "methods", "mc", "trusted"});

    SweepSpec s;
    if (j.contains("metric")) {
        const std::string m = j.at("metric").is_string() ? j.at("metric").get<std::string>() : "";
        if (m == "outage") s.metric = MetricKind::Outage;
        else if (m == "ber") s.metric = MetricKind::Ber;
        else fail_key(text, "metric", "expected \"outage\" or \"ber\"");
    }
    if (j.contains("relay")) {
        const std::string r = j.at("relay").is_string() ? j.at("relay").get<std::string>() : "";
        if (r == "fixed") s.relays = {RelayKind::Fixed};
        else if (r == "adaptive") s.relays = {RelayKind::Adaptive};
        else if (r == "both") s.relays = {RelayKind::Fixed, RelayKind::Adaptive};
        else fail_key(text, "relay", "expected \"fixed\", \"adaptive\" or \"both\"");
    }
    if (j.contains("n_users")) {
        if (!j.at("n_users").is_number_integer())
            fail_key(text, "n_users", "expected a positive integer");
        const auto n = j.at("n_users").get<long long>();
        if (n < 1 || n > 1024) fail_key(text, "n_users", "must be in [1, 1024]");
        s.n_users = static_cast<int>(n);
    }
    if (j.contains("c")) s.c = get_number(text, j, "c", 1e-12, 1e12);
    if (j.contains("gamma_th_db")) s.gamma_th_db = get_number(text, j, "gamma_th_db", -400, 400);
    if (j.contains("eta")) s.eta = get_number(text, j, "eta", 1e-12, 1e12);
    s.regime = parse_regime(text, j);

    if (j.contains("gamma_grid_db")) {
        const json& g = j.at("gamma_grid_db");
        if (g.is_array()) {
            for (const auto& v : g) {
                if (!v.is_number()) fail_key(text, "gamma_grid_db", "expected numbers");
                s.gamma_grid_db.push_back(v.get<double>());
            }
        } else if (g.is_object()) {
            check_keys(text, g, "gamma_grid_db", {"from", "to", "step"});
            const double from = get_number(text, g, "from", -400, 400);
            const double to = get_number(text, g, "to", -400, 400);
            const double step = get_number(text, g, "step", 1e-6, 400);
            if (to < from) fail_key(text, "gamma_grid_db", "\"to\" must be >= \"from\"");
            for (double v = from; v <= to + 1e-9; v += step) s.gamma_grid_db.push_back(v);
        } else {
            fail_key(text, "gamma_grid_db", "expected an array or {from,to,step}");
        }
        if (s.gamma_grid_db.empty()) fail_key(text, "gamma_grid_db", "grid must be non-empty");
        if (!std::is_sorted(s.gamma_grid_db.begin(), s.gamma_grid_db.end()))
            fail_key(text, "gamma_grid_db", "grid must be strictly increasing");
    } else {
        s.gamma_grid_db = default_gamma_grid();
    }

    if (j.contains("sweep")) {
        const json& sw = j.at("sweep");
        check_keys(text, sw, "sweep", {"variable", "values"});
        std::string var = "gamma-avg-db";
        if (sw.contains("variable")) {
            if (!sw.at("variable").is_string()) fail_key(text, "variable", "expected a string");
            var = sw.at("variable").get<std::string>();
        }
        if (var == "gamma-avg-db") s.variable = SweepVariable::GammaAvgDb;
        else if (var == "n-users") s.variable = SweepVariable::NUsers;
        else if (var == "lambda") s.variable = SweepVariable::Lambda;
        else if (var == "regime") s.variable = SweepVariable::Regime;
        else fail_key(text, "variable", "expected gamma-avg-db, n-users, lambda or regime");
        if (s.variable != SweepVariable::GammaAvgDb) {
            if (!sw.contains("values") || !sw.at("values").is_array() || sw.at("values").empty())
                fail_key(text, "values", "sweep needs a non-empty values array");
            if (s.variable == SweepVariable::Regime) {
                for (const auto& v : sw.at("values")) {
                    if (!v.is_string()) fail_key(text, "values", "regime values must be strings");
                    Regime r = Regime::named(v.get<std::string>());
                    if (r.kind == Regime::Kind::NegExp) r.lambda = s.regime.lambda;
                    s.regime_values.push_back(r);
                }
            } else {
                for (const auto& v : sw.at("values")) {
                    if (!v.is_number()) fail_key(text, "values", "expected numeric values");
                    s.values.push_back(v.get<double>());
                }
                if (!std::is_sorted(s.values.begin(), s.values.end()))
                    fail_key(text, "values", "values must be increasing");
                if (s.variable == SweepVariable::NUsers)
                    for (double v : s.values)
                        if (v < 1 || v != std::floor(v))
                            fail_key(text, "values", "n-users values must be positive integers");
                if (s.variable == SweepVariable::Lambda) {
                    if (!s.regime.is_gg()) {
                        for (double v : s.values)
                            if (!(v > 0)) fail_key(text, "values", "lambda values must be positive");
                    } else {
                        fail_key(text, "values", "lambda sweep requires the negexp regime");
                    }
                }
            }
        }
    }

    if (j.contains("methods")) {
        if (!j.at("methods").is_array() || j.at("methods").empty())
            fail_key(text, "methods", "expected a non-empty array");
        s.methods.clear();
        for (const auto& v : j.at("methods")) {
            const std::string m = v.is_string() ? v.get<std::string>() : "";
            if (m == "closed") s.methods.push_back(Method::ClosedForm);
            else if (m == "quad") s.methods.push_back(Method::Quadrature);
            else if (m == "mc") s.methods.push_back(Method::MonteCarlo);
            else fail_key(text, "methods", "expected closed, quad or mc");
        }
    }
    if (j.contains("mc")) {
        const json& m = j.at("mc");
        check_keys(text, m, "mc", {"trials", "seed", "chunk_size", "combining"});
        if (m.contains("trials"))
            s.mc.trials = static_cast<std::uint64_t>(get_number(text, m, "trials", 1, 1e12));
        if (m.contains("seed"))
            s.mc.seed = static_cast<std::uint64_t>(get_number(text, m, "seed", 0, 1.8e19));
        if (m.contains("chunk_size"))
            s.mc.chunk_size = static_cast<std::uint32_t>(get_number(text, m, "chunk_size", 1, 1e9));
        if (m.contains("combining")) {
            const std::string c = m.at("combining").is_string() ? m.at("combining").get<std::string>() : "";
            if (c == "exact") s.mc.combining = mcsim::CombiningMode::Exact;
            else if (c == "min-approx") s.mc.combining = mcsim::CombiningMode::MinApprox;
            else fail_key(text, "combining", "expected \"exact\" or \"min-approx\"");
        }
    }
    if (j.contains("trusted")) {
        if (!j.at("trusted").is_boolean()) fail_key(text, "trusted", "expected a boolean");
        s.trusted = j.at("trusted").get<bool>();
    }
    return s;
}

SweepSpec parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string canonical_config(const SweepSpec& s) {
    json j;
    j["metric"] = metric_name(s.metric);
    j["relay"] = s.relays.size() == 2 ? "both"
                 : s.relays[0] == RelayKind::Fixed ? "fixed" : "adaptive";
    j["n_users"] = s.n_users;
    j["c"] = s.c;
    j["gamma_th_db"] = s.gamma_th_db;
    j["eta"] = s.eta;
    switch (s.regime.kind) {
        case Regime::Kind::ModerateGg: j["regime"] = "moderate-gg"; break;
        case Regime::Kind::StrongGg: j["regime"] = "strong-gg"; break;
        case Regime::Kind::NegExp:
            j["regime"] = "negexp";
            j["lambda"] = s.regime.lambda;
            break;
        case Regime::Kind::CustomGg:
            j["regime"] = "gg";
            j["gg"] = {{"alpha", s.regime.alpha}, {"beta", s.regime.beta}, {"xi", s.regime.xi}};
            if (s.regime.kappa > 0.0) j["gg"]["kappa"] = s.regime.kappa;
            break;
    }
    j["gamma_grid_db"] = s.gamma_grid_db;
    if (s.variable != SweepVariable::GammaAvgDb) {
        json sw;
        switch (s.variable) {
            case SweepVariable::NUsers: sw["variable"] = "n-users"; break;
            case SweepVariable::Lambda: sw["variable"] = "lambda"; break;
            case SweepVariable::Regime: sw["variable"] = "regime"; break;
            default: break;
        }
        if (s.variable == SweepVariable::Regime) {
            json vals = json::array();
            for (const auto& r : s.regime_values)
                vals.push_back(r.kind == Regime::Kind::ModerateGg ? "moderate-gg"
                               : r.kind == Regime::Kind::StrongGg ? "strong-gg"
                                                                   : "negexp");
            sw["values"] = vals;
        } else {
            sw["values"] = s.values;
        }
        j["sweep"] = sw;
    }
    json methods = json::array();
    for (Method m : s.methods) methods.push_back(method_name(m));
    j["methods"] = methods;
    j["mc"] = {{"trials", s.mc.trials},
               {"seed", s.mc.seed},
               {"chunk_size", s.mc.chunk_size},
               {"combining", s.mc.combining == mcsim::CombiningMode::Exact ? "exact" : "min-approx"}};
    j["trusted"] = s.trusted;
    return j.dump(2) + "\n";
}

SweepSpec preset(const std::string& name) {
    SweepSpec s;
    s.gamma_grid_db = default_gamma_grid();
    auto regime_family = [&](std::initializer_list<const char*> names) {
        s.variable = SweepVariable::Regime;
        for (const char* n : names) s.regime_values.push_back(Regime::named(n));
        s.regime = s.regime_values.front();
    };
    if (name == "fig2") {
        s.metric = MetricKind::Outage;
        regime_family({"moderate-gg", "strong-gg"});
    } else if (name == "fig3") {
        s.metric = MetricKind::Outage;
        s.regime = Regime::named("moderate-gg");
        s.variable = SweepVariable::NUsers;
        s.values = {1, 2, 4};
    } else if (name == "fig4") {
        s.metric = MetricKind::Outage;
        s.regime = Regime::named("negexp");
        s.variable = SweepVariable::Lambda;
        s.values = {1, 5};
    } else if (name == "fig5") {
        s.metric = MetricKind::Outage;
        s.regime = Regime::named("negexp");
        s.variable = SweepVariable::NUsers;
        s.values = {1, 2, 4};
    } else if (name == "fig6") {
        s.metric = MetricKind::Ber;
        regime_family({"moderate-gg", "strong-gg"});
    } else if (name == "fig7") {
        s.metric = MetricKind::Ber;
        s.regime = Regime::named("negexp");
        s.variable = SweepVariable::Lambda;
        s.values = {1, 5};
    } else if (name == "fig8") {
        s.metric = MetricKind::Ber;
        s.regime = Regime::named("negexp");
        s.variable = SweepVariable::NUsers;
        s.values = {1, 2, 3};
    } else {
        throw parse_error("unknown preset \"" + name + "\" (expected fig2..fig8)");
    }
    return s;
}

std::vector<std::string> preset_names() {
    return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"};
}

namespace {

std::vector<FamilyValue> family_values(const SweepSpec& s) {
    std::vector<FamilyValue> out;
    switch (s.variable) {
        case SweepVariable::GammaAvgDb:
            out.push_back({s.n_users, s.regime});
            break;
        case SweepVariable::NUsers:
            for (double v : s.values) out.push_back({static_cast<int>(v), s.regime});
            break;
        case SweepVariable::Lambda:
            for (double v : s.values) {
                Regime r = s.regime;
                r.lambda = v;
                out.push_back({s.n_users, r});
            }
            break;
        case SweepVariable::Regime:
            for (const Regime& r : s.regime_values) out.push_back({s.n_users, r});
            break;
    }
    return out;
}

linkmodel::SystemConfig point_config(const SweepSpec& s, const FamilyValue& fam,
                                     RelayKind relay, double gamma_avg_db) {
    const double g = channels::db_to_linear(gamma_avg_db);
    linkmodel::RelayScheme scheme;
    if (relay == RelayKind::Fixed) scheme = linkmodel::FixedGain{s.c};
    else scheme = linkmodel::AdaptiveGain{};
    return {fam.n_users,
            channels::RayleighRf(g),
            fam.regime.model(g),
            s.eta,
            scheme,
            channels::db_to_linear(s.gamma_th_db)};
}

}  // namespace

std::vector<PerformanceCurve> run_sweep(const SweepSpec& spec, const RunOptions& opts) {
    const std::vector<Method> methods = opts.methods.value_or(spec.methods);
    if (methods.empty()) throw domain_error("run_sweep: no methods selected");
    if (spec.gamma_grid_db.empty()) throw domain_error("run_sweep: empty gamma grid");
    McSettings mc = spec.mc;
    if (opts.trials) mc.trials = *opts.trials;
    if (opts.seed) mc.seed = *opts.seed;
    const bool trusted = opts.trusted.value_or(spec.trusted);

    std::vector<PerformanceCurve> curves;
    for (RelayKind relay : spec.relays) {
        for (const FamilyValue& fam : family_values(spec)) {
            for (Method method : methods) {
                PerformanceCurve curve;
                curve.regime = fam.regime.tag();
                curve.relay = relay == RelayKind::Fixed ? "fixed" : "adaptive";
                curve.n_users = fam.n_users;
                curve.method = method;
                curve.kind = spec.metric;
                for (double gdb : spec.gamma_grid_db) {
                    try {
                        const auto cfg = point_config(spec, fam, relay, gdb);
                        PerformancePoint pt;
                        pt.gamma_avg_db = gdb;
                        pt.kind = spec.metric;
                        pt.method = method;
                        if (method == Method::ClosedForm) {
                            pt.metric = trusted
                                            ? analytic::evaluate_checked(cfg, spec.metric, true).value
                                            : analytic::closed_form(cfg, spec.metric);
                        } else if (method == Method::Quadrature) {
                            pt.metric = analytic::quadrature(cfg, spec.metric);
                        } else {
                            mcsim::McOptions mo;
                            mo.trials = mc.trials;
                            mo.chunk_size = mc.chunk_size;
                            mo.combining = mc.combining;
                            mo.workers = opts.workers;
                            std::uint64_t h = splitmix64(mc.seed ^ 0x5CA1AB1Eull);
                            h = mix_string(h, curve.regime);
                            h = mix_string(h, curve.relay);
                            h = splitmix64(h ^ static_cast<std::uint64_t>(curve.n_users));
                            std::uint64_t bits;
                            static_assert(sizeof bits == sizeof gdb);
                            std::memcpy(&bits, &gdb, sizeof bits);
                            mo.master_seed = splitmix64(h ^ bits);
                            const auto est = spec.metric == MetricKind::Outage
                                                 ? mcsim::run_outage_mc(cfg, mo)
                                                 : mcsim::run_ber_mc(cfg, mo);
                            pt.metric = est.estimate;
                            pt.ci_half_width = 1.96 * est.std_error;
                        }
                        curve.points.push_back(pt);
                    } catch (const std::exception& e) {
                        char buf[256];
                        std::snprintf(buf, sizeof buf, "%s %s N=%d %s gamma_avg=%gdB: %s",
                                      curve.regime.c_str(), curve.relay.c_str(), curve.n_users,
                                      method_name(method), gdb, e.what());
                        curve.errors.emplace_back(buf);
                    }
                }
                curves.push_back(std::move(curve));
            }
        }
    }
    return curves;
}

void emit_csv(const std::vector<PerformanceCurve>& curves, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw io_error("cannot open CSV destination: " + path);
    std::fputs("gamma_avg_db,metric,metric_kind,method,ci_half_width,n_users,regime,relay\n", f);
    for (const auto& curve : curves) {
        auto pts = curve.points;
        std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
            return a.gamma_avg_db < b.gamma_avg_db;
        });
        for (const auto& p : pts) {
            std::fprintf(f, "%.12g,%.12g,%s,%s,%.12g,%d,%s,%s\n", p.gamma_avg_db, p.metric,
                         metric_name(p.kind), method_name(p.method), p.ci_half_width,
                         curve.n_users, curve.regime.c_str(), curve.relay.c_str());
        }
    }
    if (std::fclose(f) != 0) throw io_error("failed writing CSV: " + path);
}

std::vector<PerformanceCurve> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open CSV: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw io_error("empty CSV: " + path);
    if (line != "gamma_avg_db,metric,metric_kind,method,ci_half_width,n_users,regime,relay")
        throw io_error("unexpected CSV header in " + path);
    std::map<std::string, PerformanceCurve> by_key;
    std::vector<std::string> order;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cols.push_back(c);
        if (cols.size() != 8) throw io_error("malformed CSV row: " + line);
        PerformancePoint pt;
        pt.gamma_avg_db = std::stod(cols[0]);
        pt.metric = std::stod(cols[1]);
        pt.kind = cols[2] == "outage" ? MetricKind::Outage : MetricKind::Ber;
        pt.method = cols[3] == "closed"  ? Method::ClosedForm
                    : cols[3] == "quad" ? Method::Quadrature
                                        : Method::MonteCarlo;
        pt.ci_half_width = std::stod(cols[4]);
        const std::string key = cols[5] + "|" + cols[6] + "|" + cols[7] + "|" + cols[3] + "|" + cols[2];
        auto [it, fresh] = by_key.try_emplace(key);
        if (fresh) {
            order.push_back(key);
            it->second.n_users = std::stoi(cols[5]);
            it->second.regime = cols[6];
            it->second.relay = cols[7];
            it->second.method = pt.method;
            it->second.kind = pt.kind;
        }
        it->second.points.push_back(pt);
    }
    std::vector<PerformanceCurve> out;
    out.reserve(order.size());
    for (const auto& k : order) out.push_back(std::move(by_key[k]));
    return out;
}

double level_crossing_db(const PerformanceCurve& curve, double level) {
    if (!(level > 0.0)) return std::nan("");
    const double ll = std::log10(level);
    const auto& pts = curve.points;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const double m0 = pts[i].metric, m1 = pts[i + 1].metric;
        if (!(m0 > 0.0) || !(m1 > 0.0)) continue;
        const double l0 = std::log10(m0), l1 = std::log10(m1);
        if ((l0 - ll) * (l1 - ll) <= 0.0) {
            if (l0 == l1) return pts[i].gamma_avg_db;
            const double f = (ll - l0) / (l1 - l0);
            return pts[i].gamma_avg_db + f * (pts[i + 1].gamma_avg_db - pts[i].gamma_avg_db);
        }
    }
    return std::nan("");
}

}  // namespace linklab::sweep
