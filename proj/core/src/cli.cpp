#include <wpbailey/cli.hpp>

#include <atomic>
#include <fstream>
#include <regex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <wpbailey/errors.hpp>
#include <wpbailey/identities.hpp>
#include <wpbailey/registry.hpp>
#include <wpbailey/wppairs.hpp>

namespace wpb::cli {

using nlohmann::json;

std::pair<std::string, QMonomial> parse_param(std::string_view text)
{
    static const std::regex grammar(R"(^([A-Za-z][A-Za-z0-9_]*)=\[(-?[0-9]+)/([0-9]+),(-?[0-9]+)/([0-9]+)\]q\^(-?[0-9]+)$)");
    std::cmatch m;
    if (!std::regex_match(text.begin(), text.end(), m, grammar)) {
        throw ParameterError("parameter '" + std::string(text) +
                             "' does not match name=[re_num/re_den,im_num/im_den]q^expo");
    }
    if (m[3].str().find_first_not_of('0') == std::string::npos ||
        m[5].str().find_first_not_of('0') == std::string::npos) {
        throw ParameterError("parameter '" + std::string(text) + "' has a zero denominator");
    }
    mpq_class re(m[2].str() + "/" + m[3].str());
    mpq_class im(m[4].str() + "/" + m[5].str());
    re.canonicalize();
    im.canonicalize();
    long expo = 0;
    try {
        expo = std::stol(m[6].str());
    } catch (const std::out_of_range &) {
        throw ParameterError("exponent out of range in '" + std::string(text) + "'");
    }
    if (expo > 100000 || expo < -100000) {
        throw ParameterError("exponent out of range in '" + std::string(text) + "'");
    }
    Coefficient c(re, im);
    if (c.is_zero()) {
        throw ParameterError("parameter " + m[1].str() + " must be nonzero");
    }
    return {m[1].str(), QMonomial(c, static_cast<int>(expo))};
}

CPoint parse_point(std::string_view text)
{
    std::string s(text);
    auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            double re = std::stod(s, &used);
            if (used != s.size()) {
                throw std::invalid_argument(s);
            }
            return {re, 0.0};
        }
        std::string a = s.substr(0, comma);
        std::string b = s.substr(comma + 1);
        double re = std::stod(a, &used);
        if (used != a.size()) {
            throw std::invalid_argument(s);
        }
        double im = std::stod(b, &used);
        if (used != b.size()) {
            throw std::invalid_argument(s);
        }
        return {re, im};
    } catch (const std::logic_error &) {
        throw ParameterError("cannot read point '" + s + "'; expected re or re,im");
    }
}

namespace {

struct Options {
    std::string id;
    int order = 0;
    std::string backend = "exact";
    std::vector<std::string> params;
    std::string pair;
    std::string q = "0.3";
    std::string output;
    std::string format = "text";
    std::string series;
    std::string variant;
    int base = 1;
    int jobs = 1;
    int n_max = 12;
    bool chain = false;
};

ParamSet collect(const std::vector<std::string> &raw, const std::string &pair)
{
    ParamSet ps;
    for (const auto &p : raw) {
        auto [name, value] = parse_param(p);
        if (!ps.values.emplace(name, value).second) {
            throw ParameterError("parameter " + name + " given twice");
        }
    }
    ps.pair = pair;
    return ps;
}

void check_order(int order)
{
    if (order != 0 && order < kMinOrder) {
        throw ParameterError("order must be at least " + std::to_string(kMinOrder));
    }
}

json pair_json(const Coefficient &c)
{
    return json::array({rational_string(c.re()), rational_string(c.im())});
}

json pair_json(CPoint c)
{
    return json::array({c.real(), c.imag()});
}

const char *backend_name(BackendKind b)
{
    return b == BackendKind::exact ? "exact" : "numeric";
}

std::string point_token(CPoint q)
{
    std::ostringstream os;
    os << "q=" << q.real() << (q.imag() < 0 ? "" : "+") << q.imag() << "i";
    return os.str();
}

// One row of a verification run; error rows carry a message and no report.
struct Row {
    std::string id;
    BackendKind backend = BackendKind::exact;
    std::optional<VerificationReport> report;
    std::string error;
};

std::string text_line(const Row &r, int order, CPoint q0)
{
    std::ostringstream os;
    os << r.id << " " << backend_name(r.backend) << " ";
    if (r.report) {
        const auto &rep = *r.report;
        os << (rep.backend == BackendKind::exact ? std::to_string(rep.order) : point_token(rep.q0));
        os << (rep.pass ? " PASS" : " FAIL");
        if (!rep.pair.empty()) {
            os << " pair=" << rep.pair;
        }
        if (rep.mismatch) {
            const auto &m = *rep.mismatch;
            if (m.exponent) {
                os << " first mismatch at q^" << *m.exponent << ": lhs " << m.lhs_exact << ", rhs "
                   << m.rhs_exact;
            } else {
                os << " |lhs - rhs| = " << m.abs_diff;
            }
        }
    } else {
        os << (r.backend == BackendKind::exact ? (order > 0 ? std::to_string(order) : "default")
                                                : point_token(q0));
        os << " ERROR " << r.error;
    }
    return os.str();
}

json row_json(const Row &r, int order, CPoint q0)
{
    json j;
    j["id"] = r.id;
    j["backend"] = backend_name(r.backend);
    if (r.report) {
        const auto &rep = *r.report;
        if (rep.backend == BackendKind::exact) {
            j["order"] = rep.order;
        } else {
            j["order"] = nullptr;
            j["q"] = pair_json(rep.q0);
        }
        j["outcome"] = rep.pass ? "pass" : "fail";
        if (!rep.pair.empty()) {
            j["pair"] = rep.pair;
        }
        if (rep.mismatch) {
            const auto &m = *rep.mismatch;
            if (m.exponent) {
                j["first_mismatch"] = {{"exponent", *m.exponent},
                                       {"lhs", pair_json(m.lhs_exact)},
                                       {"rhs", pair_json(m.rhs_exact)}};
            } else {
                j["first_mismatch"] = {{"exponent", nullptr},
                                       {"lhs", pair_json(m.lhs)},
                                       {"rhs", pair_json(m.rhs)},
                                       {"abs_diff", m.abs_diff}};
            }
        } else {
            j["first_mismatch"] = nullptr;
        }
        j["millis"] = rep.millis;
    } else {
        if (r.backend == BackendKind::exact) {
            j["order"] = order > 0 ? json(order) : json(nullptr);
        } else {
            j["order"] = nullptr;
            j["q"] = pair_json(q0);
        }
        j["outcome"] = "error";
        j["first_mismatch"] = nullptr;
        j["error"] = r.error;
        j["millis"] = 0.0;
    }
    return j;
}

BackendKind parse_backend(const std::string &s)
{
    if (s == "exact") {
        return BackendKind::exact;
    }
    if (s == "numeric") {
        return BackendKind::numeric;
    }
    throw ParameterError("unknown backend '" + s + "'");
}

// Writes to --output when given, otherwise to `out`.
void emit(const Options &o, std::ostream &out, const std::string &text)
{
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) {
        throw ParameterError("cannot write " + o.output);
    }
    f << text;
}

int cmd_verify(const Options &o, std::ostream &out, std::ostream &err)
{
    check_order(o.order);
    VerifyOptions vo;
    vo.backend = parse_backend(o.backend);
    vo.order = o.order;
    if (vo.backend == BackendKind::numeric) {
        vo.q0 = parse_point(o.q);
        if (!(std::abs(vo.q0) < 1.0)) {
            throw ParameterError("numeric mode needs |q| < 1");
        }
    }
    if (o.jobs < 1) {
        throw ParameterError("--jobs must be >= 1");
    }
    const ParamSet ps = collect(o.params, o.pair);
    std::vector<const IdentityEntry *> entries;
    if (o.id == "all") {
        if (!ps.values.empty() || !ps.pair.empty()) {
            throw ParameterError("--param and --pair apply to a single --id");
        }
        for (const auto &e : registry()) {
            entries.push_back(&e);
        }
    } else {
        entries.push_back(&find_identity(o.id));
    }

    std::vector<Row> rows(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < entries.size();) {
            rows[i].id = entries[i]->id;
            rows[i].backend = vo.backend;
            try {
                rows[i].report = verify(*entries[i], ps, vo);
            } catch (const std::exception &ex) {
                rows[i].error = ex.what();
            }
        }
    };
    const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(o.jobs), entries.size());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }

    bool any_fail = false;
    bool any_error = false;
    std::ostringstream text;
    json arr = json::array();
    for (const auto &r : rows) {
        if (!r.report) {
            any_error = true;
            err << r.id << ": " << r.error << "\n";
        } else if (!r.report->pass) {
            any_fail = true;
        }
        text << text_line(r, o.order, vo.q0) << "\n";
        arr.push_back(row_json(r, o.order, vo.q0));
    }
    if (o.format == "json") {
        emit(o, out, (o.id == "all" ? arr.dump(2) : arr.at(0).dump(2)) + "\n");
    } else {
        emit(o, out, text.str());
    }
    return any_error ? kOperational : (any_fail ? kMismatch : kPass);
}

int cmd_list(const Options &o, std::ostream &out)
{
    json j;
    std::ostringstream text;
    text << "identities:\n";
    for (const auto &e : registry()) {
        json params = json::object();
        std::string plist;
        for (const auto &[name, value] : e.default_params) {
            params[name] = value.to_string();
            plist += " " + name + "=" + value.to_string();
        }
        j["identities"].push_back({{"id", e.id},
                                   {"description", e.description},
                                   {"default_order", e.default_order},
                                   {"default_pair", e.default_pair},
                                   {"params", params}});
        text << "  " << e.id << "  order " << e.default_order;
        if (!e.default_pair.empty()) {
            text << "  pair " << e.default_pair;
        }
        text << " " << plist << "\n    " << e.description << "\n";
    }
    text << "pairs:\n";
    for (const auto &id : catalog_pair_ids()) {
        const auto &p = catalog_pair(id);
        j["pairs"].push_back({{"id", id}, {"description", p.description}});
        text << "  " << id << "  " << p.description << "\n";
    }
    text << "derived pairs:\n";
    for (const auto &id : catalog_derived_ids()) {
        const auto &p = catalog_derived(id);
        j["derived_pairs"].push_back({{"id", id}, {"source", p.source_pair}, {"description", p.description}});
        text << "  " << id << "  from " << p.source_pair << "  " << p.description << "\n";
    }
    emit(o, out, o.format == "json" ? j.dump(2) + "\n" : text.str());
    return kPass;
}

QMonomial need_param(const ParamSet &ps, const std::string &name)
{
    auto it = ps.values.find(name);
    if (it == ps.values.end()) {
        throw ParameterError("missing --param " + name);
    }
    return it->second;
}

int cmd_expand(const Options &o, std::ostream &out)
{
    check_order(o.order);
    const int order = o.order > 0 ? o.order : 40;
    const ParamSet ps = collect(o.params, "");
    QSeries s;
    if (o.series == "psi") {
        if (o.variant != "" && o.variant != "sum" && o.variant != "product") {
            throw ParameterError("psi variant is sum or product");
        }
        s = theta_psi(o.base, order, o.variant == "product" ? PsiForm::product : PsiForm::sum);
    } else if (o.series == "a_of_q") {
        if (o.variant != "" && o.variant != "lattice" && o.variant != "lambert") {
            throw ParameterError("a_of_q variant is lattice or lambert");
        }
        s = theta_a(order, o.variant == "lambert" ? AForm::lambert : AForm::lattice);
    } else if (o.series == "f1") {
        F1Variant v = F1Variant::lambert;
        if (o.variant == "qgauss") {
            v = F1Variant::qgauss;
        } else if (o.variant == "unitpair") {
            v = F1Variant::unitpair;
        } else if (o.variant != "" && o.variant != "lambert") {
            throw ParameterError("f1 variant is lambert, qgauss or unitpair");
        }
        s = f1_series(v, need_param(ps, "a"), o.base, order);
    } else if (o.series == "f2") {
        s = f2_series(need_param(ps, "a"), o.base, order);
    } else if (o.series == "f") {
        s = f_series(need_param(ps, "a"), need_param(ps, "k"), need_param(ps, "z"), order);
    } else {
        throw UnknownSeries("unknown series '" + o.series + "' (psi, a_of_q, f1, f2, f)");
    }

    const int lo = std::min(0, s.valuation());
    const int hi = std::min(order, s.order());
    std::ostringstream text;
    json coeffs = json::array();
    for (int e = lo; e < hi; ++e) {
        const Coefficient c = s.coeff(e);
        text << e << " " << rational_string(c.re()) << " " << rational_string(c.im()) << "\n";
        coeffs.push_back({{"exponent", e}, {"re", rational_string(c.re())}, {"im", rational_string(c.im())}});
    }
    json j = {{"series", o.series}, {"order", hi}, {"coefficients", coeffs}};
    emit(o, out, o.format == "json" ? j.dump(2) + "\n" : text.str());
    return kPass;
}

int cmd_pairs_check(const Options &o, std::ostream &out)
{
    check_order(o.order);
    const int order = o.order > 0 ? o.order : 40;
    if (o.n_max < 0) {
        throw ParameterError("--n-max must be >= 0");
    }
    const ParamSet given = collect(o.params, "");
    for (const auto &[name, value] : given.values) {
        if (name != "a" && name != "k" && name != "rho1" && name != "rho2" && name != "s") {
            throw ParameterError("pairs-check takes a, k, rho1, rho2, s; not " + name);
        }
    }
    std::vector<std::string> ids;
    if (o.pair.empty() || o.pair == "all") {
        ids = catalog_pair_ids();
    } else {
        catalog_pair(o.pair);
        ids.push_back(o.pair);
    }

    bool any_fail = false;
    std::ostringstream text;
    json arr = json::array();
    for (const auto &id : ids) {
        const PairSpec &pair = catalog_pair(id);
        const bool needs_s = std::find(pair.aux.begin(), pair.aux.end(), "sqrt_k") != pair.aux.end();
        std::map<std::string, QMonomial> v = {{"a", QMonomial(Coefficient(2), 1)},
                                              {"k", QMonomial(Coefficient(3), 2)},
                                              {"rho1", QMonomial(Coefficient(5), 1)},
                                              {"rho2", QMonomial(Coefficient(7), 1)}};
        if (needs_s && given.values.count("k") == 0) {
            v.insert_or_assign("k", QMonomial(Coefficient(9), 2));
            v.insert_or_assign("s", QMonomial(Coefficient(3), 1));
        }
        for (const auto &[name, value] : given.values) {
            v.insert_or_assign(name, value);
        }
        PairArgs<Coefficient> args{v.at("a"), v.at("k")};
        args.rho1 = v.at("rho1");
        args.rho2 = v.at("rho2");
        if (v.count("s") != 0) {
            if (!(v.at("s") * v.at("s") == args.k)) {
                throw ParameterError("parameter s must satisfy s^2 = k");
            }
            args.sqrt_k = v.at("s");
        }
        std::vector<PairSpec> specs{pair};
        if (o.chain && !needs_s) {
            specs.push_back(chain_step(pair));
        }
        for (const auto &spec : specs) {
            const WpCheckReport r = wp_check(spec, args, o.n_max, order);
            any_fail = any_fail || !r.pass;
            text << spec.id << " wp n<=" << o.n_max << " " << order << (r.pass ? " PASS" : " FAIL");
            if (!r.pass) {
                text << " first bad n=" << r.first_bad_n << ": " << r.detail;
            }
            text << "\n";
            arr.push_back({{"pair", spec.id},
                           {"n_max", o.n_max},
                           {"order", order},
                           {"outcome", r.pass ? "pass" : "fail"},
                           {"first_bad_n", r.pass ? json(nullptr) : json(r.first_bad_n)}});
        }
    }
    emit(o, out, o.format == "json" ? arr.dump(2) + "\n" : text.str());
    return any_fail ? kMismatch : kPass;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact and numeric verification of WP-Bailey pair identities", "wpbailey"};
    app.require_subcommand(1);
    Options o;

    auto *verify_cmd = app.add_subcommand("verify", "verify registry identities");
    verify_cmd->add_option("--id", o.id, "identity id or 'all'")->required();
    verify_cmd->add_option("--order", o.order, "truncation order (default: per identity)");
    verify_cmd->add_option("--backend", o.backend, "exact or numeric");
    verify_cmd->add_option("--param", o.params, "name=[re_num/re_den,im_num/im_den]q^expo");
    verify_cmd->add_option("--pair", o.pair, "WP-Bailey or derived pair id");
    verify_cmd->add_option("--q", o.q, "numeric point: re or re,im");
    verify_cmd->add_option("--jobs", o.jobs, "parallel verifications");

    auto *list_cmd = app.add_subcommand("list", "list identities and pairs");

    auto *expand_cmd = app.add_subcommand("expand", "print coefficients of a named series");
    expand_cmd->add_option("--series", o.series, "psi, a_of_q, f1, f2 or f")->required();
    expand_cmd->add_option("--order", o.order, "truncation order (default 40)");
    expand_cmd->add_option("--param", o.params, "name=[re_num/re_den,im_num/im_den]q^expo");
    expand_cmd->add_option("--variant", o.variant, "representation to expand");
    expand_cmd->add_option("--base", o.base, "q -> q^base");

    auto *pairs_cmd = app.add_subcommand("pairs-check", "check the WP-Bailey relation for catalog pairs");
    pairs_cmd->add_option("--pair", o.pair, "pair id or 'all'");
    pairs_cmd->add_option("--param", o.params, "a, k, rho1, rho2, s");
    pairs_cmd->add_option("--order", o.order, "truncation order (default 40)");
    pairs_cmd->add_option("--n-max", o.n_max, "largest n checked (default 12)");
    pairs_cmd->add_flag("--chain", o.chain, "also check the chained pair");

    for (auto *sub : {verify_cmd, list_cmd, expand_cmd, pairs_cmd}) {
        sub->add_option("--output", o.output, "write the report to a file");
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    }

    std::vector<const char *> argv{"wpbailey"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kOperational;
    }

    try {
        if (verify_cmd->parsed()) {
            return cmd_verify(o, out, err);
        }
        if (list_cmd->parsed()) {
            return cmd_list(o, out);
        }
        if (expand_cmd->parsed()) {
            return cmd_expand(o, out);
        }
        return cmd_pairs_check(o, out);
    } catch (const std::exception &e) {
        err << (o.id.empty() ? std::string() : o.id + ": ") << e.what() << "\n";
        return kOperational;
    }
}

} // namespace wpb::cli
