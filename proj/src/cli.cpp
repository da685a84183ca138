#include "mfs/cli.hpp"

#include "mfs/divdiff.hpp"
#include "mfs/numeval.hpp"
#include "mfs/oracle.hpp"
#include "mfs/series.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <regex>
#include <sstream>

namespace mfs::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kMaxRenderDigits = 1000;
constexpr const char* kCheckFailed = "check failed";

const std::regex kRationalPattern(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
const std::regex kDecimalPattern(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        parts.push_back(item);
    }
    if (parts.empty() || text.back() == ',') {
        throw UsageError("empty entry in node list '" + text + "'");
    }
    return parts;
}

// p/q, integers, or decimal literals such as 0.25 and 1e-10.
Rational parse_numeric(const std::string& text) {
    std::smatch m;
    if (std::regex_match(text, m, kRationalPattern)) {
        return parse_exact(text);
    }
    if (!std::regex_match(text, m, kDecimalPattern) || (m[2].length() == 0 && m[3].length() == 0)) {
        throw UsageError("not a number: '" + text + "'");
    }
    const std::string frac = m[3].str();
    BigInt mantissa(m[2].str() + frac == "" ? "0" : m[2].str() + frac);
    long exponent = -static_cast<long>(frac.size());
    if (m[4].matched) {
        exponent += std::stol(m[4].str());
    }
    if (exponent > 10000 || exponent < -10000) {
        throw UsageError("exponent out of range in '" + text + "'");
    }
    Rational value(mantissa);
    const BigInt scale = pow(BigInt(10), static_cast<unsigned>(std::labs(exponent)));
    value = exponent >= 0 ? value * Rational(scale) : value / Rational(scale);
    return m[1].str() == "-" ? Rational(-value) : value;
}

void check_digits(unsigned digits, unsigned limit) {
    if (digits < 1 || digits > limit) {
        throw UsageError("--digits must be between 1 and " + std::to_string(limit));
    }
}

void check_k(long k) {
    if (k < 1) {
        throw UsageError("--k must be at least 1");
    }
}

std::string decimal_of(const ExpLinear& v, unsigned digits) { return to_string(render(v, digits)); }

std::string short_decimal(const Rational& v) {
    return to_string(round_to_digits(v, 6));
}

std::string mode_name(TruncationMode m) {
    return m == TruncationMode::PerIndex ? "per-index" : "total-degree";
}

template <class Fn>
auto run_oracle(const std::string& mode, unsigned depth, Fn&& fn) {
    if (depth < 1) {
        throw UsageError("--depth must be at least 1");
    }
    if (mode == "per-index") {
        return fn(TruncationSpec{depth, TruncationMode::PerIndex});
    }
    if (mode == "total-degree") {
        return fn(TruncationSpec{depth, TruncationMode::TotalDegree});
    }
    if (mode != "auto") {
        throw UsageError("--mode must be auto, per-index or total-degree");
    }
    try {
        return fn(TruncationSpec{depth, TruncationMode::PerIndex});
    } catch (const ResourceLimitError&) {
        return fn(TruncationSpec{depth, TruncationMode::TotalDegree});
    }
}

// Renders the e-coefficient term of a table cell: "e", "3e", "e/2", "3e/8".
std::string e_term(const Rational& c) {
    const BigInt num = numerator(c);
    const BigInt den = denominator(c);
    std::string out = num == 1 ? "e" : num.str() + "e";
    if (den != 1) {
        out += "/" + den.str();
    }
    return out;
}

Json params_json(const OutputRecord& r) {
    Json q = Json::object();
    q["command"] = r.command;
    for (const auto& [key, value] : r.params) {
        q[key] = value;
    }
    return q;
}

}  // namespace

Rational parse_exact(const std::string& text) {
    std::smatch m;
    if (!std::regex_match(text, m, kRationalPattern)) {
        if (std::regex_match(text, kDecimalPattern) && !text.empty()) {
            throw UsageError("decimal literal '" + text +
                             "' not accepted here; write exact values as p/q or integers");
        }
        throw UsageError("not a rational: '" + text + "'");
    }
    const BigInt p(m[1].str());
    const BigInt q(m[2].matched ? m[2].str() : "1");
    if (q == 0) {
        throw UsageError("zero denominator in '" + text + "'");
    }
    return make_rational(p, q);
}

std::vector<Rational> parse_exact_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& part : split_commas(text)) {
        out.push_back(parse_exact(part));
    }
    return out;
}

std::string table_form(const ExpLinear& v) {
    const Rational a = v.constant_part();
    const Rational b = v.coefficient_of(1);
    if (b == 0) {
        return to_string(a);
    }
    if (b > 0) {
        std::string out = e_term(b);
        if (a > 0) {
            out += "+" + to_string(a);
        } else if (a < 0) {
            out += "-" + to_string(Rational(-a));
        }
        return out;
    }
    const std::string tail = "-" + e_term(Rational(-b));
    return a == 0 ? tail : to_string(a) + tail;
}

OutputRecord cmd_skj(long k, long j, unsigned digits, bool check) {
    check_k(k);
    check_digits(digits, kMaxRenderDigits);
    if (j < 0 || j > k) {
        throw UsageError("--j must satisfy 0 <= j <= k (got k=" + std::to_string(k) +
                         ", j=" + std::to_string(j) + ")");
    }
    OutputRecord r;
    r.command = "skj";
    r.params = {{"k", std::to_string(k)}, {"j", std::to_string(j)}, {"digits", std::to_string(digits)}};
    const ExpLinear value = j == 0 ? s_k0(k) : s_kj_binomial(k, j);
    r.exact = to_string(value);
    r.decimal = decimal_of(value, digits);
    if (check) {
        r.params.emplace_back("check", "true");
        const ExpLinear other = s_kj_theorem(k, j);
        r.notes.push_back(other == value ? "check: divided-difference form agrees"
                                         : std::string(kCheckFailed) +
                                               ": divided-difference form gives " +
                                               to_string(other));
    }
    return r;
}

OutputRecord cmd_ak(long k, unsigned digits) {
    check_k(k);
    check_digits(digits, kMaxRenderDigits);
    OutputRecord r;
    r.command = "ak";
    r.params = {{"k", std::to_string(k)}, {"digits", std::to_string(digits)}};
    const Rational a = a_k(k);
    r.exact = to_string(a);
    r.decimal = decimal_of(ExpLinear::constant(a), digits);
    return r;
}

OutputRecord cmd_skx(long k, const std::string& nodes, unsigned digits) {
    check_k(k);
    check_digits(digits, kMaxRenderDigits);
    const std::vector<Rational> x = parse_exact_list(nodes);
    if (x.size() != static_cast<std::size_t>(k)) {
        throw UsageError("--x has " + std::to_string(x.size()) + " nodes but --k is " +
                         std::to_string(k));
    }
    if (k > 1 && std::all_of(x.begin(), x.end(), [&](const Rational& v) { return v == x[0]; })) {
        std::string msg = "all nodes equal " + to_string(x[0]) + "; repeated nodes are not supported";
        if (x[0] == 1) {
            msg += ". The value at (1,...,1) is S_{k,0}: use `skj --k " + std::to_string(k) +
                   " --j 0`";
        }
        throw UsageError(msg);
    }
    OutputRecord r;
    r.command = "skx";
    r.params = {{"k", std::to_string(k)}, {"x", nodes}, {"digits", std::to_string(digits)}};
    ExpLinear value;
    try {
        value = s_k_of_x(k, NodeSet(x));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    r.exact = to_string(value);
    r.decimal = decimal_of(value, digits);
    return r;
}

TableRecord cmd_table(long max_k) {
    if (max_k < 1 || max_k > 12) {
        throw UsageError("--max-k must be between 1 and 12");
    }
    TableRecord t;
    t.max_k = static_cast<unsigned>(max_k);
    for (long k = 1; k <= max_k; ++k) {
        std::vector<std::string> row{table_form(s_k0(k))};
        for (long j = 1; j <= k; ++j) {
            row.push_back(to_string(s_kj_binomial(k, j).coefficient_of(1)));
        }
        t.rows.push_back(std::move(row));
        const Rational a = a_k(k);
        t.a_values.emplace_back(to_string(a), decimal_of(ExpLinear::constant(a), 6));
    }
    return t;
}

OutputRecord cmd_verify(const VerifyArgs& args) {
    check_k(args.k);
    check_digits(args.digits, kMaxRenderDigits);
    if (args.j.has_value() == args.nodes.has_value()) {
        throw UsageError("verify needs exactly one of --j or --x");
    }
    const Rational tolerance = parse_numeric(args.tolerance);
    if (tolerance < 0) {
        throw UsageError("--tolerance must be non-negative");
    }
    const auto k = static_cast<unsigned>(args.k);

    OutputRecord r;
    r.command = "verify";
    r.params = {{"k", std::to_string(args.k)}};
    ExpLinear closed;
    ExactPartialSum partial;
    if (args.j) {
        const long j = *args.j;
        if (j < 0 || j > args.k) {
            throw UsageError("--j must satisfy 0 <= j <= k");
        }
        r.params.emplace_back("j", std::to_string(j));
        closed = s_kj_theorem(args.k, j);
        partial = run_oracle(args.mode, args.depth, [&](TruncationSpec t) {
            return oracle_skj(k, static_cast<unsigned>(j), t);
        });
    } else {
        cmd_skx(args.k, *args.nodes, args.digits);
        r.params.emplace_back("x", *args.nodes);
        const std::vector<Rational> x = parse_exact_list(*args.nodes);
        closed = s_k_of_x(args.k, NodeSet(x));
        partial = run_oracle(args.mode, args.depth,
                             [&](TruncationSpec t) { return oracle_sk_of_x(k, x, t); });
    }
    r.params.emplace_back("depth", std::to_string(args.depth));
    r.params.emplace_back("tolerance", args.tolerance);
    r.params.emplace_back("mode", args.mode);
    r.params.emplace_back("digits", std::to_string(args.digits));
    r.exact = to_string(closed);
    r.decimal = decimal_of(closed, args.digits);

    const ExpLinear diff = closed - ExpLinear::constant(partial.value);
    const Rational delta = abs(to_rational(render(diff, 20)));
    const Rational allowance = tolerance + (partial.tail_credible ? partial.tail_estimate : Rational(0));

    OracleBlock o;
    o.partial_sum = decimal_of(ExpLinear::constant(partial.value), args.digits);
    o.depth = partial.depth;
    o.mode = mode_name(partial.mode);
    o.delta = short_decimal(delta);
    o.tail = short_decimal(partial.tail_estimate);
    o.tail_credited = partial.tail_credible;
    o.tolerance = args.tolerance;
    o.pass = delta < allowance;
    r.oracle = o;
    return r;
}

OutputRecord cmd_gkl(const GklArgs& args) {
    check_k(args.k);
    check_digits(args.digits, kMaxOutputDigits);
    if (args.ell < 0) {
        throw UsageError("--l must be non-negative");
    }
    SeriesCoeffs coeffs;
    try {
        coeffs = series_by_name(args.series);
    } catch (const std::invalid_argument&) {
        throw UsageError("--series must be exp or geometric");
    }
    std::vector<Real> x;
    for (const auto& part : split_commas(args.nodes)) {
        x.push_back(to_real(parse_numeric(part)));
    }
    if (x.size() != static_cast<std::size_t>(args.k)) {
        throw UsageError("--x has " + std::to_string(x.size()) + " nodes but --k is " +
                         std::to_string(args.k));
    }
    const auto ell = static_cast<unsigned>(args.ell);

    OutputRecord r;
    r.command = "gkl";
    r.params = {{"series", args.series},
                {"k", std::to_string(args.k)},
                {"l", std::to_string(args.ell)},
                {"x", args.nodes},
                {"digits", std::to_string(args.digits)}};
    Real value;
    try {
        value = g_kl_numeric(coeffs, args.k, ell, x);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    r.decimal = to_string(decimal_from_real(value, args.digits));
    r.notes.push_back("numeric value via the divided-difference path");

    if (args.verify) {
        const Rational tolerance = parse_numeric(args.tolerance);
        r.params.emplace_back("depth", std::to_string(args.depth));
        r.params.emplace_back("tolerance", args.tolerance);
        const auto partial = run_oracle("auto", args.depth, [&](TruncationSpec t) {
            return oracle_gkl(coeffs, static_cast<unsigned>(args.k), ell, x, t);
        });
        const Real delta = abs(value - partial.value);
        const Real allowance =
            to_real(tolerance) + (partial.tail_credible ? partial.tail_estimate : Real(0));
        OracleBlock o;
        o.partial_sum = to_string(decimal_from_real(partial.value, args.digits));
        o.depth = partial.depth;
        o.mode = mode_name(partial.mode);
        o.delta = to_string(decimal_from_real(delta, 6));
        o.tail = to_string(decimal_from_real(partial.tail_estimate, 6));
        o.tail_credited = partial.tail_credible;
        o.tolerance = args.tolerance;
        o.pass = delta < allowance;
        r.oracle = o;
    }
    return r;
}

std::string to_text(const OutputRecord& r) {
    std::ostringstream out;
    out << r.command;
    for (const auto& [key, value] : r.params) {
        out << ' ' << key << '=' << value;
    }
    out << '\n';
    if (!r.exact.empty()) {
        out << "exact      " << r.exact << '\n';
    }
    out << "decimal    " << r.decimal << '\n';
    if (r.oracle) {
        const OracleBlock& o = *r.oracle;
        out << "oracle     " << o.partial_sum << "  (depth " << o.depth << ", " << o.mode << ")\n"
            << "|delta|    " << o.delta << '\n'
            << "tail       " << o.tail << (o.tail_credited ? "" : "  (not credited)") << '\n'
            << "tolerance  " << o.tolerance << '\n'
            << "result     " << (o.pass ? "PASS" : "FAIL") << '\n';
    }
    for (const auto& note : r.notes) {
        out << note << '\n';
    }
    return out.str();
}

std::string to_text(const TableRecord& t) {
    std::ostringstream out;
    out << "S_{k,j}: j = 0 in full, j >= 1 as multiples of e\n";
    out << "k\\j |";
    for (unsigned j = 0; j <= t.max_k; ++j) {
        out << ' ' << j;
    }
    out << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out << i + 1 << " | ";
        for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
            out << (j ? ", " : "") << t.rows[i][j];
        }
        out << '\n';
    }
    out << "\na_k = S_{k,k}/e\n";
    for (std::size_t i = 0; i < t.a_values.size(); ++i) {
        out << i + 1 << " | " << t.a_values[i].first << " ~ " << t.a_values[i].second << '\n';
    }
    return out.str();
}

std::string to_json(const OutputRecord& r) {
    Json j;
    j["query"] = params_json(r);
    j["exact"] = r.exact;
    j["decimal"] = r.decimal;
    if (r.oracle) {
        const OracleBlock& o = *r.oracle;
        j["oracle"] = {{"partial_sum", o.partial_sum}, {"depth", o.depth},
                       {"mode", o.mode},               {"delta", o.delta},
                       {"tail", o.tail},               {"tail_credited", o.tail_credited},
                       {"tolerance", o.tolerance},     {"pass", o.pass}};
    }
    j["notes"] = r.notes;
    return j.dump();
}

std::string to_json(const TableRecord& t) {
    Json j;
    j["query"] = {{"command", "table"}, {"max_k", std::to_string(t.max_k)}};
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        rows.push_back({{"k", i + 1}, {"cells", t.rows[i]}});
    }
    j["rows"] = rows;
    Json a = Json::array();
    for (std::size_t i = 0; i < t.a_values.size(); ++i) {
        a.push_back({{"k", i + 1}, {"exact", t.a_values[i].first}, {"decimal", t.a_values[i].second}});
    }
    j["a"] = a;
    return j.dump();
}

OutputRecord record_from_json(const std::string& text) {
    const Json j = Json::parse(text);
    OutputRecord r;
    for (const auto& [key, value] : j.at("query").items()) {
        if (key == "command") {
            r.command = value.get<std::string>();
        } else {
            r.params.emplace_back(key, value.get<std::string>());
        }
    }
    r.exact = j.at("exact").get<std::string>();
    r.decimal = j.at("decimal").get<std::string>();
    if (j.contains("oracle")) {
        const Json& o = j["oracle"];
        r.oracle = OracleBlock{o.at("partial_sum").get<std::string>(),
                               o.at("depth").get<unsigned>(),
                               o.at("mode").get<std::string>(),
                               o.at("delta").get<std::string>(),
                               o.at("tail").get<std::string>(),
                               o.at("tail_credited").get<bool>(),
                               o.at("tolerance").get<std::string>(),
                               o.at("pass").get<bool>()};
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiple factorial series: closed forms, brute-force oracle, tables"};
    app.name("mfs");
    app.fallthrough();
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    long k = 0;
    long j = 0;
    unsigned digits = 15;
    bool check = false;
    auto* skj = app.add_subcommand("skj", "S_{k,j} in closed form");
    skj->add_option("--k", k)->required();
    skj->add_option("--j", j)->required();
    skj->add_option("--digits", digits)->capture_default_str();
    skj->add_flag("--check", check, "cross-check against the divided-difference form");

    auto* ak = app.add_subcommand("ak", "a_k = S_{k,k}/e");
    ak->add_option("--k", k)->required();
    ak->add_option("--digits", digits)->capture_default_str();

    std::string nodes;
    auto* skx = app.add_subcommand("skx", "S_k(x_1,...,x_k) at distinct nonzero rational nodes");
    skx->add_option("--k", k)->required();
    skx->add_option("--x", nodes, "comma-separated p/q or integers")->required();
    skx->add_option("--digits", digits)->capture_default_str();

    long max_k = 5;
    auto* table = app.add_subcommand("table", "the S_{k,j} table and the a_k table");
    table->add_option("--max-k", max_k)->capture_default_str();

    VerifyArgs va;
    long vj = 0;
    std::string vx;
    auto* verify = app.add_subcommand("verify", "closed form against the truncated series");
    verify->add_option("--k", va.k)->required();
    auto* vj_opt = verify->add_option("--j", vj);
    auto* vx_opt = verify->add_option("--x", vx, "comma-separated p/q or integers");
    vj_opt->excludes(vx_opt);
    verify->add_option("--depth", va.depth)->capture_default_str();
    verify->add_option("--tolerance", va.tolerance)->capture_default_str();
    verify->add_option("--mode", va.mode, "auto, per-index or total-degree")->capture_default_str();
    verify->add_option("--digits", va.digits)->capture_default_str();

    GklArgs ga;
    auto* gkl = app.add_subcommand("gkl", "G_{k,l} for the exp or geometric series");
    gkl->add_option("--series", ga.series, "exp or geometric")->required();
    gkl->add_option("--k", ga.k)->required();
    gkl->add_option("--l", ga.ell)->required();
    gkl->add_option("--x", ga.nodes, "comma-separated numbers")->required();
    gkl->add_option("--digits", ga.digits)->capture_default_str();
    gkl->add_option("--depth", ga.depth)->capture_default_str();
    gkl->add_flag("--verify", ga.verify, "compare with the truncated series");
    gkl->add_option("--tolerance", ga.tolerance)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (table->parsed()) {
            const TableRecord t = cmd_table(max_k);
            out << (json ? to_json(t) + "\n" : to_text(t));
            return kOk;
        }
        OutputRecord r;
        if (skj->parsed()) {
            r = cmd_skj(k, j, digits, check);
        } else if (ak->parsed()) {
            r = cmd_ak(k, digits);
        } else if (skx->parsed()) {
            r = cmd_skx(k, nodes, digits);
        } else if (verify->parsed()) {
            if (vj_opt->count() > 0) {
                va.j = vj;
            }
            if (vx_opt->count() > 0) {
                va.nodes = vx;
            }
            r = cmd_verify(va);
        } else {
            r = cmd_gkl(ga);
        }
        out << (json ? to_json(r) + "\n" : to_text(r));
        const bool failed_check = std::any_of(r.notes.begin(), r.notes.end(), [](const auto& n) {
            return n.rfind(kCheckFailed, 0) == 0;
        });
        if ((r.oracle && !r.oracle->pass) || failed_check) {
            return kVerifyFail;
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceGuard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace mfs::cli
