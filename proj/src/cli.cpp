#include "qseries/cli.hpp"

#include "qseries/identities.hpp"
#include "qseries/partitions.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fnmatch.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace qseries::cli {

namespace {

using nlohmann::json;

bool is_glob(const std::string& s) { return s.find_first_of("*?[") != std::string::npos; }

bool matches(const std::optional<std::string>& filter, const std::string& id)
{
    return !filter || fnmatch(filter->c_str(), id.c_str(), 0) == 0;
}

void unknown_id(const std::string& id, std::ostream& err)
{
    err << "error: unknown id '" << id << "'";
    auto near = nearest_ids(id);
    if (!near.empty()) {
        err << "; nearest:";
        for (const auto& n : near) {
            err << " " << n;
        }
    }
    err << "\n";
}

json mismatch_json(const std::optional<Mismatch>& m)
{
    if (!m) {
        return nullptr;
    }
    return json{{"exponent", m->exponent},
                {"dega", m->deg_a},
                {"degb", m->deg_b},
                {"lhs", to_exact_string(m->lhs)},
                {"rhs", to_exact_string(m->rhs)}};
}

json report_json(const VerificationReport& r)
{
    return json{{"id", r.id},
                {"mode", to_string(r.mode)},
                {"order", r.order},
                {"status", to_string(r.status)},
                {"mismatch", mismatch_json(r.mismatch)},
                {"elapsed_ms", r.elapsed_ms}};
}

std::string report_text(const VerificationReport& r)
{
    std::ostringstream os;
    os << r.id << " " << to_string(r.mode) << " order=" << r.order << " " << to_string(r.status) << " "
       << static_cast<long>(r.elapsed_ms) << "ms";
    if (r.mismatch) {
        const auto& m = *r.mismatch;
        os << " first difference at q^" << m.exponent;
        if (m.deg_a != 0 || m.deg_b != 0) {
            os << " a^" << m.deg_a << " b^" << m.deg_b;
        }
        os << ": lhs=" << to_exact_string(m.lhs) << " rhs=" << to_exact_string(m.rhs);
        if (!m.context.empty()) {
            os << " (" << m.context << ")";
        }
    }
    if (!r.message.empty()) {
        os << " " << r.message;
    }
    return os.str();
}

template <class C>
json series_json(const TruncatedSeries<C>& s)
{
    json terms = json::array();
    s.for_each([&](int e, const C& c) {
        CoeffTraits<C>::for_each_term(c, [&](const ParamDegree& d, const Rational& v) {
            json t{{"e", e}, {"c", to_exact_string(v)}};
            if constexpr (std::is_same_v<C, ParamPoly>) {
                t["a"] = d.a;
                t["b"] = d.b;
            }
            terms.push_back(std::move(t));
        });
    });
    return json{{"order", s.order()}, {"terms", terms}};
}

int cmd_list(const RunConfig& cfg, std::ostream& out)
{
    json ids = json::array();
    json ineqs = json::array();
    std::ostringstream text;
    for (const auto& r : registry()) {
        if (!matches(cfg.id_filter, r.id)) {
            continue;
        }
        ids.push_back(json{{"id", r.id}, {"mode", to_string(r.mode)}, {"default_order", r.default_order},
                           {"description", r.description}});
        text << r.id << "  " << to_string(r.mode) << "  " << r.default_order << "  " << r.description << "\n";
    }
    for (const auto& r : negative_controls()) {
        if (!matches(cfg.id_filter, r.id)) {
            continue;
        }
        ids.push_back(json{{"id", r.id}, {"mode", to_string(r.mode)}, {"default_order", r.default_order},
                           {"description", r.description}, {"negative_control", true}});
        text << r.id << "  " << to_string(r.mode) << "  " << r.default_order << "  (negative control) "
             << r.description << "\n";
    }
    for (const auto& s : inequalities()) {
        if (!matches(cfg.id_filter, s.id)) {
            continue;
        }
        ineqs.push_back(json{{"id", s.id}, {"function", to_string(s.function)}, {"description", s.description}});
        text << s.id << "  INEQUALITY  " << s.description << "\n";
    }
    if (cfg.format == Format::json) {
        out << json{{"identities", ids}, {"inequalities", ineqs}}.dump(2) << "\n";
    }
    else {
        out << text.str();
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<const IdentityRecord*> records;
    if (cfg.id_filter && !is_glob(*cfg.id_filter)) {
        const IdentityRecord* r = find_identity(*cfg.id_filter);
        if (!r) {
            unknown_id(*cfg.id_filter, err);
            return exit_usage;
        }
        records.push_back(r);
    }
    else {
        for (const auto& r : registry()) {
            if (matches(cfg.id_filter, r.id)) {
                records.push_back(&r);
            }
        }
        if (records.empty()) {
            err << "error: no identity matches '" << cfg.id_filter.value_or("") << "'\n";
            return exit_usage;
        }
    }
    auto reports = verify_all(records, cfg.order, cfg.parallelism);

    bool mismatch = false;
    bool builder = false;
    json arr = json::array();
    for (const auto& r : reports) {
        mismatch |= r.status == Status::mismatch;
        builder |= r.status == Status::builder_error;
        if (cfg.format == Format::json) {
            arr.push_back(report_json(r));
        }
        else {
            out << report_text(r) << "\n";
        }
    }
    if (cfg.format == Format::json) {
        out << arr.dump(2) << "\n";
    }
    else {
        std::size_t ok = std::count_if(reports.begin(), reports.end(),
                                       [](const auto& r) { return r.status == Status::verified; });
        out << ok << "/" << reports.size() << " verified\n";
    }
    if (builder) {
        return exit_usage;
    }
    return mismatch ? exit_failed : exit_ok;
}

int cmd_inequality(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    std::vector<const InequalitySpec*> specs;
    for (const auto& s : inequalities()) {
        if (matches(cfg.id_filter, s.id)) {
            specs.push_back(&s);
        }
    }
    if (specs.empty()) {
        err << "error: no inequality matches '" << cfg.id_filter.value_or("") << "'; known:";
        for (const auto& s : inequalities()) {
            err << " " << s.id;
        }
        err << "\n";
        return exit_usage;
    }
    if (cfg.max_n < 0) {
        err << "error: --max-n must be nonnegative\n";
        return exit_usage;
    }
    auto reports = inequality_check_all(specs, cfg.max_n, cfg.parallelism);
    bool violated = false;
    json arr = json::array();
    for (const auto& r : reports) {
        violated |= !r.holds();
        std::string status = r.holds() ? "NONNEGATIVE" : "VIOLATED";
        if (cfg.format == Format::json) {
            arr.push_back(json{{"id", r.id},
                               {"max_n", r.max_n},
                               {"status", status},
                               {"violations", r.violations},
                               {"zeros", r.zeros},
                               {"elapsed_ms", r.elapsed_ms}});
        }
        else {
            out << r.id << " max_n=" << r.max_n << " " << status << " zeros=" << r.zeros.size();
            if (!r.holds()) {
                out << " first violation at N=" << r.violations.front() << " S="
                    << to_exact_string(r.values[r.violations.front()]);
            }
            out << " " << static_cast<long>(r.elapsed_ms) << "ms\n";
        }
    }
    if (cfg.format == Format::json) {
        out << arr.dump(2) << "\n";
    }
    return violated ? exit_failed : exit_ok;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (!cfg.id_filter) {
        err << "error: expand needs --id\n";
        return exit_usage;
    }
    const std::string& id = *cfg.id_filter;
    if (id == "p" || id == "pod" || id == "pbar") {
        long order = cfg.order.value_or(50);
        auto t = partition_table(static_cast<int>(order - 1));
        const auto& col = id == "p" ? t.p : id == "pod" ? t.pod : t.pbar;
        json coeffs = json::array();
        for (const auto& c : col) {
            coeffs.push_back(to_exact_string(c));
        }
        if (cfg.format == Format::json) {
            out << json{{"id", id}, {"order", order}, {"coefficients", coeffs}}.dump(2) << "\n";
        }
        else {
            for (std::size_t n = 0; n < col.size(); ++n) {
                out << id << "(" << n << ") = " << col[n] << "\n";
            }
        }
        return exit_ok;
    }
    const IdentityRecord* r = find_identity(id);
    if (!r) {
        unknown_id(id, err);
        return exit_usage;
    }
    if (r->mode == Mode::finite_lemma || r->mode == Mode::transform_sampled) {
        err << "error: expand supports univariate and parameterized records; use verify for " << id << "\n";
        return exit_usage;
    }
    long order = cfg.order.value_or(r->default_order);
    try {
        json doc{{"id", r->id}, {"mode", to_string(r->mode)}, {"order", order}};
        std::string lhs_text, rhs_text;
        if (r->mode == Mode::parameterized) {
            auto l = build_expr<ParamPoly>(r->lhs, order, r->weights);
            auto rr = build_expr<ParamPoly>(r->rhs, order, r->weights);
            doc["lhs"] = series_json(l);
            doc["rhs"] = series_json(rr);
            lhs_text = to_string(l);
            rhs_text = to_string(rr);
        }
        else {
            auto l = build_expr<Rational>(r->lhs, order);
            auto rr = build_expr<Rational>(r->rhs, order);
            doc["lhs"] = series_json(l);
            doc["rhs"] = series_json(rr);
            lhs_text = to_string(l);
            rhs_text = to_string(rr);
        }
        if (cfg.format == Format::json) {
            out << doc.dump(2) << "\n";
        }
        else {
            out << r->id << " lhs = " << lhs_text << "\n" << r->id << " rhs = " << rhs_text << "\n";
        }
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}

} // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.order && *cfg.order < 4) {
        err << "error: --order must be at least 4\n";
        return exit_usage;
    }
    if (cfg.parallelism < 1) {
        err << "error: --parallelism must be at least 1\n";
        return exit_usage;
    }
    std::ostringstream buffer;
    std::ostream& sink = cfg.output_path ? static_cast<std::ostream&>(buffer) : out;
    int code = exit_usage;
    switch (cfg.command) {
    case Command::list:
        code = cmd_list(cfg, sink);
        break;
    case Command::verify:
        code = cmd_verify(cfg, sink, err);
        break;
    case Command::inequality:
        code = cmd_inequality(cfg, sink, err);
        break;
    case Command::expand:
        code = cmd_expand(cfg, sink, err);
        break;
    }
    if (cfg.output_path) {
        std::ofstream f(*cfg.output_path);
        if (!f) {
            err << "error: cannot write " << *cfg.output_path << "\n";
            return exit_usage;
        }
        f << buffer.str();
    }
    return code;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-series identity verifier"};
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string format = "text";
    std::string id;
    long order = 0;
    std::string output;
    cfg.parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--id", id, "identity or inequality id (glob allowed)");
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--output", output, "write the report to a file");
    };
    auto* list = app.add_subcommand("list", "list registered identities and inequalities");
    add_common(list);
    auto* verify = app.add_subcommand("verify", "verify identities");
    add_common(verify);
    auto* verify_order = verify->add_option("--order", order, "truncation order (record default when omitted)");
    verify->add_option("--parallelism", cfg.parallelism, "worker threads");
    auto* ineq = app.add_subcommand("inequality", "scan partition inequalities");
    add_common(ineq);
    ineq->add_option("--max-n", cfg.max_n, "largest N checked");
    ineq->add_option("--parallelism", cfg.parallelism, "worker threads");
    auto* expand = app.add_subcommand("expand", "print both sides of a record, or p/pod/pbar");
    add_common(expand);
    auto* expand_order = expand->add_option("--order", order, "truncation order");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (*list) {
        cfg.command = Command::list;
    }
    else if (*verify) {
        cfg.command = Command::verify;
    }
    else if (*ineq) {
        cfg.command = Command::inequality;
    }
    else {
        cfg.command = Command::expand;
    }
    if (verify_order->count() > 0 || expand_order->count() > 0) {
        cfg.order = order;
    }
    if (!id.empty()) {
        cfg.id_filter = id;
    }
    if (!output.empty()) {
        cfg.output_path = output;
    }
    cfg.format = format == "json" ? Format::json : Format::text;
    return run(cfg, out, err);
}

} // namespace qseries::cli
