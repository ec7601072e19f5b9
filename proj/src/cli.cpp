#include "charvar/cli.hpp"

#include "charvar/chartables.hpp"
#include "charvar/error.hpp"
#include "charvar/homcount.hpp"
#include "charvar/qpoly.hpp"
#include "charvar/repclassify.hpp"
#include "charvar/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace charvar {

namespace {

using nlohmann::json;

struct JobConfig {
    std::string command;
    std::string family = "free";
    int r = 1, g = 1, k = 2, a = 2, b = 3;
    std::string series = "gl";
    int rank = 2;
    std::vector<std::string> q;
    std::string method;
    std::string format = "text";
    std::uint64_t max_enum = 10000000ULL;
    unsigned workers = 1;
    int degree = -1;
};

GroupFamily make_family(const JobConfig& c)
{
    GroupFamily f;
    if (c.family == "free")
        f = GroupFamily::free(c.r);
    else if (c.family == "orientable")
        f = GroupFamily::orientable(c.g);
    else if (c.family == "nonorientable")
        f = GroupFamily::nonorientable(c.k);
    else
        f = GroupFamily::torusknot(c.a, c.b);
    f.validate();
    return f;
}

Series make_series(const JobConfig& c) { return c.series == "sl" ? Series::SL : Series::GL; }

std::string series_name(Series s) { return s == Series::SL ? "sl" : "gl"; }

// Rank 3 is only available for closed orientable surfaces of genus >= 2.
void check_rank(const GroupFamily& f, int rank)
{
    if (rank == 3 && f.kind != GroupFamily::Orientable)
        throw Error(ErrorKind::UnsupportedRank, "rank 3 needs an orientable surface");
    if (rank == 3 && f.g < 2)
        throw Error(ErrorKind::BadGenus, "rank 3 needs genus >= 2, got " + std::to_string(f.g));
}

// "5,9,13" has already been split by CLI11; "5..40" expands to the admissible prime powers in range.
std::vector<std::uint32_t> expand_q(const std::vector<std::string>& items, const GroupFamily& f, int rank)
{
    std::vector<std::uint32_t> out;
    for (const auto& it : items) {
        auto dots = it.find("..");
        try {
            if (dots == std::string::npos) {
                std::uint32_t q = std::uint32_t(std::stoul(it));
                check_admissible(f, rank, q);
                out.push_back(q);
                continue;
            }
            std::uint32_t lo = std::uint32_t(std::stoul(it.substr(0, dots)));
            std::uint32_t hi = std::uint32_t(std::stoul(it.substr(dots + 2)));
            std::uint64_t N = required_modulus(f, rank);
            for (std::uint32_t q = std::max(lo, 3u); q <= hi; ++q)
                if (is_prime_power(q) && q % N == 1 % N && q % 2 == 1)
                    out.push_back(q);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::BadParams, "cannot read q value '" + it + "'");
        }
    }
    if (out.empty())
        throw Error(ErrorKind::BadParams, "no q values given");
    return out;
}

// Smallest admissible prime powers >= 5.
std::vector<std::uint32_t> default_nodes(const GroupFamily& f, int rank, std::size_t count)
{
    std::uint64_t N = required_modulus(f, rank);
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 5; out.size() < count; ++q)
        if (q % 2 == 1 && is_prime_power(q) && q % N == 1 % N)
            out.push_back(q);
    return out;
}

std::string mpq_str(const mpq_class& v) { return v.get_str(); }

int cmd_epoly(const JobConfig& c, std::ostream& out)
{
    GroupFamily f = make_family(c);
    Series s = make_series(c);
    check_rank(f, c.rank);
    std::string m = c.method.empty() ? "closed" : c.method;
    if (m == "brute")
        throw Error(ErrorKind::BadParams, "epoly has no brute method; use verify or homcount");
    bool want_closed = m == "closed" || m == "all";
    bool want_pipe = m == "pipeline" || m == "all";
    QPolynomial closed, pipe;
    if (want_closed)
        closed = closed_form_epoly(f, s, c.rank);
    if (want_pipe)
        pipe = count_reductive(f, s, c.rank);
    bool equal = !(want_closed && want_pipe) || closed == pipe;
    if (c.format == "json") {
        json j{{"family", to_string(f)}, {"series", series_name(s)}, {"rank", c.rank}};
        if (want_closed)
            j["closed"] = closed.to_string();
        if (want_pipe)
            j["pipeline"] = pipe.to_string();
        if (want_closed && want_pipe)
            j["verdict"] = equal ? "EQUAL" : "DIFFER";
        out << j.dump(2) << "\n";
    } else if (want_closed && want_pipe) {
        out << "closed:   " << closed.to_string() << "\n";
        out << "pipeline: " << pipe.to_string() << "\n";
        out << "verdict:  " << (equal ? "EQUAL" : "DIFFER") << "\n";
        if (!equal)
            out << "difference: " << (closed - pipe).to_string() << "\n";
    } else {
        out << (want_closed ? closed : pipe).to_string() << "\n";
    }
    return equal ? kExitOk : kExitMismatch;
}

int cmd_verify(const JobConfig& c, std::ostream& out)
{
    GroupFamily f = make_family(c);
    Series s = make_series(c);
    check_rank(f, c.rank);
    std::vector<std::uint32_t> qs = expand_q(c.q, f, c.rank);
    QPolynomial formula = closed_form_epoly(f, s, c.rank);
    json rows = json::array();
    bool all = true;
    for (std::uint32_t q : qs) {
        mpq_class fv = formula.evaluate(q);
        ClassifyOptions opt;
        opt.max_reps = c.max_enum;
        ClassCount cc = count_reductive_classes(f, {s, c.rank, q}, opt);
        bool match = fv == mpq_class((unsigned long)cc.total);
        all = all && match;
        rows.push_back({{"q", q}, {"formula", mpq_str(fv)}, {"oracle", cc.total}, {"match", match}});
    }
    if (c.format == "json") {
        out << json{{"family", to_string(f)}, {"series", series_name(s)}, {"rank", c.rank},
                    {"formula", formula.to_string()}, {"rows", rows}}
                   .dump(2)
            << "\n";
    } else {
        out << to_string(f) << " " << (s == Series::SL ? "SL" : "GL") << c.rank << ", formula "
            << formula.to_string() << "\n";
        out << std::setw(6) << "q" << std::setw(14) << "formula" << std::setw(14) << "oracle" << "  match\n";
        for (const auto& r : rows)
            out << std::setw(6) << r["q"].get<std::uint32_t>() << std::setw(14) << r["formula"].get<std::string>()
                << std::setw(14) << r["oracle"].get<std::uint64_t>() << "  " << (r["match"].get<bool>() ? "yes" : "NO")
                << "\n";
    }
    return all ? kExitOk : kExitMismatch;
}

int cmd_homcount(const JobConfig& c, std::ostream& out)
{
    GroupFamily f = make_family(c);
    Series s = make_series(c);
    if (c.rank == 3)
        check_rank(f, 3);
    std::string m = c.method.empty() ? "closed" : c.method;
    if (m == "pipeline")
        throw Error(ErrorKind::BadParams, "homcount methods are closed, brute and all");
    std::vector<std::uint32_t> qs;
    for (const auto& it : c.q) {
        std::uint32_t q = 0;
        try {
            q = std::uint32_t(std::stoul(it));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::BadParams, "cannot read q value '" + it + "'");
        }
        prime_power(q);
        qs.push_back(q);
    }
    if (qs.empty())
        throw Error(ErrorKind::BadParams, "no q values given");
    json rows = json::array();
    bool all = true;
    BruteOptions bo;
    bo.workers = std::max(1u, c.workers);
    for (std::uint32_t q : qs) {
        GroupSpec spec{s, c.rank, q};
        mpz_class closed, brute;
        if (m == "closed" || m == "all") {
            closed = hom_count(f, spec);
            rows.push_back({{"family", to_string(f)}, {"series", series_name(s)}, {"q", q}, {"method", "closed"},
                            {"count", closed.get_str()}});
        }
        if (m == "brute" || m == "all") {
            brute = hom_count_brute(f, spec, bo);
            rows.push_back({{"family", to_string(f)}, {"series", series_name(s)}, {"q", q}, {"method", "brute"},
                            {"count", brute.get_str()}});
        }
        if (m == "all" && closed != brute)
            all = false;
    }
    if (c.format == "json") {
        out << rows.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            out << r["family"].get<std::string>() << " " << r["series"].get<std::string>() << c.rank
                << " q=" << r["q"].get<std::uint32_t>() << " " << r["method"].get<std::string>() << ": "
                << r["count"].get<std::string>() << "\n";
        if (m == "all")
            out << "verdict: " << (all ? "EQUAL" : "DIFFER") << "\n";
    }
    return all ? kExitOk : kExitMismatch;
}

int cmd_interpolate(const JobConfig& c, std::ostream& out)
{
    GroupFamily f = make_family(c);
    Series s = make_series(c);
    check_rank(f, c.rank);
    bool have_closed = true;
    QPolynomial closed;
    try {
        closed = closed_form_epoly(f, s, c.rank);
    } catch (const Error&) {
        have_closed = false;
    }
    int bound = c.degree;
    if (bound < 0) {
        if (!have_closed)
            throw Error(ErrorKind::BadParams, "give --degree, no closed form to take it from");
        bound = closed.degree();
    }
    // one extra node checks the fit
    std::vector<std::uint32_t> qs =
        c.q.empty() ? default_nodes(f, c.rank, std::size_t(bound) + 2) : expand_q(c.q, f, c.rank);
    std::vector<std::pair<mpq_class, mpq_class>> pts;
    for (std::uint32_t q : qs)
        pts.emplace_back(mpq_class(q), mpq_class(count_reductive(f, s, c.rank, q)));
    QPolynomial p = interpolate(pts, bound);
    bool match = !have_closed || p == closed;
    if (c.format == "json") {
        json nodes = json::array();
        for (const auto& [q, v] : pts)
            nodes.push_back({{"q", q.get_str()}, {"value", v.get_str()}});
        json j{{"family", to_string(f)}, {"series", series_name(s)}, {"rank", c.rank}, {"degree_bound", bound},
               {"points", nodes}, {"polynomial", p.to_string()}};
        if (have_closed) {
            j["closed"] = closed.to_string();
            j["verdict"] = match ? "EQUAL" : "DIFFER";
        }
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [q, v] : pts)
            out << "q=" << q.get_str() << " count=" << v.get_str() << "\n";
        out << "interpolated: " << p.to_string() << "\n";
        if (have_closed)
            out << "closed form:  " << closed.to_string() << " (" << (match ? "EQUAL" : "DIFFER") << ")\n";
    }
    return match ? kExitOk : kExitMismatch;
}

int cmd_strata(const JobConfig& c, std::ostream& out)
{
    GroupFamily f = make_family(c);
    Series s = make_series(c);
    check_rank(f, c.rank);
    std::vector<StrataRow> rows = c.rank == 2 ? rank2_strata_table(f, s) : rank3_strata_table(f.g, s);
    std::vector<StrataValue> vals;
    bool numeric = !c.q.empty();
    if (numeric) {
        std::vector<std::uint32_t> qs = expand_q(c.q, f, c.rank);
        if (qs.size() != 1)
            throw Error(ErrorKind::BadParams, "strata takes a single q");
        StrataInputs in = c.rank == 2 ? rank2_inputs(f, s, qs[0]) : rank3_inputs(f.g, s, qs[0]);
        vals = instantiate(rows, s, in);
    } else {
        StrataInputs in = c.rank == 2 ? rank2_inputs(f, s) : rank3_inputs(f.g, s);
        vals = instantiate(rows, s, in);
    }
    out << (c.format == "json" ? strata_table_json(rows, s, &vals) : strata_table_text(rows, s, &vals));
    if (c.format == "json")
        out << "\n";
    return kExitOk;
}

int cmd_chartable(const JobConfig& c, std::ostream& out)
{
    Series s = make_series(c);
    if (c.q.size() != 1)
        throw Error(ErrorKind::BadParams, "chartable takes a single q");
    std::uint32_t q = 0;
    try {
        q = std::uint32_t(std::stoul(c.q[0]));
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::BadParams, "cannot read q value '" + c.q[0] + "'");
    }
    prime_power(q);
    if (q % 2 == 0)
        throw Error(ErrorKind::EvenQ, "character tables need odd q");
    CharTable t = s == Series::SL ? sl2_table(q) : gl2_table(q);
    if (c.format != "json") {
        out << t.dump();
        return kExitOk;
    }
    json chars = json::array();
    for (const auto& d : t.chars) {
        json vals = json::array();
        for (const auto& v : d.values)
            vals.push_back(v.to_string());
        chars.push_back({{"label", to_string(d.label)}, {"degree", d.degree}, {"values", vals}});
    }
    json classes = json::array();
    for (std::size_t i = 0; i < t.class_labels.size(); ++i)
        classes.push_back({{"label", to_string(t.class_labels[i])}, {"size", t.group->classes()[i].size}});
    out << json{{"group", to_string(t.spec)}, {"classes", classes}, {"characters", chars}}.dump(2) << "\n";
    return kExitOk;
}

void add_common(CLI::App* sub, JobConfig& c)
{
    sub->add_option("--family", c.family, "free | orientable | nonorientable | torusknot")
        ->check(CLI::IsMember({"free", "orientable", "nonorientable", "torusknot"}));
    sub->add_option("--r", c.r, "free group rank");
    sub->add_option("--g", c.g, "genus");
    sub->add_option("--k", c.k, "non-orientable genus");
    sub->add_option("--a", c.a, "torus knot a");
    sub->add_option("--b", c.b, "torus knot b");
    sub->add_option("--series", c.series, "gl | sl")->check(CLI::IsMember({"gl", "sl"}));
    sub->add_option("--rank", c.rank, "2 or 3")->check(CLI::IsMember({2, 3}));
    sub->add_option("--q", c.q, "prime powers, comma separated; lo..hi for a range")->delimiter(',');
    sub->add_option("--method", c.method, "closed | pipeline | brute | all")
        ->check(CLI::IsMember({"closed", "pipeline", "brute", "all"}));
    sub->add_option("--format", c.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-enum", c.max_enum, "cap on enumerated representations");
    sub->add_option("--workers", c.workers, "worker threads for brute counts");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Counts of representations into GL_n(F_q) and SL_n(F_q), n = 2, 3, and E-polynomials of character varieties",
                 "charvar"};
    app.require_subcommand(1);
    JobConfig c;
    struct Cmd {
        const char* name;
        const char* help;
    };
    for (Cmd cmd : {Cmd{"epoly", "E-polynomial by closed form and/or strata pipeline"},
                    Cmd{"verify", "closed form against the enumeration oracle"},
                    Cmd{"homcount", "|Hom(Gamma, G)| by character sums and/or enumeration"},
                    Cmd{"interpolate", "interpolate pipeline point counts"},
                    Cmd{"strata", "dump the stratification table"},
                    Cmd{"chartable", "dump a GL2 or SL2 character table"}}) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        add_common(sub, c);
        if (std::string(cmd.name) == "interpolate")
            sub->add_option("--degree", c.degree, "degree bound (default: degree of the closed form)");
        sub->callback([&c, name = std::string(cmd.name)] { c.command = name; });
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        int rc = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (c.command == "epoly")
            return cmd_epoly(c, out);
        if (c.command == "verify")
            return cmd_verify(c, out);
        if (c.command == "homcount")
            return cmd_homcount(c, out);
        if (c.command == "interpolate")
            return cmd_interpolate(c, out);
        if (c.command == "strata")
            return cmd_strata(c, out);
        if (c.command == "chartable")
            return cmd_chartable(c, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::TooLarge ? kExitTooLarge : kExitBadInput;
    }
    return kExitBadInput;
}

} // namespace charvar
