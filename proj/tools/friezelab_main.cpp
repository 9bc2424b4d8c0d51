#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "friezelab/census.hpp"
#include "friezelab/config.hpp"
#include "friezelab/errors.hpp"
#include "friezelab/frieze.hpp"
#include "friezelab/gf.hpp"
#include "friezelab/io.hpp"
#include "friezelab/linalg.hpp"

using namespace friezelab;
using linalg::cpp_int;

namespace {

constexpr unsigned long long kDefaultNodeCap = 100000000ULL;

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

unsigned long long env_node_cap() {
    const char* env = std::getenv("FRIEZELAB_NODE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultNodeCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw invalid_parameter(std::string("FRIEZELAB_NODE_CAP is not a "
                                            "nonnegative integer: ") +
                                env);
    return v;
}

cpp_int pow_int(long base, long exp) {
    cpp_int r = 1;
    for (long e = 0; e < exp; ++e) r *= base;
    return r;
}

template <typename Fn>
auto with_input(const std::string& path, Fn fn) {
    if (path == "-") return fn(std::cin);
    std::ifstream is(path);
    if (!is.good()) throw invalid_parameter("cannot open input file " + path);
    return fn(is);
}

std::vector<long> quiddity_row_major(const frieze::Quiddity& q) {
    std::vector<long> out;
    const gf::Field& f = q.field();
    for (int s = 1; s < q.k(); ++s)
        for (long i = 1; i <= q.n(); ++i)
            out.push_back(f.io_value(q.at(s, i)));
    return out;
}

void print_joined(std::ostream& os, const std::vector<long>& vals, char sep) {
    for (std::size_t m = 0; m < vals.size(); ++m)
        os << (m > 0 ? std::string(1, sep) : "") << vals[m];
    os << '\n';
}

nlohmann::json quiddity_json(const frieze::Quiddity& q) {
    return nlohmann::json(quiddity_row_major(q));
}

// Options shared by the counting and enumeration commands.
struct RunOpts {
    int workers = default_workers();
    unsigned long long node_cap = kDefaultNodeCap;

    [[nodiscard]] config::DfsOptions dfs() const { return {workers, node_cap}; }
    [[nodiscard]] frieze::EnumerateOptions enumerate() const {
        return {workers, node_cap};
    }
};

void add_run_opts(CLI::App* cmd, RunOpts& o) {
    cmd->add_option("--workers", o.workers, "worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--node-cap", o.node_cap,
                    "search node budget, 0 = unlimited (default: 1e8, or "
                    "FRIEZELAB_NODE_CAP)");
}

struct CountOpts {
    int k = 0;
    long n = -1, w = -1, q = 0;
    std::string family, method = "auto", format = "text";
    bool conjectured = false;
    RunOpts run;
};

int run_count(const CountOpts& o) {
    io::CountReport r;
    r.q = o.q;
    r.node_cap = o.run.node_cap;
    if (!o.family.empty()) {
        if (o.conjectured)
            throw invalid_parameter("--conjectured does not apply to families");
        if (o.w >= 0)
            throw invalid_parameter("family counts take --n, not --w");
        if (o.n < 0) throw invalid_parameter("family counts need --n");
        r.op = "family-count";
        r.family = o.family;
        r.n = o.n;
        r.method = census::parse_method(o.method);
        r.value = census::family_count(o.family, o.n, o.q, r.method, o.run.dfs(),
                                       o.k);
        r.k = config::family_spec(o.family, o.n, o.k).k;
    } else {
        if (o.k == 0) throw invalid_parameter("--k is required");
        if ((o.n < 0) == (o.w < 0))
            throw invalid_parameter("provide exactly one of --n and --w");
        r.k = o.k;
        r.n = o.n >= 0 ? o.n : o.w + o.k + 1;
        r.w = r.n - o.k - 1;
        if (o.conjectured) {
            if (o.method != "auto")
                throw invalid_parameter("--conjectured picks its own method");
            r.op = "conjectured-count";
            r.method = census::Method::closed_form;
            r.value = census::conjectured_count(o.k, r.n, o.q);
            std::cerr << "note: conjectural value, not proven for order "
                      << o.k << '\n';
        } else {
            r.op = "frieze-count";
            r.method = census::parse_method(o.method);
            r.value = census::frieze_count(o.k, r.n, o.q, r.method, o.run.dfs());
        }
    }
    if (o.format == "json")
        std::cout << io::report_json(r);
    else if (o.format == "csv")
        std::cout << io::report_csv(r);
    else
        std::cout << io::report_text(r);
    return 0;
}

struct EnumQuidOpts {
    int k = 0;
    long n = -1, w = -1, q = 0;
    bool print = false;
    unsigned long long limit = 0;
    std::string format = "text";
    RunOpts run;
};

int run_enum_quiddities(const EnumQuidOpts& o) {
    if ((o.n < 0) == (o.w < 0))
        throw invalid_parameter("provide exactly one of --n and --w");
    const long n = o.n >= 0 ? o.n : o.w + o.k + 1;
    const gf::Field& f = gf::make_field(o.q);

    unsigned long long count = 0, printed = 0;
    nlohmann::json entries = nlohmann::json::array();
    const bool text_stream = o.print && o.format != "json";
    if (text_stream && o.format == "text")
        std::cout << o.k << ' ' << n << ' ' << o.q << '\n';
    frieze::enumerate_quiddities(
        f, o.k, n,
        [&](const frieze::Quiddity& qd) {
            ++count;
            if (!o.print || (o.limit != 0 && printed >= o.limit)) return;
            ++printed;
            if (o.format == "json")
                entries.push_back(quiddity_json(qd));
            else
                print_joined(std::cout, quiddity_row_major(qd),
                             o.format == "csv" ? ',' : ' ');
        },
        o.run.enumerate());

    io::CountReport r;
    r.op = "quiddity-enumeration";
    r.k = o.k;
    r.n = n;
    r.w = n - o.k - 1;
    r.q = o.q;
    r.method = census::Method::enumerate;
    r.value = count;
    r.node_cap = o.run.node_cap;
    if (o.format == "json") {
        auto j = nlohmann::json::parse(io::report_json(r));
        if (o.print) j["entries"] = std::move(entries);
        std::cout << j.dump() << '\n';
    } else if (!o.print) {
        std::cout << (o.format == "csv" ? io::report_csv(r) : io::report_text(r));
    }
    return 0;
}

struct EnumConfOpts {
    int k = 0;
    long n = -1, q = 0;
    std::string family, spec_path, format = "text";
    bool print = false;
    unsigned long long limit = 0;
    RunOpts run;
};

int run_enum_configs(const EnumConfOpts& o) {
    if (o.family.empty() == o.spec_path.empty())
        throw invalid_parameter("provide exactly one of --family and --spec");
    config::DfsSpec spec;
    if (!o.family.empty()) {
        if (o.n < 0) throw invalid_parameter("--family needs --n");
        spec = config::family_spec(o.family, o.n, o.k);
    } else {
        spec = with_input(o.spec_path,
                          [](std::istream& is) { return io::read_spec(is); });
    }
    const gf::Field& f = gf::make_field(o.q);

    cpp_int count = 0;
    unsigned long long printed = 0;
    nlohmann::json entries = nlohmann::json::array();
    if (o.print) {
        config::for_each_tuple(
            f, spec,
            [&](const config::PointTable& t, const std::vector<std::uint32_t>& ids) {
                ++count;
                if (o.limit != 0 && printed >= o.limit) return;
                ++printed;
                if (o.format == "json")
                    entries.push_back(io::tuple_line(t, ids));
                else
                    std::cout << io::tuple_line(t, ids) << '\n';
            },
            o.run.dfs());
    } else {
        count = config::count_tuples(f, spec, o.run.dfs());
    }

    io::CountReport r;
    r.op = "config-enumeration";
    r.family = o.family;
    r.k = spec.k;
    r.n = spec.n;
    r.q = o.q;
    r.method = census::Method::search;
    r.value = count;
    r.node_cap = o.run.node_cap;
    if (o.format == "json") {
        auto j = nlohmann::json::parse(io::report_json(r));
        if (o.print) j["entries"] = std::move(entries);
        std::cout << j.dump() << '\n';
    } else if (!o.print) {
        std::cout << (o.format == "csv" ? io::report_csv(r) : io::report_text(r));
    }
    return 0;
}

struct FileOpts {
    std::string input, output, format = "text";
};

int run_build_frieze(const FileOpts& o) {
    const frieze::Quiddity q = with_input(
        o.input, [](std::istream& is) { return io::read_quiddity(is); });
    const frieze::Frieze fr = frieze::build_frieze(q);
    const frieze::FriezeReport rep = frieze::validate_frieze(fr);
    if (!rep.valid)
        throw invariant_violation("built pattern failed validation: " +
                                  (rep.failures.empty() ? "?" : rep.failures[0]));
    if (o.output.empty()) {
        io::write_frieze(std::cout, fr);
    } else {
        std::ofstream os(o.output);
        if (!os.good())
            throw invalid_parameter("cannot open output file " + o.output);
        io::write_frieze(os, fr);
    }
    return 0;
}

int run_validate_frieze(const FileOpts& o) {
    const frieze::Frieze fr = with_input(
        o.input, [](std::istream& is) { return io::read_frieze(is); });
    const frieze::FriezeReport rep = frieze::validate_frieze(fr);
    std::cout << (o.format == "json" ? io::frieze_report_json(rep)
                                     : io::frieze_report_text(rep));
    return rep.valid ? 0 : 1;
}

int run_lift(const FileOpts& o) {
    const io::LoadedConfig lc = with_input(
        o.input, [](std::istream& is) { return io::read_config(is); });
    const gf::Field& f = *lc.field;
    const auto lift = config::constant_det_lift(lc.points, f);
    if (!lift) {
        if (o.format == "json")
            std::cout << "{\"exists\":false}\n";
        else
            std::cout << "no constant-determinant lift\n";
        return 1;
    }
    const frieze::Quiddity q = config::coefficients_of_lift(lift->vectors, f);
    std::vector<long> scalars;
    for (const auto& s : lift->scalars) scalars.push_back(f.io_value(s));
    if (o.format == "json") {
        nlohmann::json j;
        j["exists"] = true;
        j["det"] = f.io_value(lift->det);
        j["scalars"] = scalars;
        nlohmann::json vecs = nlohmann::json::array();
        for (const auto& v : lift->vectors) {
            std::vector<long> row;
            for (const auto& x : v) row.push_back(f.io_value(x));
            vecs.push_back(row);
        }
        j["vectors"] = std::move(vecs);
        j["quiddity"] = quiddity_json(q);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "lift exists\n";
        std::cout << "constant determinant: " << f.io_value(lift->det) << '\n';
        std::cout << "scalars:";
        for (const long s : scalars) std::cout << ' ' << s;
        std::cout << '\n';
        std::cout << "lifted vectors:\n";
        io::write_config(std::cout, lift->vectors, f);
        std::cout << "coefficients:\n";
        io::write_quiddity(std::cout, q);
    }
    return 0;
}

int run_decompose(const FileOpts& o) {
    const frieze::Quiddity q = with_input(
        o.input, [](std::istream& is) { return io::read_quiddity(is); });
    const config::Decomposition d = config::maximal_decomposition(q);
    const long qq = q.field().q();
    const cpp_int set_size = pow_int(qq - 1, d.g - d.parts);
    const cpp_int stab = pow_int(qq - 1, d.parts - 1);
    if (o.format == "json") {
        nlohmann::json j;
        j["g"] = d.g;
        j["parts"] = d.parts;
        j["part_of"] = d.part_of;
        j["coefficient_set_size"] = set_size.str();
        j["stabilizer_order"] = stab.str();
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "g: " << d.g << '\n';
        std::cout << "parts: " << d.parts << '\n';
        std::cout << "residue parts:";
        for (const int p : d.part_of) std::cout << ' ' << p;
        std::cout << '\n';
        std::cout << "coefficient set size: " << set_size.str() << '\n';
        std::cout << "stabilizer order: " << stab.str() << '\n';
    }
    return 0;
}

struct TablesOpts {
    std::string which, format = "text";
};

int run_tables(const TablesOpts& o) {
    int which = 0;
    if (o.which == "fig1" || o.which == "1")
        which = 1;
    else if (o.which == "fig2" || o.which == "2")
        which = 2;
    else
        throw invalid_parameter("--which must be fig1 or fig2");
    const census::Table t = census::reproduce_table(which);
    if (o.format == "json")
        std::cout << io::table_json(t);
    else if (o.format == "csv")
        std::cout << io::table_csv(t);
    else
        std::cout << io::table_text(t);
    return t.matches() ? 0 : 1;
}

struct SelfcheckOpts {
    RunOpts run;
};

int run_selfcheck(const SelfcheckOpts& o) {
    using census::Method;
    const config::DfsOptions dfs{o.run.workers, 0};
    const frieze::EnumerateOptions enu{o.run.workers, 0};
    std::vector<std::pair<std::string, std::function<bool()>>> checks;

    checks.emplace_back("closed form equals recursion", [&] {
        for (const std::string name : {"c3", "c3+-", "c3--", "c3*", "c3**",
                                       "c3+-*", "c3--*", "c3--**"})
            for (long n = 3; n <= 12; ++n)
                for (const long q : {2L, 3L, 5L}) {
                    try {
                        if (census::family_closed_form(name, n, q) !=
                            census::family_recursion(name, n, q))
                            return false;
                    } catch (const invalid_parameter&) {
                        continue;  // residue-gated cell
                    }
                }
        for (const std::string name :
             {"c4", "c4++-", "c4+--", "c4-+-", "c4---", "c4+(-)[+]", "c4+(-)[-]",
              "c4-(-)[+]", "c4(--)[+]"})
            for (long n = 4; n <= 12; ++n)
                for (const long q : {2L, 3L})
                    if (census::family_closed_form(name, n, q) !=
                        census::family_recursion(name, n, q))
                        return false;
        return true;
    });

    checks.emplace_back("closed form equals configuration search", [&] {
        const struct {
            const char* name;
            long n, q;
        } cells[] = {{"c3", 4, 2},  {"c3", 5, 2},  {"c3", 4, 3}, {"c3", 5, 3},
                     {"c3+-", 5, 2}, {"c3--", 5, 2}, {"c3*", 6, 2}, {"c4", 5, 2}};
        for (const auto& c : cells)
            if (census::family_count(c.name, c.n, c.q, Method::closed_form) !=
                census::family_count(c.name, c.n, c.q, Method::search, dfs))
                return false;
        return true;
    });

    checks.emplace_back("search equals enumeration via the orbit formula", [&] {
        const struct {
            int k;
            long n, q;
        } cells[] = {{3, 5, 2}, {3, 6, 2}, {2, 6, 3}, {4, 6, 2}};
        for (const auto& c : cells)
            if (census::frieze_count(c.k, c.n, c.q, Method::search, dfs) !=
                census::frieze_count(c.k, c.n, c.q, Method::enumerate, dfs))
                return false;
        return true;
    });

    checks.emplace_back("closed form equals enumeration", [&] {
        const struct {
            int k;
            long n, q;
        } cells[] = {{3, 5, 3}, {3, 6, 2}, {2, 5, 7}, {4, 7, 2}};
        for (const auto& c : cells)
            if (census::frieze_count(c.k, c.n, c.q, Method::automatic) !=
                census::frieze_count(c.k, c.n, c.q, Method::enumerate, dfs))
                return false;
        return true;
    });

    checks.emplace_back("reference grids match", [&] {
        return census::reproduce_table(1).matches() &&
               census::reproduce_table(2).matches();
    });

    checks.emplace_back("pattern round trip", [&] {
        bool ok = true;
        for (const auto& [k, n, q] :
             {std::tuple<int, long, long>{3, 5, 3}, {2, 5, 7}}) {
            frieze::enumerate_quiddities(
                gf::make_field(q), k, n, [&](const frieze::Quiddity& qd) {
                    const frieze::Frieze fr = frieze::build_frieze(qd);
                    ok = ok && frieze::validate_frieze(fr).valid &&
                         frieze::extract_quiddity(fr) == qd;
                },
                enu);
        }
        return ok;
    });

    checks.emplace_back("lift exists exactly on star configurations", [&] {
        const gf::Field& f = gf::make_field(2);
        bool ok = true;
        std::size_t lifts = 0;
        config::for_each_tuple(
            f, config::family_spec("base", 6, 3),
            [&](const config::PointTable& t, const std::vector<std::uint32_t>& ids) {
                config::Config c;
                for (const auto id : ids) c.push_back(t.vec(id));
                const auto lift = config::constant_det_lift(c, f);
                ok = ok && lift.has_value() == config::star_condition(c, f);
                if (lift) ++lifts;
            },
            dfs);
        return ok && lifts > 0;
    });

    checks.emplace_back("identical rows across orders", [&] {
        for (const long q : {2L, 3L, 4L, 5L, 7L}) {
            const cpp_int want = pow_int(q, 6) + pow_int(q, 4) + pow_int(q, 3) +
                                 pow_int(q, 2) + 1;
            if (census::frieze_count(3, 7, q) != want) return false;
            if (census::frieze_count(4, 7, q) != want) return false;
        }
        return true;
    });

    checks.emplace_back("conjectured product matches proven counts", [&] {
        const struct {
            int k;
            long n;
        } cells[] = {{2, 5}, {2, 7}, {3, 5}, {3, 7}, {3, 8}, {4, 7}, {4, 9}};
        for (const auto& c : cells)
            for (const long q : {2L, 3L, 5L})
                if (census::conjectured_count(c.k, c.n, q) !=
                    census::frieze_count(c.k, c.n, q))
                    return false;
        return true;
    });

    std::size_t passed = 0;
    for (const auto& [name, fn] : checks) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const error& e) {
            std::cerr << "selfcheck '" << name << "' threw: " << e.what() << '\n';
        }
        std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
        if (ok) ++passed;
    }
    std::cout << "selfcheck: " << passed << '/' << checks.size() << " passed\n";
    return passed == checks.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, validation, enumeration and counting of "
                 "tame periodic frieze patterns over finite fields"};
    app.require_subcommand(1);
    const auto fmt3 = CLI::IsMember({"text", "json", "csv"});
    const auto fmt2 = CLI::IsMember({"text", "json"});

    CountOpts count_o;
    try {
        count_o.run.node_cap = env_node_cap();
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    auto* count = app.add_subcommand(
        "count", "count patterns (or a named configuration family)");
    count->add_option("--k", count_o.k, "pattern order");
    count->add_option("--n", count_o.n, "period");
    count->add_option("--w", count_o.w, "width (period = w + k + 1)");
    count->add_option("--q", count_o.q, "field size")->required();
    count->add_option("--family", count_o.family,
                      "configuration family name (see enumerate-configs)");
    count->add_option("--method", count_o.method,
                      "auto | closed-form | recursion | search | dfs | enumerate "
                      "(auto uses closed forms only; order 4 even periods and "
                      "orders above 4 need an explicit search or enumerate)");
    count->add_flag("--conjectured", count_o.conjectured,
                    "evaluate the conjectured product (coprime order and period)");
    count->add_option("--format", count_o.format, "text | json | csv")
        ->check(fmt3);
    add_run_opts(count, count_o.run);

    EnumQuidOpts eq_o;
    eq_o.run.node_cap = count_o.run.node_cap;
    auto* enq = app.add_subcommand("enumerate-quiddities",
                                   "enumerate the coefficient arrays of all "
                                   "patterns with given parameters");
    enq->add_option("--k", eq_o.k, "pattern order")->required();
    enq->add_option("--n", eq_o.n, "period");
    enq->add_option("--w", eq_o.w, "width (period = w + k + 1)");
    enq->add_option("--q", eq_o.q, "field size")->required();
    enq->add_flag("--print", eq_o.print, "stream the arrays, not just the count");
    enq->add_option("--limit", eq_o.limit, "print at most this many (0 = all)");
    enq->add_option("--format", eq_o.format, "text | json | csv")->check(fmt3);
    add_run_opts(enq, eq_o.run);

    EnumConfOpts ec_o;
    ec_o.run.node_cap = count_o.run.node_cap;
    auto* enc = app.add_subcommand("enumerate-configs",
                                   "enumerate point configurations of a named "
                                   "family or an explicit spec file");
    enc->add_option("--family", ec_o.family, "family name: base, base*, c3, "
                    "c3+-, c3--, c3*, c3**, c3+-*, c3--*, c3--**, c4, c4++-, "
                    "c4+--, c4-+-, c4---, c4*, c4+(-)[+], c4+(-)[-], "
                    "c4-(-)[+], c4(--)[+]");
    enc->add_option("--spec", ec_o.spec_path, "spec file path (- for stdin)");
    enc->add_option("--k", ec_o.k, "order (only for base and base*)");
    enc->add_option("--n", ec_o.n, "number of points");
    enc->add_option("--q", ec_o.q, "field size")->required();
    enc->add_flag("--print", ec_o.print, "stream the tuples, not just the count");
    enc->add_option("--limit", ec_o.limit, "print at most this many (0 = all)");
    enc->add_option("--format", ec_o.format, "text | json | csv")->check(fmt3);
    add_run_opts(enc, ec_o.run);

    FileOpts build_o;
    auto* build = app.add_subcommand(
        "build-frieze", "grow the full pattern from a coefficient file");
    build->add_option("--input", build_o.input, "quiddity file (- for stdin)")
        ->required();
    build->add_option("--output", build_o.output, "pattern file (default stdout)");

    FileOpts val_o;
    auto* val = app.add_subcommand(
        "validate-frieze",
        "check borders and all diamond determinants of a pattern file");
    val->add_option("--input", val_o.input, "pattern file (- for stdin)")
        ->required();
    val->add_option("--format", val_o.format, "text | json")->check(fmt2);

    FileOpts lift_o;
    auto* lift = app.add_subcommand(
        "lift", "find a constant-determinant lift of a point configuration "
                "and read off its coefficients");
    lift->add_option("--input", lift_o.input, "configuration file (- for stdin)")
        ->required();
    lift->add_option("--format", lift_o.format, "text | json")->check(fmt2);

    FileOpts dec_o;
    auto* dec = app.add_subcommand(
        "decompose", "maximal decomposition of a coefficient array, with the "
                     "rescaling-class and stabilizer sizes it determines");
    dec->add_option("--input", dec_o.input, "quiddity file (- for stdin)")
        ->required();
    dec->add_option("--format", dec_o.format, "text | json")->check(fmt2);

    TablesOpts tab_o;
    auto* tab = app.add_subcommand(
        "tables", "recompute a reference count grid and diff it per cell");
    tab->add_option("--which", tab_o.which, "fig1 (order 3) | fig2 (order 4)")
        ->required();
    tab->add_option("--format", tab_o.format, "text | json | csv")->check(fmt3);

    SelfcheckOpts self_o;
    auto* self = app.add_subcommand(
        "selfcheck", "cross-validate every counting path at desk scale");
    add_run_opts(self, self_o.run);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (count->parsed())
            rc = run_count(count_o);
        else if (enq->parsed())
            rc = run_enum_quiddities(eq_o);
        else if (enc->parsed())
            rc = run_enum_configs(ec_o);
        else if (build->parsed())
            rc = run_build_frieze(build_o);
        else if (val->parsed())
            rc = run_validate_frieze(val_o);
        else if (lift->parsed())
            rc = run_lift(lift_o);
        else if (dec->parsed())
            rc = run_decompose(dec_o);
        else if (tab->parsed())
            rc = run_tables(tab_o);
        else if (self->parsed())
            rc = run_selfcheck(self_o);
    } catch (const resource_limit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const invalid_parameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const unsupported_parameters& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const precondition_violation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const invariant_violation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    std::cerr << "elapsed_ms " << ms << '\n';
    return rc;
}
