#include "friezelab/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "friezelab/errors.hpp"

namespace friezelab::io {

namespace {

using nlohmann::json;

struct Header {
    const gf::Field* field = nullptr;
    int k = 0;
    long n = 0;
};

long read_long(std::istream& is, const std::string& what) {
    long v = 0;
    if (!(is >> v))
        throw invalid_parameter("malformed " + what);
    return v;
}

Header read_header(std::istream& is, const std::string& what) {
    Header h;
    const long k = read_long(is, what + " header (expected \"k n q\")");
    h.n = read_long(is, what + " header (expected \"k n q\")");
    const long q = read_long(is, what + " header (expected \"k n q\")");
    if (k < 2 || k > 64)
        throw invalid_parameter(what + " header order " + std::to_string(k) +
                                " out of range");
    if (h.n < 1 || h.n > 100000)
        throw invalid_parameter(what + " header period " + std::to_string(h.n) +
                                " out of range");
    h.k = static_cast<int>(k);
    h.field = &gf::make_field(q);
    return h;
}

void require_end(std::istream& is, const std::string& what) {
    std::string extra;
    if (is >> extra)
        throw invalid_parameter(what + " file has trailing data starting at \"" +
                                extra + "\"");
}

std::string leaf_name(config::LeafFilter lf) {
    switch (lf) {
        case config::LeafFilter::none: return "none";
        case config::LeafFilter::star: return "star";
        case config::LeafFilter::star_one: return "star-one";
        case config::LeafFilter::wrap_product_identity: return "wrap-product-identity";
        case config::LeafFilter::w2_collinear: return "w2-collinear";
        case config::LeafFilter::w1_collinear: return "w1-collinear";
        case config::LeafFilter::w1_w2_collinear: return "w1-w2-collinear";
    }
    throw invariant_violation("unhandled leaf filter");
}

config::LeafFilter leaf_from_name(const std::string& name) {
    if (name == "none") return config::LeafFilter::none;
    if (name == "star") return config::LeafFilter::star;
    if (name == "star-one") return config::LeafFilter::star_one;
    if (name == "wrap-product-identity") return config::LeafFilter::wrap_product_identity;
    if (name == "w2-collinear") return config::LeafFilter::w2_collinear;
    if (name == "w1-collinear") return config::LeafFilter::w1_collinear;
    if (name == "w1-w2-collinear") return config::LeafFilter::w1_w2_collinear;
    throw invalid_parameter("unknown leaf filter \"" + name + "\"");
}

linalg::cpp_int big_from_string(const std::string& s) {
    try {
        return linalg::cpp_int(s);
    } catch (const std::runtime_error&) {
        throw invalid_parameter("\"" + s + "\" is not a decimal integer");
    }
}

json table_to_json(const census::Table& t) {
    json j;
    j["k"] = t.k;
    j["widths"] = t.widths;
    j["qs"] = t.qs;
    json values = json::array(), expected = json::array();
    for (std::size_t wi = 0; wi < t.values.size(); ++wi) {
        json vrow = json::array(), erow = json::array();
        for (std::size_t qi = 0; qi < t.values[wi].size(); ++qi) {
            vrow.push_back(t.values[wi][qi].str());
            erow.push_back(t.expected[wi][qi].str());
        }
        values.push_back(std::move(vrow));
        expected.push_back(std::move(erow));
    }
    j["values"] = std::move(values);
    j["expected"] = std::move(expected);
    j["matches"] = t.matches();
    return j;
}

}  // namespace

void write_quiddity(std::ostream& os, const frieze::Quiddity& q) {
    const gf::Field& f = q.field();
    os << q.k() << ' ' << q.n() << ' ' << f.q() << '\n';
    for (int s = 1; s < q.k(); ++s) {
        for (long i = 1; i <= q.n(); ++i)
            os << (i > 1 ? " " : "") << f.io_value(q.at(s, i));
        os << '\n';
    }
}

frieze::Quiddity read_quiddity(std::istream& is) {
    const Header h = read_header(is, "quiddity");
    frieze::Quiddity q(*h.field, h.k, h.n);
    for (int s = 1; s < h.k; ++s)
        for (long i = 1; i <= h.n; ++i)
            q.set(s, i, h.field->from_io(read_long(is, "quiddity entry")));
    require_end(is, "quiddity");
    return q;
}

void write_frieze(std::ostream& os, const frieze::Frieze& fr) {
    const gf::Field& f = fr.field();
    os << fr.k() << ' ' << fr.n() << ' ' << f.q() << '\n';
    for (long j = fr.j_min(); j <= fr.j_max(); ++j) {
        for (long i = 1; i <= fr.n(); ++i)
            os << (i > 1 ? " " : "") << f.io_value(fr.at(j, i));
        os << '\n';
    }
}

frieze::Frieze read_frieze(std::istream& is) {
    const Header h = read_header(is, "pattern");
    frieze::Frieze fr(*h.field, h.k, h.n);
    for (long j = fr.j_min(); j <= fr.j_max(); ++j)
        for (long i = 1; i <= h.n; ++i)
            fr.set(j, i, h.field->from_io(read_long(is, "pattern entry")));
    require_end(is, "pattern");
    return fr;
}

void write_config(std::ostream& os, const config::Config& c, const gf::Field& f) {
    if (c.empty())
        throw invalid_parameter("cannot write an empty configuration");
    const std::size_t k = c.front().size();
    for (const auto& v : c)
        if (v.size() != k)
            throw invalid_parameter("configuration vectors differ in length");
    os << k << ' ' << c.size() << ' ' << f.q() << '\n';
    for (const auto& v : c) {
        for (std::size_t j = 0; j < k; ++j)
            os << (j > 0 ? " " : "") << f.io_value(v[j]);
        os << '\n';
    }
}

LoadedConfig read_config(std::istream& is) {
    const Header h = read_header(is, "configuration");
    LoadedConfig out;
    out.field = h.field;
    out.points.assign(static_cast<std::size_t>(h.n),
                      linalg::Vec(static_cast<std::size_t>(h.k)));
    for (auto& v : out.points) {
        bool nonzero = false;
        for (int j = 0; j < h.k; ++j) {
            v[static_cast<std::size_t>(j)] =
                h.field->from_io(read_long(is, "configuration entry"));
            nonzero = nonzero || !v[static_cast<std::size_t>(j)].is_zero();
        }
        if (!nonzero)
            throw invalid_parameter("a configuration line is the zero vector");
    }
    require_end(is, "configuration");
    return out;
}

std::string tuple_line(const config::PointTable& t,
                       const std::vector<std::uint32_t>& ids) {
    const gf::Field& f = t.field();
    std::ostringstream os;
    for (std::size_t m = 0; m < ids.size(); ++m) {
        const linalg::Vec v = t.vec(ids[m]);
        os << (m > 0 ? " " : "");
        for (std::size_t j = 0; j < v.size(); ++j)
            os << (j > 0 ? "," : "") << f.io_value(v[j]);
    }
    return os.str();
}

void write_spec(std::ostream& os, const config::DfsSpec& spec) {
    os << "k " << spec.k << '\n';
    os << "n " << spec.n << '\n';
    for (const auto& tc : spec.tuples) {
        os << "tuple " << (tc.independent ? '+' : '-');
        for (const long p : tc.positions) os << ' ' << p;
        os << '\n';
    }
    for (const auto& d : spec.distinct)
        os << "distinct " << d.i << ' ' << d.j << '\n';
    os << "leaf " << leaf_name(spec.leaf) << '\n';
}

config::DfsSpec read_spec(std::istream& is) {
    config::DfsSpec spec;
    bool saw_k = false, saw_n = false;
    std::string line;
    long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word.front() == '#') continue;
        const std::string where = " on line " + std::to_string(lineno);
        if (word == "k") {
            long v = 0;
            if (!(ls >> v)) throw invalid_parameter("malformed k directive" + where);
            spec.k = static_cast<int>(v);
            saw_k = true;
        } else if (word == "n") {
            if (!(ls >> spec.n))
                throw invalid_parameter("malformed n directive" + where);
            saw_n = true;
        } else if (word == "tuple") {
            std::string sign;
            if (!(ls >> sign) || (sign != "+" && sign != "-"))
                throw invalid_parameter("tuple directive needs + or -" + where);
            config::TupleConstraint tc;
            tc.independent = sign == "+";
            long p = 0;
            while (ls >> p) tc.positions.push_back(p);
            if (tc.positions.empty())
                throw invalid_parameter("tuple directive lists no positions" + where);
            spec.tuples.push_back(std::move(tc));
            continue;
        } else if (word == "distinct") {
            config::DistinctConstraint d;
            if (!(ls >> d.i >> d.j))
                throw invalid_parameter("malformed distinct directive" + where);
            spec.distinct.push_back(d);
        } else if (word == "leaf") {
            std::string name;
            if (!(ls >> name))
                throw invalid_parameter("malformed leaf directive" + where);
            spec.leaf = leaf_from_name(name);
        } else {
            throw invalid_parameter("unknown directive \"" + word + "\"" + where);
        }
        std::string extra;
        if (ls >> extra)
            throw invalid_parameter("trailing data \"" + extra + "\"" + where);
    }
    if (!saw_k || !saw_n)
        throw invalid_parameter("spec must set both k and n");
    return spec;
}

std::string report_json(const CountReport& r) {
    json j;
    j["op"] = r.op;
    j["family"] = r.family;
    j["k"] = r.k;
    j["n"] = r.n;
    j["w"] = r.w;
    j["q"] = r.q;
    j["method"] = census::method_name(r.method);
    j["value"] = r.value.str();
    j["node_cap"] = r.node_cap;
    return j.dump() + "\n";
}

CountReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw invalid_parameter(std::string("not a count report: ") + e.what());
    }
    CountReport r;
    try {
        r.op = j.at("op").get<std::string>();
        r.family = j.at("family").get<std::string>();
        r.k = j.at("k").get<int>();
        r.n = j.at("n").get<long>();
        r.w = j.at("w").get<long>();
        r.q = j.at("q").get<long>();
        r.method = census::parse_method(j.at("method").get<std::string>());
        r.value = big_from_string(j.at("value").get<std::string>());
        r.node_cap = j.at("node_cap").get<unsigned long long>();
    } catch (const json::exception& e) {
        throw invalid_parameter(std::string("not a count report: ") + e.what());
    }
    return r;
}

std::string report_csv(const CountReport& r) {
    std::ostringstream os;
    os << "op,family,k,n,w,q,method,value,node_cap\n";
    os << r.op << ',' << r.family << ',' << r.k << ',' << r.n << ',';
    if (r.w >= 0) os << r.w;
    os << ',' << r.q << ',' << census::method_name(r.method) << ','
       << r.value.str() << ',' << r.node_cap << '\n';
    return os.str();
}

std::string report_text(const CountReport& r) {
    return r.value.str() + "\n";
}

std::string table_text(const census::Table& t) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head;
    head.push_back("w\\q");
    for (const long q : t.qs) head.push_back(std::to_string(q));
    cells.push_back(std::move(head));
    std::size_t matched = 0, total = 0;
    for (std::size_t wi = 0; wi < t.widths.size(); ++wi) {
        std::vector<std::string> row;
        row.push_back(std::to_string(t.widths[wi]));
        for (std::size_t qi = 0; qi < t.qs.size(); ++qi) {
            ++total;
            if (t.values[wi][qi] == t.expected[wi][qi]) {
                ++matched;
                row.push_back(t.values[wi][qi].str());
            } else {
                row.push_back(t.values[wi][qi].str() + "!=" +
                              t.expected[wi][qi].str());
            }
        }
        cells.push_back(std::move(row));
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << "  ";
            os << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        os << '\n';
    }
    os << matched << '/' << total << " cells match\n";
    return os.str();
}

std::string table_csv(const census::Table& t) {
    std::ostringstream os;
    os << "k,w,q,value,expected,match\n";
    for (std::size_t wi = 0; wi < t.widths.size(); ++wi)
        for (std::size_t qi = 0; qi < t.qs.size(); ++qi)
            os << t.k << ',' << t.widths[wi] << ',' << t.qs[qi] << ','
               << t.values[wi][qi].str() << ',' << t.expected[wi][qi].str()
               << ','
               << (t.values[wi][qi] == t.expected[wi][qi] ? "yes" : "no")
               << '\n';
    return os.str();
}

std::string table_json(const census::Table& t) {
    return table_to_json(t).dump() + "\n";
}

std::string frieze_report_text(const frieze::FriezeReport& r) {
    std::ostringstream os;
    os << (r.valid ? "valid" : "invalid") << '\n';
    os << "unit diamonds checked: " << r.unit_diamonds << '\n';
    os << "null diamonds checked: " << r.null_diamonds << '\n';
    for (const auto& msg : r.failures) os << "failure: " << msg << '\n';
    return os.str();
}

std::string frieze_report_json(const frieze::FriezeReport& r) {
    json j;
    j["valid"] = r.valid;
    j["unit_diamonds"] = r.unit_diamonds;
    j["null_diamonds"] = r.null_diamonds;
    j["failures"] = r.failures;
    return j.dump() + "\n";
}

}  // namespace friezelab::io
