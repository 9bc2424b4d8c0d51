#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "friezelab/census.hpp"
#include "friezelab/config.hpp"
#include "friezelab/errors.hpp"
#include "friezelab/frieze.hpp"
#include "friezelab/gf.hpp"
#include "friezelab/io.hpp"

using namespace friezelab;

namespace {

std::filesystem::path golden_dir() {
    return std::filesystem::path(__FILE__).parent_path() / "golden";
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p);
    REQUIRE(is.good());
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

template <typename T, typename WriteFn>
std::string to_text(const T& value, WriteFn write) {
    std::ostringstream os;
    write(os, value);
    return os.str();
}

}  // namespace

TEST_CASE("golden quiddity file round trips byte for byte") {
    const std::string text = slurp(golden_dir() / "quiddity-3-5-2.txt");
    std::istringstream is(text);
    const frieze::Quiddity q = io::read_quiddity(is);
    CHECK(q.k() == 3);
    CHECK(q.n() == 5);
    CHECK(q.field().q() == 2);
    CHECK(frieze::check_quiddity(q));
    CHECK(to_text(q, [](std::ostream& os, const frieze::Quiddity& v) {
              io::write_quiddity(os, v);
          }) == text);
}

TEST_CASE("golden pattern file validates and matches its quiddity") {
    const std::string text = slurp(golden_dir() / "frieze-3-5-2.txt");
    std::istringstream is(text);
    const frieze::Frieze fr = io::read_frieze(is);
    CHECK(fr.w() == 1);
    const frieze::FriezeReport rep = frieze::validate_frieze(fr);
    CHECK(rep.valid);
    CHECK(rep.failures.empty());

    std::istringstream qis(slurp(golden_dir() / "quiddity-3-5-2.txt"));
    const frieze::Quiddity q = io::read_quiddity(qis);
    CHECK(frieze::extract_quiddity(fr) == q);
    CHECK(frieze::build_frieze(q) == fr);
    CHECK(to_text(fr, [](std::ostream& os, const frieze::Frieze& v) {
              io::write_frieze(os, v);
          }) == text);
}

TEST_CASE("golden configuration file carries the pattern's vectors") {
    const std::string text = slurp(golden_dir() / "config-3-5-2.txt");
    std::istringstream is(text);
    const io::LoadedConfig lc = io::read_config(is);
    REQUIRE(lc.field != nullptr);
    CHECK(lc.field->q() == 2);
    REQUIRE(lc.points.size() == 5);

    std::istringstream fis(slurp(golden_dir() / "frieze-3-5-2.txt"));
    const frieze::Frieze fr = io::read_frieze(fis);
    CHECK(lc.points == frieze::frieze_vectors(fr));
    CHECK(config::windows_independent(lc.points, *lc.field));

    const auto lift = config::constant_det_lift(lc.points, *lc.field);
    REQUIRE(lift.has_value());
    std::istringstream qis(slurp(golden_dir() / "quiddity-3-5-2.txt"));
    CHECK(config::coefficients_of_lift(lift->vectors, *lc.field) ==
          io::read_quiddity(qis));

    std::ostringstream os;
    io::write_config(os, lc.points, *lc.field);
    CHECK(os.str() == text);
}

TEST_CASE("golden spec file reproduces the named family") {
    const std::string text = slurp(golden_dir() / "spec-c3-5.txt");
    std::istringstream is(text);
    const config::DfsSpec spec = io::read_spec(is);
    const config::DfsSpec named = config::family_spec("c3", 5);
    CHECK(spec.k == named.k);
    CHECK(spec.n == named.n);
    REQUIRE(spec.tuples.size() == named.tuples.size());
    for (std::size_t t = 0; t < spec.tuples.size(); ++t) {
        CHECK(spec.tuples[t].positions == named.tuples[t].positions);
        CHECK(spec.tuples[t].independent == named.tuples[t].independent);
    }
    REQUIRE(spec.distinct.size() == named.distinct.size());
    for (std::size_t d = 0; d < spec.distinct.size(); ++d) {
        CHECK(spec.distinct[d].i == named.distinct[d].i);
        CHECK(spec.distinct[d].j == named.distinct[d].j);
    }
    CHECK(spec.leaf == named.leaf);

    const gf::Field& f2 = gf::make_field(2);
    CHECK(config::count_tuples(f2, spec) == 840);

    std::ostringstream os;
    io::write_spec(os, spec);
    CHECK(os.str() == text);
}

TEST_CASE("spec text survives every leaf filter and sign") {
    config::DfsSpec spec;
    spec.k = 3;
    spec.n = 7;
    spec.tuples.push_back({{1, 2, 3}, true});
    spec.tuples.push_back({{5, 6, 7}, false});
    spec.tuples.push_back({{6, 7, 1, 2}, true});
    spec.distinct.push_back({7, 1});
    const config::LeafFilter filters[] = {
        config::LeafFilter::none,
        config::LeafFilter::star,
        config::LeafFilter::star_one,
        config::LeafFilter::wrap_product_identity,
        config::LeafFilter::w2_collinear,
        config::LeafFilter::w1_collinear,
        config::LeafFilter::w1_w2_collinear,
    };
    for (const auto lf : filters) {
        spec.leaf = lf;
        std::ostringstream os;
        io::write_spec(os, spec);
        std::istringstream is(os.str());
        const config::DfsSpec back = io::read_spec(is);
        CHECK(back.k == spec.k);
        CHECK(back.n == spec.n);
        CHECK(back.leaf == spec.leaf);
        REQUIRE(back.tuples.size() == 3);
        CHECK(back.tuples[1].independent == false);
        CHECK(back.tuples[2].positions == std::vector<long>{6, 7, 1, 2});
    }
}

TEST_CASE("spec reader skips comments and rejects malformed directives") {
    {
        std::istringstream is("# header comment\nk 3\n\nn 5\nleaf star\n");
        const config::DfsSpec spec = io::read_spec(is);
        CHECK(spec.k == 3);
        CHECK(spec.n == 5);
        CHECK(spec.leaf == config::LeafFilter::star);
    }
    const char* bad[] = {
        "n 5\nleaf none\n",             // missing k
        "k 3\n",                        // missing n
        "k 3\nn 5\ntuple * 1 2\n",      // bad sign
        "k 3\nn 5\ntuple +\n",          // no positions
        "k 3\nn 5\ndistinct 1\n",       // missing position
        "k 3\nn 5\nleaf sparkle\n",     // unknown filter
        "k 3\nn 5\nwindow 1 2 3\n",     // unknown directive
        "k 3 7\nn 5\n",                 // trailing data
    };
    for (const char* text : bad) {
        INFO("text: " << text);
        std::istringstream is(text);
        CHECK_THROWS_AS((void)io::read_spec(is), invalid_parameter);
    }
}

TEST_CASE("pattern and quiddity text survives a round trip on enumerated data") {
    const gf::Field& f7 = gf::make_field(7);
    std::size_t seen = 0;
    frieze::enumerate_quiddities(f7, 2, 5, [&](const frieze::Quiddity& q) {
        ++seen;
        std::ostringstream qs;
        io::write_quiddity(qs, q);
        std::istringstream qis(qs.str());
        CHECK(io::read_quiddity(qis) == q);

        const frieze::Frieze fr = frieze::build_frieze(q);
        std::ostringstream fs;
        io::write_frieze(fs, fr);
        std::istringstream fis(fs.str());
        CHECK(io::read_frieze(fis) == fr);
    });
    CHECK(seen == 50);
}

TEST_CASE("readers reject malformed files") {
    const char* bad_quiddity[] = {
        "",                            // empty
        "3 5\n",                       // short header
        "1 5 2\n",                     // order too small
        "3 5 6\n1 1 1 0 0\n0 0 1 1 1\n",  // six is not a prime power
        "3 5 2\n1 1 1 0\n",            // truncated entries
        "3 5 2\n1 1 1 0 0\n0 0 1 1 2\n",  // entry out of range
        "3 5 2\n1 1 1 0 0\n0 0 1 1 1\n9\n",  // trailing data
        "3 100001 2\n",                // absurd period
    };
    for (const char* text : bad_quiddity) {
        INFO("text: " << text);
        std::istringstream is(text);
        CHECK_THROWS_AS((void)io::read_quiddity(is), error);
    }
    {
        std::istringstream is("2 5 3\n0 0\n1 0\n0 1\n1 1\n2 1\n");
        CHECK_THROWS_AS((void)io::read_config(is), invalid_parameter);
    }
}

TEST_CASE("tuple lines print canonical coordinates") {
    const gf::Field& f2 = gf::make_field(2);
    const config::PointTable t(f2, 2);
    REQUIRE(t.count() == 3);
    CHECK(io::tuple_line(t, {0, 1, 2}) == "0,1 1,0 1,1");

    std::vector<std::string> lines;
    config::for_each_tuple(f2, config::family_spec("base", 3, 2),
                           [&](const config::PointTable& pt,
                               const std::vector<std::uint32_t>& ids) {
                               lines.push_back(io::tuple_line(pt, ids));
                           });
    CHECK(lines.size() == 6);
    CHECK(lines.front() == "0,1 1,0 1,1");
    for (const auto& line : lines) CHECK(line.size() == 11);
}

TEST_CASE("count reports round trip through json") {
    io::CountReport r;
    r.op = "family-count";
    r.family = "c4(--)[+]";
    r.k = 4;
    r.n = 6;
    r.w = -1;
    r.q = 7;
    r.method = census::Method::recursion;
    r.value = linalg::cpp_int("14176726502");
    r.node_cap = 12345;
    const std::string text = io::report_json(r);
    CHECK(text.back() == '\n');
    const io::CountReport back = io::report_from_json(text);
    CHECK(back.op == r.op);
    CHECK(back.family == r.family);
    CHECK(back.k == r.k);
    CHECK(back.n == r.n);
    CHECK(back.w == r.w);
    CHECK(back.q == r.q);
    CHECK(back.method == r.method);
    CHECK(back.value == r.value);
    CHECK(back.node_cap == r.node_cap);

    CHECK_THROWS_AS((void)io::report_from_json("not json at all"),
                    invalid_parameter);
    CHECK_THROWS_AS((void)io::report_from_json("{\"op\":\"x\"}"),
                    invalid_parameter);
}

TEST_CASE("golden report file parses and matches the writer") {
    const std::string text = slurp(golden_dir() / "report-3-5-2.json");
    const io::CountReport r = io::report_from_json(text);
    CHECK(r.op == "frieze-count");
    CHECK(r.k == 3);
    CHECK(r.n == 5);
    CHECK(r.w == 1);
    CHECK(r.q == 2);
    CHECK(r.method == census::Method::closed_form);
    CHECK(r.value == 5);
    CHECK(io::report_json(r) == text);

    CHECK(io::report_text(r) == "5\n");
    CHECK(io::report_csv(r) ==
          "op,family,k,n,w,q,method,value,node_cap\n"
          "frieze-count,,3,5,1,2,closed-form,5,0\n");
}

TEST_CASE("reference grids render in all three formats") {
    census::Table t = census::reproduce_table(1);
    const std::string text = io::table_text(t);
    CHECK(text.find("25/25 cells match") != std::string::npos);
    CHECK(text.find("291371347") != std::string::npos);
    CHECK(text.find("!=") == std::string::npos);

    const std::string csv = io::table_csv(t);
    std::size_t rows = 0, yes = 0;
    std::istringstream cs(csv);
    std::string line;
    while (std::getline(cs, line)) {
        ++rows;
        if (line.size() > 4 && line.substr(line.size() - 4) == ",yes") ++yes;
    }
    CHECK(rows == 26);
    CHECK(yes == 25);
    CHECK(csv.find("3,1,2,5,5,yes") == csv.find('\n') + 1);

    const auto j = nlohmann::json::parse(io::table_json(t));
    CHECK(j.at("matches").get<bool>());
    CHECK(j.at("values")[0][0].get<std::string>() == "5");
    CHECK(j.at("expected")[4][4].get<std::string>() == "291371347");

    t.expected[2][3] += 1;
    CHECK_FALSE(t.matches());
    const std::string marked = io::table_text(t);
    CHECK(marked.find("24/25 cells match") != std::string::npos);
    CHECK(marked.find("16401!=16402") != std::string::npos);
    CHECK(io::table_csv(t).find(",no") != std::string::npos);
    CHECK_FALSE(nlohmann::json::parse(io::table_json(t)).at("matches").get<bool>());
}

TEST_CASE("validation reports render valid and broken patterns") {
    std::istringstream fis(slurp(golden_dir() / "frieze-3-5-2.txt"));
    frieze::Frieze fr = io::read_frieze(fis);
    const frieze::FriezeReport good = frieze::validate_frieze(fr);
    const std::string text = io::frieze_report_text(good);
    CHECK(text.rfind("valid\n", 0) == 0);
    CHECK(text.find("failure:") == std::string::npos);
    auto j = nlohmann::json::parse(io::frieze_report_json(good));
    CHECK(j.at("valid").get<bool>());
    CHECK(j.at("failures").empty());
    CHECK(j.at("unit_diamonds").get<std::size_t>() == good.unit_diamonds);

    fr.set(1, 3, fr.field().zero());
    const frieze::FriezeReport broken = frieze::validate_frieze(fr);
    CHECK_FALSE(broken.valid);
    const std::string btext = io::frieze_report_text(broken);
    CHECK(btext.rfind("invalid\n", 0) == 0);
    CHECK(btext.find("failure:") != std::string::npos);
    CHECK_FALSE(
        nlohmann::json::parse(io::frieze_report_json(broken)).at("valid").get<bool>());
}
