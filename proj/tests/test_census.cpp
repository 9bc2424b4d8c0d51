#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "friezelab/census.hpp"
#include "friezelab/errors.hpp"

using namespace friezelab;
using census::cpp_int;
using census::Method;

namespace {

const std::vector<long> kQs = {2, 3, 4, 5, 7};

// order 3, widths 1..5, and order 4, widths 2 and 4, over q = 2,3,4,5,7
const std::vector<std::vector<long long>> kGrid3 = {
    {5, 10, 17, 26, 50},
    {29, 145, 433, 1001, 3529},
    {93, 847, 4433, 16401, 120443},
    {381, 7651, 70993, 410151, 5902051},
    {1597, 72775, 1172305, 10443901, 291371347},
};
const std::vector<std::vector<long long>> kGrid4 = {
    {93, 847, 4433, 16401, 120443},
    {6477, 627382, 18245201, 256754526, 14176726502},
};

}  // namespace

TEST_CASE("closed forms agree with the recursion tables") {
    for (const std::string name :
         {"c3", "c3+-", "c3--", "c3*", "c3**", "c3+-*", "c3--*", "c3--**"}) {
        for (long n = 3; n <= 12; ++n) {
            if ((name == "c3*" || name == "c3**") && n % 3 != 0) continue;
            if ((name == "c3--*" || name == "c3--**") && n % 3 != 2) continue;
            for (const long q : {2L, 3L, 4L, 5L, 7L, 9L}) {
                INFO(name << " n=" << n << " q=" << q);
                CHECK(census::family_closed_form(name, n, q) ==
                      census::family_recursion(name, n, q));
            }
        }
    }
    for (const std::string name : {"c4", "c4++-", "c4+--", "c4-+-", "c4---",
                                   "c4+(-)[+]", "c4+(-)[-]", "c4-(-)[+]",
                                   "c4(--)[+]"}) {
        for (long n = 4; n <= 12; ++n)
            for (const long q : {2L, 3L, 5L}) {
                INFO(name << " n=" << n << " q=" << q);
                CHECK(census::family_closed_form(name, n, q) ==
                      census::family_recursion(name, n, q));
            }
    }
}

TEST_CASE("closed forms agree with the search at desk scale") {
    struct Cell {
        const char* name;
        long n;
        long q;
        long long value;
    };
    const Cell cells[] = {
        {"c3", 5, 2, 840},           {"c3", 6, 3, 548964},
        {"c3+-", 6, 2, 1848},        {"c3--", 6, 2, 840},
        {"c3*", 6, 3, 203580},       {"c3**", 6, 3, 318708},
        {"c3+-*", 5, 3, 14040},      {"c3--*", 5, 3, 7020},
        {"c3--**", 5, 3, 7020},      {"c4", 6, 2, 221760},
        {"c4++-", 6, 2, 100800},     {"c4---", 6, 2, 0},
        {"c4+(-)[+]", 6, 2, 60480},  {"c4(--)[+]", 6, 2, 60480},
    };
    for (const Cell& c : cells) {
        INFO(c.name << " n=" << c.n << " q=" << c.q);
        CHECK(census::family_closed_form(c.name, c.n, c.q) == c.value);
        CHECK(census::family_count(c.name, c.n, c.q, Method::search) == c.value);
        CHECK(census::family_count(c.name, c.n, c.q, Method::recursion) ==
              c.value);
    }
}

TEST_CASE("pattern counts reproduce the order 3 grid") {
    for (std::size_t wi = 0; wi < kGrid3.size(); ++wi)
        for (std::size_t qi = 0; qi < kQs.size(); ++qi) {
            const long n = static_cast<long>(wi) + 1 + 3 + 1;
            INFO("n=" << n << " q=" << kQs[qi]);
            CHECK(census::frieze_count(3, n, kQs[qi]) == kGrid3[wi][qi]);
            CHECK(census::frieze_count(3, n, kQs[qi], Method::recursion) ==
                  kGrid3[wi][qi]);
        }
}

TEST_CASE("pattern counts reproduce the order 4 grid") {
    for (std::size_t wi = 0; wi < kGrid4.size(); ++wi)
        for (std::size_t qi = 0; qi < kQs.size(); ++qi) {
            const long w = wi == 0 ? 2 : 4;
            const long n = w + 4 + 1;
            INFO("n=" << n << " q=" << kQs[qi]);
            CHECK(census::frieze_count(4, n, kQs[qi]) == kGrid4[wi][qi]);
            CHECK(census::frieze_count(4, n, kQs[qi], Method::recursion) ==
                  kGrid4[wi][qi]);
        }
}

TEST_CASE("reproduced tables match the grids") {
    const census::Table t1 = census::reproduce_table(1);
    REQUIRE(t1.k == 3);
    REQUIRE(t1.widths == std::vector<long>{1, 2, 3, 4, 5});
    REQUIRE(t1.qs == kQs);
    for (std::size_t wi = 0; wi < kGrid3.size(); ++wi)
        for (std::size_t qi = 0; qi < kQs.size(); ++qi)
            CHECK(t1.values[wi][qi] == kGrid3[wi][qi]);
    CHECK(t1.expected == t1.values);
    CHECK(t1.matches());
    const census::Table t2 = census::reproduce_table(2);
    REQUIRE(t2.k == 4);
    REQUIRE(t2.widths == std::vector<long>{2, 4});
    for (std::size_t wi = 0; wi < kGrid4.size(); ++wi)
        for (std::size_t qi = 0; qi < kQs.size(); ++qi)
            CHECK(t2.values[wi][qi] == kGrid4[wi][qi]);
    CHECK(t2.expected == t2.values);
    CHECK(t2.matches());
    CHECK_THROWS_AS((void)census::reproduce_table(3), invalid_parameter);
}

TEST_CASE("counting methods agree with direct enumeration") {
    struct Cell {
        int k;
        long n;
        long q;
        long long value;
    };
    const Cell cells[] = {
        {2, 5, 3, 10}, {2, 5, 7, 50}, {2, 7, 2, 21},
        {3, 5, 2, 5},  {3, 6, 3, 145}, {3, 7, 2, 93},
        {4, 7, 2, 93},
    };
    for (const Cell& c : cells) {
        INFO("k=" << c.k << " n=" << c.n << " q=" << c.q);
        CHECK(census::frieze_count(c.k, c.n, c.q) == c.value);
        CHECK(census::frieze_count(c.k, c.n, c.q, Method::enumerate) == c.value);
    }
}

TEST_CASE("the search route matches through the orbit count") {
    CHECK(census::frieze_count(3, 5, 2, Method::search) == 5);
    CHECK(census::frieze_count(3, 6, 2, Method::search) == 29);
    CHECK(census::frieze_count(3, 6, 3, Method::search) == 145);
    CHECK(census::frieze_count(4, 6, 2, Method::search) == 11);
    CHECK(census::frieze_count(4, 6, 2, Method::enumerate) == 11);
    // even period at order 2: no closed count, both exponential routes agree,
    // and the wrap windows carry real continuation signs once q > 2
    CHECK(census::frieze_count(2, 6, 2, Method::search) ==
          census::frieze_count(2, 6, 2, Method::enumerate));
    CHECK(census::frieze_count(2, 6, 3, Method::enumerate) == 35);
    CHECK(census::frieze_count(2, 6, 3, Method::search) == 35);
    CHECK(census::frieze_count(2, 6, 5, Method::enumerate) == 149);
    CHECK(census::frieze_count(2, 6, 5, Method::search) == 149);
    CHECK(census::frieze_count(2, 8, 3, Method::enumerate) == 260);
    CHECK(census::frieze_count(2, 8, 3, Method::search) == 260);
}

TEST_CASE("conjectured product matches the proven counts when coprime") {
    for (const long q : kQs) {
        for (const long n : {5L, 7L, 8L})
            CHECK(census::conjectured_count(3, n, q) ==
                  census::frieze_count(3, n, q));
        for (const long n : {7L, 9L})
            CHECK(census::conjectured_count(4, n, q) ==
                  census::frieze_count(4, n, q));
        CHECK(census::conjectured_count(2, 5, q) ==
              census::frieze_count(2, 5, q));
    }
    CHECK(census::conjectured_count(5, 7, 2) == 21);
    CHECK_THROWS_AS((void)census::conjectured_count(4, 6, 2), invalid_parameter);
    CHECK_THROWS_AS((void)census::conjectured_count(3, 6, 2), invalid_parameter);
}

TEST_CASE("large parameters stay consistent across closed and recursion") {
    for (const long q : {7L, 9L, 25L}) {
        CHECK(census::frieze_count(3, 30, q) ==
              census::frieze_count(3, 30, q, Method::recursion));
        CHECK(census::frieze_count(3, 31, q) ==
              census::frieze_count(3, 31, q, Method::recursion));
        CHECK(census::frieze_count(4, 31, q) ==
              census::frieze_count(4, 31, q, Method::recursion));
    }
}

TEST_CASE("method names parse and print") {
    CHECK(census::parse_method("auto") == Method::automatic);
    CHECK(census::parse_method("closed") == Method::closed_form);
    CHECK(census::parse_method("closed-form") == Method::closed_form);
    CHECK(census::parse_method("recursion") == Method::recursion);
    CHECK(census::parse_method("dfs") == Method::search);
    CHECK(census::parse_method("search") == Method::search);
    CHECK(census::parse_method("enumerate") == Method::enumerate);
    CHECK_THROWS_AS((void)census::parse_method("bogus"), invalid_parameter);
    for (const Method m : {Method::automatic, Method::closed_form,
                           Method::recursion, Method::search, Method::enumerate})
        CHECK(census::parse_method(census::method_name(m)) == m);
}

TEST_CASE("parameter gates") {
    CHECK_THROWS_AS((void)census::frieze_count(1, 5, 2), invalid_parameter);
    CHECK_THROWS_AS((void)census::frieze_count(3, 3, 2), invalid_parameter);
    CHECK_THROWS_AS((void)census::frieze_count(3, 4, 2), unsupported_parameters);
    CHECK_THROWS_AS((void)census::frieze_count(3, 5, 6), invalid_parameter);
    CHECK_THROWS_AS((void)census::frieze_count(4, 6, 2),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)census::frieze_count(4, 8, 2, Method::closed_form),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)census::frieze_count(2, 6, 2),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)census::frieze_count(2, 5, 2, Method::recursion),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)census::frieze_count(5, 7, 2),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)census::family_closed_form("c4*", 8, 2),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)census::family_closed_form("base", 5, 2),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)census::family_recursion("c4*", 8, 2),
                    unsupported_parameters);
    CHECK_THROWS_AS((void)census::family_closed_form("nope", 5, 2),
                    invalid_parameter);
    CHECK_THROWS_AS((void)census::family_closed_form("c3*", 5, 2),
                    invalid_parameter);
    CHECK_THROWS_AS((void)census::family_recursion("c3--*", 6, 2),
                    invalid_parameter);
    CHECK_THROWS_AS(
        (void)census::family_count("c3", 5, 2, Method::enumerate),
        unsupported_parameters);
    try {
        (void)census::frieze_count(3, 6, 3, Method::search, {1, 50});
        FAIL("expected a resource_limit");
    } catch (const resource_limit& e) {
        CHECK(e.nodes_visited > 0);
    }
    try {
        (void)census::frieze_count(3, 6, 3, Method::enumerate, {1, 10});
        FAIL("expected a resource_limit");
    } catch (const resource_limit& e) {
        CHECK(e.nodes_visited > 0);
    }
}

TEST_CASE("base family search through the family counter") {
    CHECK(census::family_count("base", 5, 2, Method::search, {}, 3) == 840);
    CHECK(census::family_count("base*", 6, 3, Method::search, {}, 3) == 203580);
}
