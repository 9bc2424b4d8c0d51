#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "friezelab/frieze.hpp"

using namespace friezelab;
using namespace friezelab::frieze;
using gf::Fe;
using gf::Field;
using gf::make_field;
using linalg::Matrix;
using linalg::Vec;

namespace {

std::vector<Quiddity> enumerate_all(const Field& f, int k, long n,
                                    const EnumerateOptions& opts = {}) {
    std::vector<Quiddity> out;
    enumerate_quiddities(f, k, n, [&](const Quiddity& q) { out.push_back(q); }, opts);
    return out;
}

// brute force: test the product criterion on every possible entry array
std::vector<Quiddity> filter_all(const Field& f, int k, long n) {
    std::vector<Quiddity> out;
    const std::size_t cells = static_cast<std::size_t>(k - 1) * n;
    std::vector<long> digits(cells, 0);
    for (;;) {
        Quiddity q(f, k, n);
        std::size_t t = 0;
        for (int s = k - 1; s >= 1; --s)
            for (long i = 1; i <= n; ++i) q.set(s, i, f.elem(digits[t++]));
        if (check_quiddity(q)) out.push_back(q);
        std::size_t pos = cells;
        while (pos > 0 && digits[pos - 1] == f.q() - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }
    return out;
}

// windows of the fundamental vectors, continued with the sign twist
Fe twisted_window_det(const std::vector<Vec>& v, const Field& f, int k, long n,
                      long i) {
    const Fe s = alt_sign(f, k - 1);
    std::vector<Vec> cols;
    for (long j = i; j < i + k; ++j) {
        Vec c = v[static_cast<std::size_t>((j - 1) % n)];
        if (j > n)
            for (auto& x : c) x *= s;
        cols.push_back(c);
    }
    return Matrix::from_columns(f, cols).det();
}

}  // namespace

TEST_CASE("companion matrix layout") {
    const Field& f = make_field(7);
    Quiddity q(f, 3, 6);
    for (long i = 1; i <= 6; ++i) {
        q.set(1, i, f.elem(i % 7));
        q.set(2, i, f.elem((2 * i) % 7));
    }
    const Matrix m = companion_matrix(q, 2);
    CHECK(m.at(0, 0) == q.at(2, 2));
    CHECK(m.at(0, 1) == -q.at(1, 3));
    CHECK(m.at(0, 2) == f.one());  // (-1)^{k-1}, k odd
    CHECK(m.at(1, 0) == f.one());
    CHECK(m.at(2, 1) == f.one());
    CHECK(m.at(1, 1).is_zero());
    CHECK(m.at(1, 2).is_zero());
    CHECK(m.at(2, 0).is_zero());
    CHECK(m.at(2, 2).is_zero());
    // cyclic column access
    CHECK(q.at(1, 7) == q.at(1, 1));
    CHECK(q.at(2, 0) == q.at(2, 6));
    CHECK(q.at(2, -1) == q.at(2, 5));
}

TEST_CASE("zero quiddity closes exactly when the order divides the period") {
    for (long q : {2L, 3L, 5L}) {
        const Field& f = make_field(q);
        CHECK(check_quiddity(Quiddity(f, 3, 6)));
        CHECK(check_quiddity(Quiddity(f, 3, 9)));
        CHECK(!check_quiddity(Quiddity(f, 3, 7)));
        CHECK(!check_quiddity(Quiddity(f, 3, 8)));
    }
}

TEST_CASE("golden pattern: zero quiddity of order 3, period 6") {
    const Field& f = make_field(5);
    const Frieze fr = build_frieze(Quiddity(f, 3, 6));
    CHECK(fr.w() == 2);
    for (long i = 1; i <= 6; ++i) {
        CHECK(fr.at(-2, i).is_zero());
        CHECK(fr.at(-1, i).is_zero());
        CHECK(fr.at(0, i).is_one());
        CHECK(fr.at(1, i).is_zero());
        CHECK(fr.at(2, i).is_zero());
        CHECK(fr.at(3, i).is_one());
        CHECK(fr.at(4, i).is_zero());
        CHECK(fr.at(5, i).is_zero());
    }
    const FriezeReport rep = validate_frieze(fr);
    CHECK(rep.valid);
    CHECK(rep.failures.empty());
    CHECK(rep.unit_diamonds == 6 * 4);
    CHECK(rep.null_diamonds == 6 * 2);
    CHECK(extract_quiddity(fr) == Quiddity(f, 3, 6));
}

TEST_CASE("golden pattern: zero quiddity of order 2, period 6") {
    // closes over every field since the companion is a quarter turn
    for (long q : {2L, 3L, 7L}) {
        const Field& f = make_field(q);
        const Frieze fr = build_frieze(Quiddity(f, 2, 6));
        for (long i = 1; i <= 6; ++i) {
            CHECK(fr.at(1, i).is_zero());
            CHECK(fr.at(2, i) == -f.one());
            CHECK(fr.at(3, i).is_zero());
            CHECK(fr.at(4, i).is_one());
            CHECK(fr.at(5, i).is_zero());
        }
        CHECK(validate_frieze(fr).valid);
        CHECK(extract_quiddity(fr) == Quiddity(f, 2, 6));
    }
}

TEST_CASE("build_frieze rejects non-closing quiddities") {
    const Field& f = make_field(3);
    Quiddity q(f, 3, 7);  // zero quiddity, 3 does not divide 7
    CHECK(!check_quiddity(q));
    CHECK_THROWS_AS((void)build_frieze(q), precondition_violation);
    const Frieze raw = build_frieze_unchecked(q);
    CHECK(!validate_frieze(raw).valid);
}

TEST_CASE("enumerate matches the brute-force filter") {
    struct Cell {
        int k;
        long n;
        long q;
    };
    for (const Cell cell : {Cell{2, 5, 2}, {2, 5, 3}, {3, 5, 2}, {3, 6, 2}}) {
        CAPTURE(cell.k);
        CAPTURE(cell.n);
        CAPTURE(cell.q);
        const Field& f = make_field(cell.q);
        const auto fast = enumerate_all(f, cell.k, cell.n);
        const auto slow = filter_all(f, cell.k, cell.n);
        REQUIRE(fast.size() == slow.size());
        // same set; orders differ between the two generators
        std::vector<Quiddity> a = fast, b = slow;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        // no duplicates
        for (std::size_t t = 1; t < a.size(); ++t) CHECK(a[t - 1] < a[t]);
    }
}

TEST_CASE("enumerated counts match the pattern census") {
    struct Cell {
        int k;
        long n;
        long q;
        std::size_t want;
    };
    for (const Cell cell : {Cell{2, 5, 2, 5}, {2, 5, 3, 10}, {2, 5, 7, 50},
                            {3, 5, 2, 5}, {3, 6, 2, 29}, {3, 6, 3, 145},
                            {3, 7, 2, 93}, {4, 6, 2, 11}, {4, 7, 2, 93}}) {
        CAPTURE(cell.k);
        CAPTURE(cell.n);
        CAPTURE(cell.q);
        const Field& f = make_field(cell.q);
        CHECK(enumerate_all(f, cell.k, cell.n).size() == cell.want);
    }
}

TEST_CASE("every enumerated quiddity closes and round-trips") {
    struct Cell {
        int k;
        long n;
        long q;
    };
    for (const Cell cell : {Cell{2, 5, 3}, {3, 6, 2}, {4, 6, 2}}) {
        const Field& f = make_field(cell.q);
        for (const Quiddity& q : enumerate_all(f, cell.k, cell.n)) {
            CHECK(check_quiddity(q));
            const Frieze fr = build_frieze(q);
            CHECK(validate_frieze(fr).valid);
            CHECK(extract_quiddity(fr) == q);
            // fundamental vectors have constant twisted window determinants
            const auto v = frieze_vectors(fr);
            const Fe d1 = twisted_window_det(v, f, cell.k, cell.n, 1);
            CHECK(!d1.is_zero());
            for (long i = 2; i <= cell.n; ++i)
                CHECK(twisted_window_det(v, f, cell.k, cell.n, i) == d1);
        }
    }
}

TEST_CASE("worker count changes neither content nor order") {
    const Field& f3 = make_field(3);
    const auto one = enumerate_all(f3, 3, 6, {.workers = 1});
    const auto four = enumerate_all(f3, 3, 6, {.workers = 4});
    REQUIRE(one.size() == four.size());
    for (std::size_t t = 0; t < one.size(); ++t) CHECK(one[t] == four[t]);
    const Field& f7 = make_field(7);
    const auto a = enumerate_all(f7, 2, 5, {.workers = 1});
    const auto b = enumerate_all(f7, 2, 5, {.workers = 5});
    REQUIRE(a.size() == b.size());
    for (std::size_t t = 0; t < a.size(); ++t) CHECK(a[t] == b[t]);
}

TEST_CASE("node cap throws resource_limit") {
    const Field& f = make_field(3);
    CHECK_THROWS_AS(enumerate_all(f, 3, 6, {.workers = 1, .node_cap = 10}),
                    resource_limit);
    CHECK_THROWS_AS(enumerate_all(f, 3, 6, {.workers = 3, .node_cap = 10}),
                    resource_limit);
    try {
        enumerate_all(f, 3, 6, {.workers = 1, .node_cap = 10});
    } catch (const resource_limit& e) {
        CHECK(e.nodes_visited > 10);
    }
}

TEST_CASE("shape errors") {
    const Field& f = make_field(3);
    CHECK_THROWS_AS(Quiddity(f, 1, 5), invalid_parameter);
    CHECK_THROWS_AS(Quiddity(f, 3, 0), invalid_parameter);
    CHECK_THROWS_AS(Frieze(f, 3, 3), invalid_parameter);
    CHECK_THROWS_AS(Frieze(f, 3, 4), unsupported_parameters);  // zero width
    CHECK_THROWS_AS(enumerate_quiddities(f, 3, 4, [](const Quiddity&) {}),
                    unsupported_parameters);
    Quiddity q(f, 3, 6);
    CHECK_THROWS_AS((void)q.at(0, 1), invalid_parameter);
    CHECK_THROWS_AS((void)q.at(3, 1), invalid_parameter);
    Frieze fr(f, 3, 6);
    CHECK_THROWS_AS((void)fr.at(-3, 1), invalid_parameter);
    CHECK_THROWS_AS((void)fr.at(6, 1), invalid_parameter);
    CHECK_THROWS_AS((void)unit_diamond(fr, -1, 1), invalid_parameter);
    CHECK_THROWS_AS((void)null_diamond(fr, 0, 1), invalid_parameter);
}
