#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "exact.hpp"

using namespace fibeuler;

TEST_CASE("initial terms for every catalogued shift") {
    struct Row {
        int z;
        std::vector<long> head;
    };
    // First values of the expansion, one row per shift.
    const std::vector<Row> rows = {
        {-1, {1, 0, 1, 1, 3, 4, 9, 14}},
        {0, {1, 1, 2, 4, 8, 15, 30, 56, 108, 203, 384, 716, 1342, 2487}},
        {1, {1, 1, 3, 6, 14, 28, 61, 122}},
        {2, {1, 2, 6, 15, 38, 89, 210, 474}},
    };
    for (const Row& row : rows) {
        CAPTURE(row.z);
        ExactSequence seq = euler_transform(ShiftParam(row.z),
                                            static_cast<long>(row.head.size()) - 1);
        REQUIRE(seq.terms.size() == row.head.size());
        for (size_t i = 0; i < row.head.size(); ++i) {
            CAPTURE(i);
            CHECK(seq.terms[i] == row.head[i]);
        }
    }
}

TEST_CASE("structural invariants: a_0 = 1, a_1 = F_{1+z}, nonnegative") {
    for (int z : {-1, 0, 1, 2, 3, 7}) {
        CAPTURE(z);
        ExactSequence seq = euler_transform(ShiftParam(z), 40);
        CHECK(seq.terms[0] == 1);
        CHECK(seq.terms[1] == fibonacci(1 + z));
        for (const mpz_class& t : seq.terms) CHECK(t >= 0);
    }
}

TEST_CASE("recurrence engine matches the product-expansion oracle") {
    for (int z : {-1, 0, 2}) {
        CAPTURE(z);
        ExactSequence fast = euler_transform(ShiftParam(z), 120);
        ExactSequence slow = product_expansion_oracle(ShiftParam(z), 120);
        REQUIRE(fast.terms.size() == slow.terms.size());
        for (size_t i = 0; i < fast.terms.size(); ++i) {
            CAPTURE(i);
            CHECK(fast.terms[i] == slow.terms[i]);
        }
    }
}

TEST_CASE("threaded expansion is bit-identical to serial") {
    // 600 exceeds the internal cutoff below which extra threads are ignored.
    ExactSequence serial = euler_transform(ShiftParam(0), 600, 1);
    ExactSequence threaded = euler_transform(ShiftParam(0), 600, 3);
    REQUIRE(serial.terms.size() == threaded.terms.size());
    CHECK(serial.terms == threaded.terms);
}

TEST_CASE("n_max = 0 yields just the constant term") {
    ExactSequence seq = euler_transform(ShiftParam(1), 0);
    REQUIRE(seq.terms.size() == 1);
    CHECK(seq.terms[0] == 1);
}

TEST_CASE("b-file serialization layout") {
    ExactSequence seq = euler_transform(ShiftParam(0), 3);
    std::ostringstream out;
    write_bfile(out, seq);
    CHECK(out.str() == "0 1\n1 1\n2 2\n3 4\n");
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(euler_transform(ShiftParam(0), -1), DomainError);
    CHECK_THROWS_AS(ShiftParam(-2), DomainError);
    CHECK_THROWS_AS(product_expansion_oracle(ShiftParam(0), -5), DomainError);
}

TEST_CASE("growth sanity: terms strictly increase beyond the ramp-up") {
    ExactSequence seq = euler_transform(ShiftParam(0), 200);
    for (size_t i = 3; i < seq.terms.size(); ++i) CHECK(seq.terms[i] > seq.terms[i - 1]);
}
