#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reglab/padic.hpp"

#include <random>

using namespace reglab;

namespace {

const PadicConfig cfg(7, 20);

PadicNumber rand_unit(std::mt19937_64& rng) {
    long u = static_cast<long>(rng() % 1000000) + 1;
    while (u % 7 == 0) ++u;
    long v = static_cast<long>(rng() % 3);
    return cfg.integer(u) * cfg.integer(7).pow(v);
}

}  // namespace

TEST_CASE("multiplication adds valuations") {
    auto a = cfg.integer(7);
    auto b = a * a;
    CHECK(b.valuation() == 2);
    CHECK(b.indistinguishable(cfg.integer(49)));
}

TEST_CASE("exact cancellation yields zero at working precision") {
    auto z = cfg.integer(1) - cfg.integer(1);
    CHECK(z.is_zero());
    CHECK(z.precision() == 20);
}

TEST_CASE("division matches a truncated geometric series") {
    // 1/(1-7) = sum 7^k, summed independently
    auto q = cfg.integer(1) / cfg.integer(1 - 7);
    auto acc = cfg.zero();
    for (long k = 0; k < 20; ++k) acc += cfg.integer(7).pow(k);
    CHECK(discrepancy_valuation(q, acc) >= 20);
}

TEST_CASE("valuation laws") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto a = rand_unit(rng), b = rand_unit(rng);
        CHECK((a * b).valuation() == a.valuation() + b.valuation());
        auto s = a + b;
        if (a.valuation() != b.valuation()) {
            CHECK(s.valuation() == std::min(a.valuation(), b.valuation()));
        } else if (!s.is_zero()) {
            CHECK(s.valuation() >= a.valuation());
        }
    }
}

TEST_CASE("log of 1 and of p") {
    CHECK(padic_log(cfg.integer(1), cfg).is_zero());
    // log p = declared branch, default 0
    CHECK(padic_log(cfg.integer(7), cfg).is_zero());

    PadicConfig br(7, 20);
    br.log_branch = br.integer(5);
    CHECK(discrepancy_valuation(padic_log(br.integer(7), br), br.integer(5)) >= 19);
}

TEST_CASE("log(8) equals the alternating series in 7") {
    auto lg = padic_log(cfg.integer(8), cfg);
    // sum (-1)^(k+1) 7^k / k
    auto acc = cfg.zero();
    for (long k = 1; k <= 25; ++k) {
        auto t = cfg.integer(7).pow(k).div_long(k);
        acc = (k % 2 == 1) ? acc + t : acc - t;
    }
    CHECK(discrepancy_valuation(lg, acc) >= lg.precision());
    CHECK(lg.precision() >= 18);
}

TEST_CASE("log is a homomorphism") {
    std::mt19937_64 rng(11);
    PadicConfig br(7, 20);
    br.log_branch = br.integer(3 + 49);
    for (const auto* c : {&cfg, &br}) {
        for (int i = 0; i < 50; ++i) {
            auto a = rand_unit(rng), b = rand_unit(rng);
            auto lhs = padic_log(a * b, *c);
            auto rhs = padic_log(a, *c) + padic_log(b, *c);
            CHECK(discrepancy_valuation(lhs, rhs) >= std::min(lhs.precision(), rhs.precision()));
        }
    }
}

TEST_CASE("log kills Teichmuller representatives") {
    for (long u = 1; u <= 6; ++u) {
        auto w = teichmuller(cfg.integer(u));
        CHECK(padic_log(w, cfg).is_zero());
    }
}

TEST_CASE("teichmuller satisfies its defining equation") {
    auto w = teichmuller(cfg.integer(3));
    CHECK(discrepancy_valuation(w.pow(6), cfg.integer(1)) >= 20);
    CHECK(w.digits()[0] == 3);

    // fixed point of y -> y^7
    auto y = cfg.integer(3);
    for (int i = 0; i < 20; ++i) y = y.pow(7);
    CHECK(discrepancy_valuation(w, y) >= 20);
}

TEST_CASE("teichmuller rejects non-units") {
    CHECK_THROWS_AS(teichmuller(cfg.integer(7)), Error);
}

TEST_CASE("exp examples") {
    CHECK(padic_exp(cfg.zero()).indistinguishable(cfg.integer(1)));

    auto e7 = padic_exp(cfg.integer(7));
    // direct factorial series
    auto acc = cfg.zero();
    mpz_class fact = 1;
    for (long k = 0; k <= 30; ++k) {
        if (k) fact *= k;
        acc += cfg.integer(7).pow(k) / cfg.integer(fact);
    }
    CHECK(discrepancy_valuation(e7, acc) >= e7.precision());
    CHECK(e7.precision() >= 17);
}

TEST_CASE("exp rejects arguments outside the convergence domain") {
    CHECK_THROWS_AS(padic_exp(cfg.integer(3)), Error);
}

TEST_CASE("exp and log invert each other on 1 + 7Z_7") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        long k = static_cast<long>(rng() % 100000);
        auto u = cfg.integer(1 + 7 * (k + 1));
        auto lg = padic_log(u, cfg);
        auto back = padic_exp(lg);
        CHECK(discrepancy_valuation(back, u) >= back.precision());
        auto x = cfg.integer(7 * (k + 1));
        auto fwd = padic_log(padic_exp(x), cfg);
        CHECK(discrepancy_valuation(fwd, x) >= fwd.precision());
    }
}

TEST_CASE("division by an indistinguishable zero is refused") {
    auto z = cfg.integer(1) - cfg.integer(1);
    CHECK_THROWS_AS(cfg.integer(1) / z, Error);
    try {
        (void)(cfg.integer(1) / z);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::window);
        CHECK(e.tag() == "insufficient precision");
    }
}

TEST_CASE("rationals embed with correct valuation") {
    auto x = cfg.rational(3, 14);  // v = -1
    CHECK(x.valuation() == -1);
    CHECK((x * cfg.integer(14)).indistinguishable(cfg.integer(3)));
}
