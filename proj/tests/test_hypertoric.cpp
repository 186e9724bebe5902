#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qs/hypertoric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace qs;

namespace {

SignVector sv(std::vector<int> signs) {
    SignVector out;
    for (int s : signs) out.signs.push_back(static_cast<int8_t>(s));
    return out;
}

SliceQuiverData minimal_slice(int n, int loops, int w) {
    auto [qe, vt] = extend(flower_setting(n, loops, w));
    RepresentationType tau;
    tau.parts.push_back({{0, 1}, 1});
    for (int i = 0; i < n; ++i) tau.parts.push_back({{1, 0}, 1});
    return slice_quiver(qe, tau);
}

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::vector<SignVector> signs_of(const std::vector<Chamber>& chs) {
    std::vector<SignVector> out;
    for (const auto& c : chs) out.push_back(c.sign);
    return out;
}

} // namespace

TEST_CASE("reduced arrangement layout") {
    Arrangement arr = build_reduced(3, 2, 1, Rat(2));
    CHECK(arr.vars == std::vector<std::string>{"h12", "h13", "h23", "q1", "q2", "q3"});
    CHECK(arr.integral);
    REQUIRE(arr.eqs.size() == 3);
    // vertex 1: -h12 - h13 - q1 = lambda
    CHECK(arr.eqs[0].a == std::vector<Rat>{-1, -1, 0, -1, 0, 0});
    // vertex 2: +h12 - h23 - q2 = lambda (h21 = -h12)
    CHECK(arr.eqs[1].a == std::vector<Rat>{1, 0, -1, 0, -1, 0});
    CHECK(arr.eqs[2].a == std::vector<Rat>{0, 1, 1, 0, 0, -1});
    for (const auto& r : arr.eqs) CHECK(r.b == 2);
    // thresholds: h: +/- (loops-1); q: >= 0 / <= -w
    for (int v = 0; v < 3; ++v) {
        CHECK(arr.plus_min[v] == 1);
        CHECK(arr.minus_max[v] == -1);
    }
    for (int v = 3; v < 6; ++v) {
        CHECK(arr.plus_min[v] == 0);
        CHECK(arr.minus_max[v] == -1);
    }
    CHECK(build_reduced(2, 3, 2, Rat(0)).plus_min[0] == 2);
    CHECK(build_reduced(2, 3, 2, Rat(0)).minus_max[1] == -2);

    CHECK_FALSE(build_reduced(2, 2, 1, Rat(1, 2)).integral);
    CHECK_THROWS_AS(build_reduced(0, 2, 1, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_reduced(2, 1, 1, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(build_reduced(2, 2, 0, Rat(0)), std::invalid_argument);
}

TEST_CASE("h-variable indexing") {
    CHECK(h_index(4, 0, 1) == 0);
    CHECK(h_index(4, 0, 2) == 1);
    CHECK(h_index(4, 0, 3) == 2);
    CHECK(h_index(4, 1, 2) == 3);
    CHECK(h_index(4, 1, 3) == 4);
    CHECK(h_index(4, 2, 3) == 5);
    CHECK_THROWS_AS(h_index(4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(h_index(4, 1, 4), std::invalid_argument);
}

TEST_CASE("sign vector ordering puts plus first") {
    CHECK(sv({1, -1}) < sv({-1, 1}));
    CHECK(sv({1, 1}) < sv({1, -1}));
    CHECK_FALSE(sv({1, 1}) < sv({1, 1}));
    CHECK(sv({1, -1}) == sv({1, -1}));
}

TEST_CASE("chamber classification on the two-vertex arrangement") {
    Arrangement arr = build_reduced(2, 2, 1, Rat(2));

    Chamber ch = chamber_status(arr, sv({1, -1, -1}));
    CHECK(ch.status == ChamberStatus::Bounded);
    CHECK(ch.lattice == std::vector<std::vector<long long>>{{1, -3, -1}});

    // a plus on q1 cannot be bounded-nonempty at lambda >= 1
    Chamber plus_q = chamber_status(arr, sv({1, 1, -1}));
    CHECK(plus_q.status != ChamberStatus::Bounded);

    Arrangement zero = build_reduced(2, 2, 1, Rat(0));
    Chamber all_plus = chamber_status(zero, sv({1, 1, 1}));
    CHECK(all_plus.status != ChamberStatus::Bounded);
}

TEST_CASE("bounded chamber enumeration matches the reference counts") {
    Arrangement arr = build_reduced(2, 2, 1, Rat(2));
    auto chs = enumerate_bounded(arr);
    REQUIRE(chs.size() == 2);
    CHECK(chs[0].sign == sv({1, -1, -1}));
    CHECK(chs[1].sign == sv({-1, -1, -1}));
    CHECK(chs[0].lattice == std::vector<std::vector<long long>>{{1, -3, -1}});
    CHECK(chs[1].lattice == std::vector<std::vector<long long>>{{-1, -1, -3}});

    CHECK(enumerate_bounded(build_reduced(2, 2, 1, Rat(1))).empty());
    CHECK(enumerate_bounded(build_reduced(3, 2, 1, Rat(1))).empty());

    auto neg = enumerate_bounded(build_reduced(2, 2, 1, Rat(-1)));
    REQUIRE(neg.size() == 2);
    CHECK(neg[0].sign == sv({1, 1, 1}));
    CHECK(neg[1].sign == sv({-1, 1, 1}));

    CHECK(enumerate_bounded(build_reduced(2, 2, 1, Rat(1, 2))).empty());
}

TEST_CASE("closed-form count formula") {
    CHECK(reference_count(4, 3, 2, Rat(8)) == 24);
    CHECK(reference_count(4, 3, 2, Rat(7)) == 0);
    CHECK(reference_count(4, 3, 2, Rat(1, 2)) == 0);
    CHECK(reference_count(2, 2, 1, Rat(2)) == 2);
    CHECK(reference_count(2, 2, 1, Rat(1)) == 0);
    CHECK(reference_count(2, 2, 1, Rat(0)) == 0);
    CHECK(reference_count(2, 2, 1, Rat(-1)) == 2);
    CHECK(reference_count(1, 2, 1, Rat(0)) == 1);
    CHECK(reference_count(1, 2, 1, Rat(5)) == 1);
    CHECK_THROWS_AS(reference_count(0, 2, 1, Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(reference_count(2, 1, 1, Rat(0)), std::invalid_argument);
}

TEST_CASE("counts agree with the formula across a parameter sweep") {
    // the n = 4 cells run in the acceptance harness; n <= 3 is enough here
    for (int n : {2, 3}) {
        for (int ell : {2, 3}) {
            for (int w : {1, 2}) {
                int hi = (n - 1) * (ell - 1) + w + 2;
                int lo = -(n - 1) * (ell - 1) - 2;
                for (int lam = lo; lam <= hi; ++lam) {
                    INFO("n=", n, " ell=", ell, " w=", w, " lambda=", lam);
                    Arrangement arr = build_reduced(n, ell, w, Rat(lam));
                    auto chs = enumerate_bounded(arr);
                    CHECK(static_cast<long long>(chs.size()) ==
                          reference_count(n, ell, w, Rat(lam)));
                    CHECK(std::is_sorted(chs.begin(), chs.end(),
                                         [](const Chamber& a, const Chamber& b) {
                                             return a.sign < b.sign;
                                         }));
                    for (const auto& ch : chs) {
                        // bounded chambers always meet the lattice
                        CHECK_FALSE(ch.lattice.empty());
                        // q signs are uniform, fixed by the side of lambda
                        for (int i = 0; i < n; ++i) {
                            int8_t qs = ch.sign.signs[n * (n - 1) / 2 + i];
                            CHECK(qs == (lam >= 1 ? -1 : 1));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("enumeration is independent of the worker split") {
    Arrangement arr = build_reduced(3, 2, 1, Rat(3));
    auto seq = enumerate_bounded(arr, 1);
    auto par = enumerate_bounded(arr, 4);
    REQUIRE(seq.size() == par.size());
    for (size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].sign == par[i].sign);
        CHECK(seq[i].lattice == par[i].lattice);
    }
}

TEST_CASE("full arrangement from the minimal-leaf slice") {
    SliceQuiverData slice = minimal_slice(2, 2, 1);
    Arrangement full = build_full(slice, Rat(2));
    CHECK_FALSE(full.reduced);
    CHECK(full.n == 2);
    CHECK(full.loops == 2);
    CHECK(full.w == 1);
    CHECK(full.vars == std::vector<std::string>{"v12k1", "v21k1", "q1m1", "q2m1"});
    REQUIRE(full.eqs.size() == 2);
    CHECK(full.eqs[0].a == std::vector<Rat>{-1, 1, -1, 0});
    CHECK(full.eqs[1].a == std::vector<Rat>{1, -1, 0, -1});
    // half-space templates x >= 0 / x <= -1
    for (size_t v = 0; v < full.vars.size(); ++v) {
        CHECK(full.plus_min[v] == 0);
        CHECK(full.minus_max[v] == -1);
    }

    SUBCASE("framing width scales the leg variables") {
        Arrangement wide = build_full(minimal_slice(2, 3, 2), Rat(0));
        CHECK(wide.vars.size() == 2 * 1 * 2 + 2 * 2);
        CHECK(wide.loops == 3);
        CHECK(wide.w == 2);
    }

    SUBCASE("non-minimal slices are rejected") {
        auto [qe, vt] = extend(flower_setting(2, 2, 1));
        RepresentationType stacked;
        stacked.parts.push_back({{0, 1}, 1});
        stacked.parts.push_back({{1, 0}, 2});
        SliceQuiverData bad = slice_quiver(qe, stacked);
        CHECK_THROWS_AS(build_full(bad, Rat(2)), std::invalid_argument);
    }
}

TEST_CASE("full chambers collapse onto reduced chambers") {
    struct Cell {
        int n, ell, w, lam;
    };
    for (Cell c : {Cell{2, 2, 1, 2}, Cell{2, 2, 2, 3}, Cell{2, 3, 1, 3},
                   Cell{2, 3, 2, 4}, Cell{3, 2, 1, 3}, Cell{2, 2, 1, -1}}) {
        INFO("n=", c.n, " ell=", c.ell, " w=", c.w, " lambda=", c.lam);
        Arrangement full = build_full(minimal_slice(c.n, c.ell, c.w), Rat(c.lam));
        Arrangement red = build_reduced(c.n, c.ell, c.w, Rat(c.lam));
        auto full_chs = enumerate_bounded(full);
        auto red_chs = enumerate_bounded(red);
        REQUIRE(full_chs.size() == red_chs.size());
        CHECK(full_chs.size() == static_cast<size_t>(
                                     reference_count(c.n, c.ell, c.w, Rat(c.lam))));

        std::set<SignVector> reduced_signs;
        for (const auto& ch : red_chs) reduced_signs.insert(ch.sign);
        std::set<SignVector> images;
        for (const auto& ch : full_chs) {
            SignVector img = reduce_chamber(full, ch);
            CHECK(reduced_signs.count(img) == 1);
            images.insert(img);
        }
        CHECK(images.size() == full_chs.size()); // injective, hence bijective
    }
}

TEST_CASE("reduce_chamber rejects bad input") {
    Arrangement full = build_full(minimal_slice(2, 2, 1), Rat(2));
    Chamber empty;
    empty.sign = sv({1, 1, 1, 1});
    empty.status = ChamberStatus::Empty;
    CHECK_THROWS_AS(reduce_chamber(full, empty), std::invalid_argument);

    // tandem-drift signs are incoherent: v12 and v21 share a sign
    Chamber fake;
    fake.sign = sv({1, 1, -1, -1});
    fake.status = ChamberStatus::Bounded;
    CHECK_THROWS_AS(reduce_chamber(full, fake), std::invalid_argument);
}

TEST_CASE("orderings peel off the recursive maximum") {
    // h12=+, h13=-, h14=+, h23=-, h24=+, h34=+ -> (3,1,2,4)
    SignVector s = sv({1, -1, 1, -1, 1, 1, -1, -1, -1, -1});
    CHECK(chamber_to_ordering(s, 4) == std::vector<int>{2, 0, 1, 3});

    CHECK(chamber_to_ordering(sv({1, -1, -1}), 2) == std::vector<int>{0, 1});
    CHECK(chamber_to_ordering(sv({-1, -1, -1}), 2) == std::vector<int>{1, 0});

    // cyclic signs admit no peel index
    CHECK_THROWS_AS(chamber_to_ordering(sv({1, -1, 1, 1, 1, 1}), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(chamber_to_ordering(sv({1, 1}), 2), std::invalid_argument);
}

TEST_CASE("bounded chambers biject onto orderings") {
    for (int n : {2, 3, 4}) {
        int lam = (n - 1) * 1 + 1; // threshold for ell=2, w=1
        Arrangement arr = build_reduced(n, 2, 1, Rat(lam));
        auto chs = enumerate_bounded(arr);
        REQUIRE(static_cast<long long>(chs.size()) == factorial(n));
        std::set<std::vector<int>> orderings;
        for (const auto& ch : chs) orderings.insert(chamber_to_ordering(ch.sign, n));
        CHECK(static_cast<long long>(orderings.size()) == factorial(n));
    }
}

TEST_CASE("symmetric group action on reduced signs") {
    SUBCASE("identity fixes everything") {
        SignVector s = sv({1, -1, 1, -1, 1, 1});
        CHECK(sn_act({0, 1, 2}, s, 3) == s);
    }
    SUBCASE("transposition relabels with orientation flips") {
        // n=2: swapping the vertices flips h12 and swaps the q entries
        SignVector s = sv({1, -1, 1});
        CHECK(sn_act({1, 0}, s, 2) == sv({-1, 1, -1}));
    }
    SUBCASE("not a permutation") {
        CHECK_THROWS_AS(sn_act({0, 0}, sv({1, -1, 1}), 2), std::invalid_argument);
        CHECK_THROWS_AS(sn_act({0}, sv({1, -1, 1}), 2), std::invalid_argument);
    }
    SUBCASE("action is free and transitive on bounded chambers") {
        Arrangement arr = build_reduced(3, 2, 1, Rat(3));
        auto chs = enumerate_bounded(arr);
        REQUIRE(chs.size() == 6);
        std::set<SignVector> all;
        for (const auto& ch : chs) all.insert(ch.sign);

        std::vector<int> sigma{0, 1, 2};
        std::set<SignVector> orbit;
        do {
            SignVector img = sn_act(sigma, chs[0].sign, 3);
            CHECK(all.count(img) == 1);
            orbit.insert(img);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(orbit.size() == 6);
    }
    SUBCASE("action intertwines with ordering composition") {
        for (int n : {2, 3, 4}) {
            int lam = (n - 1) * 1 + 1;
            auto chs = enumerate_bounded(build_reduced(n, 2, 1, Rat(lam)));
            std::vector<int> sigma(n);
            std::iota(sigma.begin(), sigma.end(), 0);
            do {
                for (const auto& ch : chs) {
                    auto direct = chamber_to_ordering(sn_act(sigma, ch.sign, n), n);
                    auto composed = chamber_to_ordering(ch.sign, n);
                    for (int& v : composed) v = sigma[v];
                    CHECK(direct == composed);
                }
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }
    }
}
