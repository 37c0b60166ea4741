#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mim/formulas.hpp"

using namespace mim;

TEST_CASE("path formula") {
    CHECK(im_path_formula(1).value == 0);
    CHECK(im_path_formula(2).value == 1);
    CHECK(im_path_formula(5).value == 2);
    CHECK(im_path_formula(7).value == 2);
    CHECK(im_path_formula(8).value == 3);
    CHECK(im_path_formula(4).kind == FormulaKind::exact);
    CHECK_THROWS_AS(im_path_formula(0), std::invalid_argument);
}

TEST_CASE("cycle formula") {
    CHECK(im_cycle_formula(3).value == 1);
    CHECK(im_cycle_formula(6).value == 2);
    CHECK(im_cycle_formula(8).value == 2);
    CHECK(im_cycle_formula(9).value == 3);
    CHECK_THROWS_AS(im_cycle_formula(2), std::invalid_argument);
}

TEST_CASE("grid3 formula") {
    CHECK(im_grid3_formula(1).value == 1);
    CHECK(im_grid3_formula(2).value == 2);
    CHECK(im_grid3_formula(3).value == 2);
    CHECK(im_grid3_formula(4).value == 3);
    CHECK(im_grid3_formula(5).value == 4);
    CHECK(im_grid3_formula(6).value == 5);
    CHECK(im_grid3_formula(7).value == 5);
    CHECK(im_grid3_formula(8).value == 6);
    CHECK(im_grid3_formula(9).value == 7);
    CHECK(im_grid3_formula(10).value == 8);
    CHECK_THROWS_AS(im_grid3_formula(0), std::invalid_argument);
}

TEST_CASE("star formula") {
    for (int m : {2, 5, 12}) {
        FormulaValue v = im_star_formula(m);
        CHECK(v.value == 1);
        CHECK(v.kind == FormulaKind::exact);
    }
    CHECK_THROWS_AS(im_star_formula(1), std::invalid_argument);
}

TEST_CASE("book exact values") {
    CHECK(im_book_exact(3, 1).value == 1);
    CHECK(im_book_exact(4, 2).value == 3);
    CHECK(im_book_exact(5, 3).value == 4);
    CHECK(im_book_exact(5, 4).value == 5);
    CHECK(im_book_exact(3, 5).value == 4);
    CHECK(im_book_exact(6, 5).value == 10);
    CHECK(im_book_exact(4, 4).kind == FormulaKind::exact);
}

TEST_CASE("book exact applicability") {
    CHECK_FALSE(im_book_exact(2, 3).applicable);
    CHECK_FALSE(im_book_exact(4, 6).applicable);
    CHECK_FALSE(im_book_exact(4, 0).applicable);
    CHECK(im_book_exact(4, 6).reason.find("bounds") != std::string::npos);
}

TEST_CASE("book lower bounds by residue") {
    CHECK(im_book_lower_bound(3, 6).value == 5);    // n = 2 mod 4
    CHECK(im_book_lower_bound(4, 8).value == 8);    // n = 0 mod 4
    CHECK(im_book_lower_bound(5, 9).value == 13);   // n = 1 mod 4
    CHECK(im_book_lower_bound(3, 7).value == 5);    // n = 3 mod 4
    CHECK(im_book_lower_bound(3, 6).kind == FormulaKind::lower_bound);
}

TEST_CASE("book lower bound applicability") {
    CHECK_FALSE(im_book_lower_bound(3, 5).applicable);
    CHECK_FALSE(im_book_lower_bound(3, 1).applicable);
    CHECK_FALSE(im_book_lower_bound(2, 8).applicable);
}

TEST_CASE("conjecture mirrors the bound expressions with its own kind") {
    for (int m = 3; m <= 8; ++m) {
        for (int n = 6; n <= 14; ++n) {
            FormulaValue lb = im_book_lower_bound(m, n);
            FormulaValue cj = im_book_conjecture(m, n);
            CHECK(lb.value == cj.value);
            CHECK(cj.kind == FormulaKind::conjectured_exact);
        }
    }
    CHECK(im_book_conjecture(3, 6).value == 5);
    CHECK(im_book_conjecture(4, 8).value == 8);
    CHECK(im_book_conjecture(5, 9).value == 13);
}

TEST_CASE("odd bound is integral on the n = 1 mod 4 class") {
    for (int m = 3; m <= 12; ++m)
        for (int n = 9; n <= 29; n += 4) CHECK_NOTHROW(im_book_lower_bound(m, n));
}

TEST_CASE("seam identity: the odd bound meets the proven 5-column value") {
    for (int m = 3; m <= 12; ++m) {
        // (5m + 3m - 8) / 4 == 2(m - 1)
        CHECK((5 * m + 3 * m - 8) % 4 == 0);
        CHECK((5 * m + 3 * m - 8) / 4 == im_book_exact(m, 5).value);
    }
}

TEST_CASE("every applicable value is a nonnegative integer") {
    for (int n = 1; n <= 30; ++n) CHECK(im_path_formula(n).value >= 0);
    for (int n = 3; n <= 30; ++n) CHECK(im_cycle_formula(n).value >= 0);
    for (int n = 1; n <= 30; ++n) CHECK(im_grid3_formula(n).value >= 0);
    for (int m = 3; m <= 10; ++m)
        for (int n = 1; n <= 20; ++n) {
            if (auto v = im_book_exact(m, n); v.applicable) CHECK(v.value >= 0);
            if (auto v = im_book_lower_bound(m, n); v.applicable) CHECK(v.value >= 0);
        }
}

TEST_CASE("at m = 3 the book expressions collapse to the grid3 formula") {
    // S_3 is P_3, so the two families coincide at m = 3.
    for (int n = 1; n <= 5; ++n) CHECK(im_book_exact(3, n).value == im_grid3_formula(n).value);
    for (int n = 6; n <= 20; ++n)
        CHECK(im_book_conjecture(3, n).value == im_grid3_formula(n).value);
}
