#include "mim/formulas.hpp"

#include <stdexcept>

namespace mim {

const char* to_string(FormulaKind k) {
    switch (k) {
        case FormulaKind::exact: return "exact";
        case FormulaKind::lower_bound: return "lower_bound";
        case FormulaKind::conjectured_exact: return "conjectured_exact";
    }
    return "?";
}

FormulaValue FormulaValue::na(std::string source, std::string reason) {
    return {0, FormulaKind::exact, std::move(source), false, std::move(reason)};
}

FormulaValue im_path_formula(int n) {
    if (n < 1) throw std::invalid_argument("im_path_formula: need n >= 1");
    return {(n - 1 + 2) / 3, FormulaKind::exact, "path_closed_form", true, ""};
}

FormulaValue im_cycle_formula(int n) {
    if (n < 3) throw std::invalid_argument("im_cycle_formula: need n >= 3");
    return {n / 3, FormulaKind::exact, "cycle_closed_form", true, ""};
}

FormulaValue im_grid3_formula(int n) {
    if (n < 1) throw std::invalid_argument("im_grid3_formula: need n >= 1");
    int value;
    if (n % 2 == 0) {
        value = (3 * n + 3) / 4;  // ceil(3n/4)
    } else if (n % 4 == 1) {
        // (3(n-1) + 4) / 4: the n = 4k+1 residue class, pinned to agree
        // with the proven 5-column book value at m = 3 (the two families
        // coincide there since S_3 is P_3).
        value = (3 * (n - 1) + 4) / 4;
    } else {
        value = (3 * (n - 1) + 2) / 4;  // n = 4k+3
    }
    return {value, FormulaKind::exact, "grid3_closed_form", true, ""};
}

FormulaValue im_star_formula(int m) {
    if (m < 2) throw std::invalid_argument("im_star_formula: need m >= 2");
    return {1, FormulaKind::exact, "star_closed_form", true, ""};
}

FormulaValue im_book_exact(int m, int n) {
    if (m < 3) return FormulaValue::na("book_exact", "proved only for m >= 3");
    if (n < 1 || n > 5) return FormulaValue::na("book_exact", "not applicable: use bounds");
    int value;
    const char* source;
    switch (n) {
        case 1: value = 1; source = "book_exact_n1"; break;
        case 2: value = m - 1; source = "book_exact_n2"; break;
        case 3: value = m - 1; source = "book_exact_n3"; break;
        case 4: value = m; source = "book_exact_n4"; break;
        default: value = 2 * (m - 1); source = "book_exact_n5"; break;
    }
    return {value, FormulaKind::exact, source, true, ""};
}

namespace {

FormulaValue book_bound(int m, int n, FormulaKind kind) {
    const std::string tag = kind == FormulaKind::lower_bound ? "book_lower_bound" : "book_conjecture";
    if (m < 3) return FormulaValue::na(tag, "stated only for m >= 3");
    if (n < 6)
        return FormulaValue::na(tag, "exact values cover n <= 5 (the bound expressions "
                                     "disagree with them at n = 1 and n = 3)");
    int value;
    std::string source;
    switch (n % 4) {
        case 0:
            if (m * n % 4 != 0) throw std::logic_error("book_bound: mn/4 not integral");
            value = m * n / 4;
            source = tag + "_even";
            break;
        case 2:
            value = m * ((n + 3) / 4) - 1;  // m * ceil(n/4) - 1
            source = tag + "_even";
            break;
        case 1:
            if ((m * n + 3 * m - 8) % 4 != 0)
                throw std::logic_error("book_bound: (mn+3m-8)/4 not integral");
            value = (m * n + 3 * m - 8) / 4;
            source = tag + "_odd";
            break;
        default:  // n % 4 == 3
            value = m * (n / 4) + 2;
            source = tag + "_odd";
            break;
    }
    return {value, kind, source, true, ""};
}

}  // namespace

FormulaValue im_book_lower_bound(int m, int n) {
    return book_bound(m, n, FormulaKind::lower_bound);
}

FormulaValue im_book_conjecture(int m, int n) {
    return book_bound(m, n, FormulaKind::conjectured_exact);
}

}  // namespace mim
