#ifndef MIM_FORMULAS_HPP
#define MIM_FORMULAS_HPP

#include <string>

namespace mim {

enum class FormulaKind { exact, lower_bound, conjectured_exact };

const char* to_string(FormulaKind k);

// A closed-form value with its applicability range. `kind` is exact only
// where a proof exists; conjectured values are tagged so reports can never
// silently promote them to ground truth.
struct FormulaValue {
    int value = 0;
    FormulaKind kind = FormulaKind::exact;
    std::string source;
    bool applicable = true;
    std::string reason;  // why not applicable

    static FormulaValue na(std::string source, std::string reason);
};

FormulaValue im_path_formula(int n);   // n >= 1
FormulaValue im_cycle_formula(int n);  // n >= 3
FormulaValue im_grid3_formula(int n);  // n >= 1, P_3 x P_n
FormulaValue im_star_formula(int m);   // m >= 2

// Proven stacked-book values: n = 1 -> 1, n = 2,3 -> m-1, n = 4 -> m,
// n = 5 -> 2(m-1). Not applicable outside m >= 3, 1 <= n <= 5.
FormulaValue im_book_exact(int m, int n);

// Residue-selected lower bounds for m >= 3, n >= 6. Refuses n <= 5, where
// exact values exist (the bound expressions disagree with them at n = 1
// and n = 3).
FormulaValue im_book_lower_bound(int m, int n);

// Same expressions with kind = conjectured_exact.
FormulaValue im_book_conjecture(int m, int n);

}  // namespace mim

#endif
