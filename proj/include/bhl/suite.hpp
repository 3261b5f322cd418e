#pragma once

#include "bhl/functors.hpp"

namespace bhl {

struct Criterion {
    int number = 0;
    std::string title;
    double budget = 0;   // seconds
    double seconds = 0;
    Report report;

    bool in_budget() const { return seconds < budget; }
    bool passed() const { return report.all_pass() && in_budget(); }
};

int criterion_count();
// runs one acceptance criterion (1-based)
Criterion run_criterion(int number);
std::vector<Criterion> run_suite();

// the YD modules the suite draws on: adjoint and trivial modules over sweedler in every variant,
// graded lines over kZ3, and the R-induced modules over H(1,1,(1))
std::vector<YDModule> builtin_yd_modules();
// a pair of inputs of the right kind for f: regular D(H)-modules, adjoint YD modules or their center objects
std::pair<Structure, Structure> builtin_functor_pair(FunctorId f, const FunctorEnv& env);
// the input variant of f, or nullopt when f takes D(H)-modules or center objects
std::optional<Variant> functor_input_variant(FunctorId f);

}  // namespace bhl
