#pragma once

#include <array>
#include <optional>
#include <string>

namespace finitop {

/// Separation and structural predicates decided by the workbench. Each has a
/// direct decision procedure in classify(); the generic kappa/xi classifier
/// is a separate route so the equivalence theorems are genuine tests.
enum class Axiom {
    T0,
    T1,
    TD,
    TQuarter,
    TThird,
    THalf,
    WeaklyHausdorff,
    Hausdorff,
    Urysohn,
    CompletelyHausdorff,
    Regular,
    SemiRegular,
    Kc,
    Kd,
    US,
    CPrime,
    AntiCompact,
    R0,
    WeakR0,
    HTR1,
    LambdaSpace,
};

inline constexpr int kAxiomCount = 21;

inline constexpr std::array<Axiom, kAxiomCount> all_axioms = {
    Axiom::T0,        Axiom::T1,          Axiom::TD,
    Axiom::TQuarter,  Axiom::TThird,      Axiom::THalf,
    Axiom::WeaklyHausdorff, Axiom::Hausdorff, Axiom::Urysohn,
    Axiom::CompletelyHausdorff, Axiom::Regular, Axiom::SemiRegular,
    Axiom::Kc,        Axiom::Kd,          Axiom::US,
    Axiom::CPrime,    Axiom::AntiCompact, Axiom::R0,
    Axiom::WeakR0,    Axiom::HTR1,        Axiom::LambdaSpace,
};

/// Stable names used by the CLI, reports and `.space` tooling.
inline const char* axiom_name(Axiom a) {
    switch (a) {
        case Axiom::T0: return "T0";
        case Axiom::T1: return "T1";
        case Axiom::TD: return "TD";
        case Axiom::TQuarter: return "T_quarter";
        case Axiom::TThird: return "T_third";
        case Axiom::THalf: return "T_half";
        case Axiom::WeaklyHausdorff: return "weakly_hausdorff";
        case Axiom::Hausdorff: return "hausdorff";
        case Axiom::Urysohn: return "urysohn";
        case Axiom::CompletelyHausdorff: return "completely_hausdorff";
        case Axiom::Regular: return "regular";
        case Axiom::SemiRegular: return "semi_regular";
        case Axiom::Kc: return "kc";
        case Axiom::Kd: return "kd";
        case Axiom::US: return "US";
        case Axiom::CPrime: return "C_prime";
        case Axiom::AntiCompact: return "anti_compact";
        case Axiom::R0: return "R0";
        case Axiom::WeakR0: return "weak_R0";
        case Axiom::HTR1: return "hTR1";
        case Axiom::LambdaSpace: return "lambda_space";
    }
    return "?";
}

inline std::optional<Axiom> parse_axiom(const std::string& name) {
    for (Axiom a : all_axioms)
        if (name == axiom_name(a)) return a;
    return std::nullopt;
}

}  // namespace finitop
