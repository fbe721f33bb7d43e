#pragma once

#include "cobord/bt_module.hpp"
#include "cobord/twisted.hpp"

namespace cobord {

struct DualityOptions {
    // Integer inverted for the integral checks; nullopt means the torsion
    // index of the datum. Zero inverts every nonzero integer.
    std::optional<Integer> invert;
    // Extra filtration used to compute invariants and to judge their stability.
    int slack = 2;
};

struct DegreeVerdict {
    int degree = 0;
    CoinvariantsReport coinvariants;

    bool stable = true;                 // invariants unchanged when the cut is raised by `slack`
    std::size_t invariant_rows = 0;     // rows of the pairing matrix
    std::size_t pairing_rank = 0;
    IntVector pairing_divisors;         // Smith invariant factors of the pairing matrix
    bool relations_pair_trivially = false;
    bool null_space_matches = false;    // rank(pairing) + rank(relations) = lattice rank

    std::size_t indecomposable_rank = 0;
    IntVector indecomposable_torsion;
    std::size_t leading_rank = 0;
    IntVector leading_divisors;

    bool rational_ok = false;
    bool integral_ok = false;           // after inverting the chosen integer
    bool unimodular = false;            // with nothing inverted
    std::string verdict;                // perfect over Z | perfect over Z[1/tau] | rational-only | failed
};

struct DualityReport {
    RootDatum datum;
    Integer torsion_index;
    Integer inverted;
    int max_degree = 0;
    std::vector<DegreeVerdict> degrees;
    bool passed() const;
};

DualityReport duality_check(const RootDatum& rd, int max_degree, const DualityOptions& options = {});

} // namespace cobord
