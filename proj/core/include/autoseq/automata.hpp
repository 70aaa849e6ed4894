#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autoseq/field.hpp"

namespace autoseq {

/// Sequences are 1-indexed in the math; Seq stores v(1) at position 0.
using Seq = std::vector<FieldElement>;

/// Result of the breadth-first closure of a prefix under the decimation
/// operators T_j v = (v(rn+j))_{n>=1}.
///
/// Classes are identified by agreement on the longest window both can
/// exhibit from the available prefix; closure is therefore horizon-bounded
/// evidence, not a proof. Class 0 is always the input sequence itself.
struct KernelResult {
    long r = 0;
    long horizon = 0;     // requested evaluation horizon
    long min_window = 0;  // smallest window accepted for a confident merge
    bool closed = false;
    /// Representative prefix of each class (values at n = 1, 2, ...).
    std::vector<Seq> classes;
    /// transitions[c][j] = class of T_j applied to class c; -1 if unresolved.
    std::vector<std::vector<int>> transitions;
    int root = 0;
};

/// Deterministic finite automaton with output, evaluating v(n) from the
/// base-r digits of n, least-significant digit first.
struct DFAO {
    long r = 0;
    int initial = 0;
    std::vector<std::vector<int>> transitions;
    /// small_values[state][i-1] = value of the state's sequence at index i,
    /// for 1 <= i <= r-1; the evaluation terminates there.
    std::vector<std::vector<FieldElement>> small_values;
};

/// A relation (T_i v)(n+m) = sigma(v(n)) with sigma injective on the
/// observed alphabet.
struct ShiftRelation {
    long i = 0;
    long m = 0;
    /// Value map as (x, sigma(x)) pairs, ordered by x.
    std::vector<std::pair<FieldElement, FieldElement>> sigma;
};

struct AutomaticityReport {
    long r = 0;
    /// Per digit j: did T_j v look ultimately periodic within the horizon?
    std::vector<bool> decimation_periodic;
    /// Set when exactly one decimation is non-periodic.
    std::optional<long> nonperiodic_digit;
    std::vector<ShiftRelation> relations;
    /// All but one decimation periodic and the remaining one admits a shift
    /// relation. Horizon-bounded evidence only.
    bool shift_certificate = false;
    bool kernel_closed = false;
    long class_count = 0;
};

/// Breadth-first kernel closure. Requires v.size() >= r*horizon + r.
KernelResult kernel_explore(const Seq& v, long r, long horizon, long min_window = 32);

/// Throws KernelNotClosed unless k.closed.
DFAO synthesize_dfao(const KernelResult& k);

FieldElement run_dfao(const DFAO& d, long n);

/// Tries every digit i and shift m <= max_m; keeps the pairs whose value
/// map is consistent on all checkable n and injective. Requires at least 64
/// checkable sample points per candidate.
std::vector<ShiftRelation> detect_shift_relation(const Seq& v, long r, long max_m);

AutomaticityReport automaticity_report(const Seq& v, long r);

/// Deterministic GraphViz DOT rendering (states in BFS order, edges by
/// digit).
std::string export_dot(const DFAO& d);

/// Smallest (preperiod, period), preperiod-major, such that
/// v(n+period) = v(n) for all checkable n > preperiod. Requires
/// v.size() >= max_preperiod + 2*max_period.
std::optional<std::pair<long, long>> detect_ultimate_periodicity(const Seq& v,
                                                                 long max_preperiod,
                                                                 long max_period);

}  // namespace autoseq
