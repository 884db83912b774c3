#pragma once

#include <chrono>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "srcdec/groebner.hpp"
#include "srcdec/triset.hpp"

namespace srcdec {

/// A reduced basis together with the W-characteristic set of its ideal.
struct CharPair {
    ReducedGB gb;
    TriangularSet wchar;
    bool is_strong = false;   ///< sat(wchar) = <gb>
    bool is_regular = false;
    bool is_normal = false;

    static CharPair trivial(const OrderingPtr& ordering);
    bool is_trivial() const { return gb.is_unit(); }
    bool is_src() const { return is_trivial() || (is_strong && is_regular); }
};

/// Builds the pair for `gb`, deciding the three flags.
CharPair make_char_pair(ReducedGB gb, ComputeContext* ctx = nullptr);

/// One run of strong regularization.
struct SrcPairResult {
    CharPair pair;
    /// Index m at which sat(C_{m-1}) = sat(C_m), or at which the unit ideal
    /// appeared; at least 2.
    unsigned m = 2;
    /// G_1, G_2, ... with G_1 the basis of the input and G_i the basis of
    /// sat(C_{i-1}); wchars[i] is the W-characteristic set of gbs[i].
    std::vector<ReducedGB> gbs;
    std::vector<TriangularSet> wchars;
    bool reached_unit = false;
};

SrcPairResult src_pair_traced(const ReducedGB& ideal, ComputeContext* ctx = nullptr);
SrcPairResult src_pair_traced(const IdealGens& ideal, ComputeContext* ctx = nullptr);

/// An SRC pair (G, C) with <ideal> ⊆ sat(C) = <G>, or ({1}, [1]) when the
/// ideal or some saturation in the chain is the unit ideal.
CharPair src_pair(const IdealGens& ideal, ComputeContext* ctx = nullptr);

enum class BranchOrder {
    Ascending,   ///< candidates by increasing leading term
    Descending,  ///< candidates by decreasing leading term
};

/// How src_decompose removes a found divisor <G> from the current ideal I.
enum class Division {
    Quotient,    ///< I := I : <G>
    Saturation,  ///< I := I : <G>^∞
};

struct DecompOptions {
    SplitStrategy strategy = SplitStrategy::Squarefree;
    BranchOrder branch_order = BranchOrder::Descending;
    Division division = Division::Saturation;
    /// Cap on branch-tree nodes explored by one divisor search.
    std::size_t max_tree_nodes = 4096;
    /// Re-derive the invariants the algorithms guarantee at every step and
    /// raise InternalError on a violation. Costs extra Groebner bases.
    bool check_invariants = false;
    /// Called with each pair and its m as soon as it is found, so callers
    /// can report progress made before a budget error.
    std::function<void(const CharPair&, unsigned)> on_pair;
};

/// Result of one divisor search.
struct DivisorResult {
    CharPair pair;
    ReducedGB quotient;  ///< <ideal> : <pair.gb>, strictly larger than <ideal>
    unsigned m = 2;
    std::size_t depth = 0;  ///< branch-tree level the divisor came from
    std::size_t nodes = 0;  ///< branch-tree nodes created
    std::string tree;       ///< rendering of the explored branch tree
};

DivisorResult find_src_divisor(const ReducedGB& ideal, const DecompOptions& options = {},
                               ComputeContext* ctx = nullptr);

/// An SRC pair whose ideal divides <ideal>. DomainError on the unit ideal;
/// MorbidityError if the branch tree is exhausted without a divisor.
CharPair src_divisor(const IdealGens& ideal, const DecompOptions& options = {},
                     ComputeContext* ctx = nullptr);

/// Candidate splitting polynomials H_1..H_t for a node whose
/// W-characteristic set C* does not yield a divisor: the factors of
/// F * ini-product(C*) not in <ideal>, in branch order. `f_chosen` receives F.
std::vector<Polynomial> divisor_candidates(const ReducedGB& ideal, const DecompOptions& options,
                                           Polynomial* f_chosen, ComputeContext* ctx = nullptr);

struct DecompositionStats {
    std::vector<unsigned> iterations_m;     ///< per pair
    std::vector<std::size_t> branch_depth;  ///< per pair
    std::size_t tree_nodes = 0;
    std::vector<std::string> branch_trees;  ///< per pair
    ComputeStats compute;
    std::chrono::nanoseconds total{0};
    /// Pairs whose ideal contains another pair's ideal; not removed.
    std::vector<std::string> containment_warnings;
};

struct Decomposition {
    std::vector<CharPair> pairs;
    IdealGens source;
    DecompositionStats stats;
    /// I_1 = <F>, I_{k+1} = I_k : <G_k> (or I_k : <G_k>^∞); ends with the
    /// unit ideal.
    std::vector<ReducedGB> ideal_chain;
};

/// Ideal-division decomposition: √<F> = ∩ √<G_i> = ∩ √sat(C_i). Empty when
/// <F> is the unit ideal.
Decomposition src_decompose(const IdealGens& f, const DecompOptions& options = {},
                            ComputeContext* ctx = nullptr);

/// (sat(T), wchar_set(sat(T))) for each regular T satisfying the variable
/// ordering condition; DomainError naming the offending index otherwise.
std::vector<CharPair> charpairs_from_regular_sets(std::span<const TriangularSet> sets,
                                                  ComputeContext* ctx = nullptr);

struct VerificationReport {
    bool pairs_valid = true;  ///< every pair meets the SRC contract
    bool forward = true;      ///< each generator of F lies in each √<G_i>
    bool backward = true;     ///< ∩ <G_i> ⊆ √<F>
    std::vector<std::string> failures;

    bool passed() const { return pairs_valid && forward && backward; }
};

VerificationReport verify_decomposition(const IdealGens& f, std::span<const CharPair> pairs,
                                        ComputeContext* ctx = nullptr);
VerificationReport verify_decomposition(const IdealGens& f, const Decomposition& d,
                                        ComputeContext* ctx = nullptr);

}  // namespace srcdec
