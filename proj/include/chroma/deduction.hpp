#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chroma/coloring.hpp"

namespace chroma {

// The deduction engine works on the 18-vertex rim C18(3,4) with the fixed
// palette {1, 2, 3}. Vertices are addressed by their 1-based labels, taken
// modulo 18.
inline constexpr int kRimSize = 18;

int rim_wrap(int label);
bool rim_adjacent(int a, int b);
std::array<int, 4> rim_neighbors(int label);

inline const ColorSet kRimPalette{1, 2, 3};

struct Contradiction {
    enum class Kind {
        Edge,         // two adjacent vertices hold a common color
        EmptyVertex,  // no color left for a vertex
        SingletonRun  // a run of length one, excluded once the no-singleton lemma holds
    };
    Kind kind = Kind::Edge;
    std::vector<int> labels;

    friend bool operator==(const Contradiction&, const Contradiction&) = default;
};

std::string to_string(const Contradiction& c);

/// Partial coloring of the rim. Each vertex is either single-colored (with a
/// candidate set, determined once a single candidate remains) or bi-chromatic
/// (holding exactly two colors).
class DeductionState {
public:
    DeductionState();

    // Places `word` (digits 1-3) on consecutive labels starting at start_label.
    static DeductionState from_word(std::string_view word, int start_label);

    void assign(int label, int color);
    void assign_bichromatic(int label, int c1, int c2);
    void restrict(int label, ColorSet allowed);
    void mark_contradiction(Contradiction c) { forced_ = std::move(c); }

    ColorSet candidates(int label) const { return cand_[idx(label)]; }
    bool is_bichromatic(int label) const { return bi_[idx(label)]; }
    bool is_determined(int label) const { return !bi_[idx(label)] && cand_[idx(label)].size() == 1; }
    std::optional<int> color(int label) const;
    // Colors the vertex certainly holds: its color, its bi-chromatic pair, or {}.
    ColorSet held(int label) const;
    bool has_bichromatic() const;

    bool no_singleton_proved() const noexcept { return no_singleton_proved_; }
    void set_no_singleton_proved(bool v) noexcept { no_singleton_proved_ = v; }

    std::optional<Contradiction> contradiction() const;
    bool consistent() const { return !contradiction(); }
    bool complete() const;

    // Colors as digits ('.' unknown, "[12]" bi-chromatic), label 1 first.
    std::string to_string() const;

    // Applies the color permutation perm[c] (perm[0] unused) to every set.
    DeductionState permuted(const std::array<int, 4>& perm) const;

    friend bool operator==(const DeductionState&, const DeductionState&) = default;

private:
    static std::size_t idx(int label) { return static_cast<std::size_t>(rim_wrap(label) - 1); }

    std::array<ColorSet, kRimSize> cand_;
    std::array<bool, kRimSize> bi_{};
    bool no_singleton_proved_ = false;
    std::optional<Contradiction> forced_;
};

struct Deduction {
    enum class Rule { ThirdColor, RunExtend };
    Rule rule = Rule::ThirdColor;
    int target = 0;
    int color = 0;
    std::vector<int> sources;
};

/// Candidate elimination to a fixed point: every vertex loses the colors held
/// by its neighbors; a vertex next to two distinct colors receives the third.
/// Inconsistency (empty candidates or an edge conflict) is reported in the
/// returned state, not thrown.
DeductionState propagate(const DeductionState& state, std::vector<Deduction>* trace = nullptr);

/// Run extension: a determined pair (i, i+1) of different colors gives
/// color(i) to i-1 and color(i+1) to i+2. Iterated jointly with propagate.
/// Throws LemmaGateError unless the no-singleton lemma is established and no
/// vertex is bi-chromatic.
DeductionState run_extend(const DeductionState& state, std::vector<Deduction>* trace = nullptr);

struct RunViolation {
    enum class Kind { RunTooLong, SameColorBoundary };
    Kind kind;
    int first_label;  // first vertex of the run
    int length;
};

/// Runs of length >= 4 (edge i..i+3 inside the run) and completed runs whose
/// two bounding vertices share a color.
std::vector<RunViolation> check_run_bounds(const DeductionState& state);

struct RefuteConfig {
    int start_label = 7;      // canonical placement of the pattern
    bool run_extend = false;  // enable rule 2 (the engine first proves the lemma)
};

struct ProofNode {
    int branch_color = 0;  // color assumed on the parent's branch vertex; 0 at the root
    DeductionState state;  // after propagation
    std::vector<Deduction> deductions;
    std::optional<Contradiction> contradiction;
    bool has_distinct_triple = false;  // three consecutive pairwise distinct colors
    int branch_label = 0;              // 0 for leaves
    std::vector<ProofNode> children;
};

struct ProofTree {
    std::string pattern;
    int start_label = 0;
    bool refuted = false;
    ProofNode root;
    std::optional<DeductionState> completion;  // set when the pattern extends to a proper 3-coloring
    std::size_t node_count = 0;
    std::size_t branch_count = 0;
};

/// Places the pattern, then alternates propagation with branching on the first
/// undetermined vertex in cyclic order from the pattern start. Refuted iff every
/// leaf is inconsistent.
ProofTree refute_pattern(std::string_view pattern, const RefuteConfig& cfg = {});

/// Proves the no-singleton lemma by refuting 123 and 121 at the canonical
/// position. Throws InternalConsistencyError if either extends.
void establish_no_singleton_lemma();

/// All proper 3-colorings of the rim derived by branch-and-propagate with
/// rules 1-3 and the pair/triple exclusion; cross-checked against the solver's
/// exhaustive enumeration (throws InternalConsistencyError on mismatch).
std::vector<DeductionState> derive_all_3colorings();

/// Converts a complete state to solver colors (label k -> index k-1, color c -> c-1).
SetColoring to_set_coloring(const DeductionState& state);

}  // namespace chroma
