#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chroma/deduction.hpp"
#include "chroma/graph.hpp"

namespace chroma {

enum class StepKind {
    Assign,              // assumption: give colors to vertices (bordered in the strip diagram)
    Propagate,           // {sources} => {targets}: sources hold two colors, targets take the third
    Eliminate,           // targets lose every color held by an adjacent source
    RunExtend,           // pair (i, i+1) of different colors extends to i-1 and i+2
    Branch,              // case split on a vertex; arms may be discharged by a color swap
    CiteRefutedPattern,  // the state contains an instance of an already refuted case
    Contradiction        // an edge joins two vertices of the same color
};

std::string_view to_string(StepKind k);

struct ProofStep;

struct BranchArm {
    int color = 0;
    // Discharged by swapping these two colors, which must map the current state
    // onto itself and this arm onto an explicitly proved one.
    std::optional<std::pair<int, int>> by_swap;
    std::vector<ProofStep> steps;
};

struct ProofStep {
    StepKind kind = StepKind::Propagate;
    std::vector<int> sources;
    std::vector<int> targets;
    std::vector<ColorSet> colors;  // Assign: one set per target
    char cited_case = 0;           // CiteRefutedPattern: 'a' (three distinct) or 'b' (x y x)
    std::vector<BranchArm> arms;   // Branch on targets[0]
    std::string note;

    static ProofStep assign(std::vector<int> targets, std::vector<ColorSet> colors, std::string note = {});
    static ProofStep arrow(std::vector<int> sources, std::vector<int> targets, std::string note = {});
    static ProofStep eliminate(std::vector<int> sources, std::vector<int> targets, std::string note = {});
    static ProofStep extend(int i, std::vector<int> targets, std::string note = {});
    static ProofStep branch(int vertex, std::vector<BranchArm> arms, std::string note = {});
    static ProofStep cite(char case_id, std::vector<int> vertices, std::string note = {});
    static ProofStep conflict(int a, int b, std::string note = {});
};

struct ProofScript {
    char case_id = 0;
    std::string title;
    std::vector<ProofStep> steps;
    std::optional<Edge> expected_contradiction;  // labels
    std::vector<char> expected_reductions;
    bool requires_no_singleton = false;
};

/// The four shipped case scripts a, b, c, d. Throws DomainError otherwise.
ProofScript shipped_script(char case_id);

struct TraceEntry {
    std::size_t step = 0;  // 1-based, in replay order
    int depth = 0;         // branch nesting
    StepKind kind = StepKind::Propagate;
    std::vector<int> sources;
    std::vector<int> targets;
    std::string result;
};

// One line of the strip diagram: the state at a closed leaf.
struct ReplayRow {
    std::string title;
    DeductionState state;
    std::set<int> assumed;   // initial or branch assumptions
    std::set<int> conflict;  // vertices involved in the contradiction
};

struct ReplayReport {
    char case_id = 0;
    bool verified = false;
    std::optional<Edge> contradiction;
    std::vector<char> reduced_to;
    bool lemma_used = false;
    std::vector<TraceEntry> trace;
    std::vector<ReplayRow> rows;

    std::string summary() const;
};

/// Replays a script step by step, validating every step against the state it
/// is applied to. Throws ScriptValidationError naming the first unjustified step.
ReplayReport replay_script(const ProofScript& script, bool no_singleton_proved = false);

/// Replays a shipped case. Case c first replays a and b to establish the
/// no-singleton lemma; cited cases are replayed as well. The outcome must match
/// the script's expected contradiction / reductions.
ReplayReport replay_case(char case_id);

std::string transcript_text(const ReplayReport& report);
std::string strip_svg(const ReplayReport& report);

}  // namespace chroma
