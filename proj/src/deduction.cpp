#include "chroma/deduction.hpp"

#include <algorithm>
#include <set>

#include "chroma/errors.hpp"
#include "chroma/graph.hpp"
#include "chroma/solver.hpp"

namespace chroma {

int rim_wrap(int label) { return ((label - 1) % kRimSize + kRimSize) % kRimSize + 1; }

bool rim_adjacent(int a, int b) {
    const int diff = ((rim_wrap(a) - rim_wrap(b)) % kRimSize + kRimSize) % kRimSize;
    return diff == 3 || diff == 4 || diff == kRimSize - 3 || diff == kRimSize - 4;
}

std::array<int, 4> rim_neighbors(int label) {
    return {rim_wrap(label - 4), rim_wrap(label - 3), rim_wrap(label + 3), rim_wrap(label + 4)};
}

std::string to_string(const Contradiction& c) {
    std::string labels;
    for (std::size_t i = 0; i < c.labels.size(); ++i) labels += (i ? "," : "") + std::to_string(c.labels[i]);
    switch (c.kind) {
        case Contradiction::Kind::Edge: return "edge (" + labels + ") joins equal colors";
        case Contradiction::Kind::EmptyVertex: return "no color left for vertex " + labels;
        case Contradiction::Kind::SingletonRun: return "singleton run at (" + labels + ")";
    }
    return "?";
}

DeductionState::DeductionState() { cand_.fill(kRimPalette); }

DeductionState DeductionState::from_word(std::string_view word, int start_label) {
    DeductionState s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        const char ch = word[i];
        if (ch < '1' || ch > '3') throw DomainError("color word may only contain the digits 1, 2, 3");
        s.assign(start_label + static_cast<int>(i), ch - '0');
    }
    return s;
}

void DeductionState::assign(int label, int color) {
    if (color < 1 || color > 3) throw DomainError("deduction: color must be 1, 2 or 3");
    if (bi_[idx(label)]) throw DomainError("deduction: vertex " + std::to_string(rim_wrap(label)) + " is bi-chromatic");
    cand_[idx(label)] = ColorSet{color};
}

void DeductionState::assign_bichromatic(int label, int c1, int c2) {
    if (c1 < 1 || c1 > 3 || c2 < 1 || c2 > 3 || c1 == c2) {
        throw DomainError("deduction: bi-chromatic vertex needs two distinct colors from {1,2,3}");
    }
    bi_[idx(label)] = true;
    cand_[idx(label)] = ColorSet{c1, c2};
}

void DeductionState::restrict(int label, ColorSet allowed) {
    if (bi_[idx(label)]) throw DomainError("deduction: cannot restrict a bi-chromatic vertex");
    cand_[idx(label)] = cand_[idx(label)] & allowed;
}

std::optional<int> DeductionState::color(int label) const {
    if (!is_determined(label)) return std::nullopt;
    return cand_[idx(label)].min();
}

ColorSet DeductionState::held(int label) const {
    if (bi_[idx(label)] || cand_[idx(label)].size() == 1) return cand_[idx(label)];
    return {};
}

bool DeductionState::has_bichromatic() const {
    return std::any_of(bi_.begin(), bi_.end(), [](bool b) { return b; });
}

std::optional<Contradiction> DeductionState::contradiction() const {
    if (forced_) return forced_;
    for (int a = 1; a <= kRimSize; ++a) {
        for (int b : rim_neighbors(a)) {
            if (b > a && held(a).intersects(held(b))) return Contradiction{Contradiction::Kind::Edge, {a, b}};
        }
    }
    for (int a = 1; a <= kRimSize; ++a) {
        if (cand_[idx(a)].empty()) return Contradiction{Contradiction::Kind::EmptyVertex, {a}};
    }
    return std::nullopt;
}

bool DeductionState::complete() const {
    for (int a = 1; a <= kRimSize; ++a) {
        if (held(a).empty()) return false;
    }
    return true;
}

std::string DeductionState::to_string() const {
    std::string out;
    for (int a = 1; a <= kRimSize; ++a) {
        if (bi_[idx(a)]) {
            out += "[";
            for (int c : cand_[idx(a)].colors()) out += static_cast<char>('0' + c);
            out += "]";
        } else if (auto c = color(a)) {
            out += static_cast<char>('0' + *c);
        } else {
            out += cand_[idx(a)].empty() ? '!' : '.';
        }
    }
    return out;
}

DeductionState DeductionState::permuted(const std::array<int, 4>& perm) const {
    DeductionState out = *this;
    for (std::size_t i = 0; i < cand_.size(); ++i) {
        ColorSet mapped;
        for (int c : cand_[i].colors()) mapped.insert(perm[static_cast<std::size_t>(c)]);
        out.cand_[i] = mapped;
    }
    return out;
}

DeductionState propagate(const DeductionState& state, std::vector<Deduction>* trace) {
    DeductionState s = state;
    while (!s.contradiction()) {
        // Synchronous round: all eliminations read the state from the previous round.
        std::vector<std::pair<int, ColorSet>> updates;
        for (int a = 1; a <= kRimSize; ++a) {
            if (s.is_bichromatic(a) || s.candidates(a).size() < 2) continue;
            ColorSet blocked;
            for (int b : rim_neighbors(a)) blocked = blocked | s.held(b);
            const ColorSet next(s.candidates(a).mask() & ~blocked.mask());
            if (next != s.candidates(a)) updates.emplace_back(a, next);
        }
        if (updates.empty()) break;
        for (const auto& [a, next] : updates) {
            if (trace && next.size() == 1) {
                Deduction d{Deduction::Rule::ThirdColor, a, next.min(), {}};
                for (int b : rim_neighbors(a)) {
                    if (s.held(b).intersects(s.candidates(a))) d.sources.push_back(b);
                }
                std::sort(d.sources.begin(), d.sources.end());
                trace->push_back(std::move(d));
            }
        }
        for (const auto& [a, next] : updates) s.restrict(a, next);
    }
    return s;
}

DeductionState run_extend(const DeductionState& state, std::vector<Deduction>* trace) {
    if (!state.no_singleton_proved()) {
        throw LemmaGateError("run_extend: the no-singleton lemma has not been established");
    }
    if (state.has_bichromatic()) {
        throw LemmaGateError("run_extend: the no-singleton lemma does not cover bi-chromatic vertices");
    }
    DeductionState s = propagate(state, trace);
    while (!s.contradiction()) {
        bool changed = false;
        for (int i = 1; i <= kRimSize && !s.contradiction(); ++i) {
            const auto ci = s.color(i);
            const auto cj = s.color(i + 1);
            if (!ci || !cj || *ci == *cj) continue;
            // {target, color, singleton run cited if the target cannot take it}
            const std::array<std::tuple<int, int, std::vector<int>>, 2> moves = {
                std::tuple{rim_wrap(i - 1), *ci, std::vector<int>{rim_wrap(i - 1), rim_wrap(i), rim_wrap(i + 1)}},
                std::tuple{rim_wrap(i + 2), *cj, std::vector<int>{rim_wrap(i), rim_wrap(i + 1), rim_wrap(i + 2)}}};
            for (const auto& [t, c, cited] : moves) {
                if (s.is_determined(t) && *s.color(t) == c) continue;
                if (!s.candidates(t).contains(c)) {
                    s.mark_contradiction({Contradiction::Kind::SingletonRun, cited});
                    break;
                }
                s.assign(t, c);
                changed = true;
                if (trace) trace->push_back({Deduction::Rule::RunExtend, t, c, {rim_wrap(i), rim_wrap(i + 1)}});
            }
        }
        if (!changed) break;
        s = propagate(s, trace);
    }
    return s;
}

namespace {

struct Run {
    int first;
    int length;
    bool completed;  // both bounding vertices determined
};

// Maximal runs of determined single colors, in cyclic order from label 1.
std::vector<Run> runs_of(const DeductionState& s) {
    std::vector<Run> runs;
    bool all_same = true;
    for (int a = 1; a <= kRimSize; ++a) {
        if (!s.is_determined(a) || s.color(a) != s.color(1)) all_same = false;
    }
    if (all_same) return {{1, kRimSize, false}};
    for (int a = 1; a <= kRimSize; ++a) {
        const auto c = s.color(a);
        if (!c || s.color(a - 1) == c) continue;
        int len = 1;
        while (len < kRimSize && s.color(a + len) == c) ++len;
        runs.push_back({a, len, s.is_determined(a - 1) && s.is_determined(a + len)});
    }
    return runs;
}

bool has_distinct_triple(const DeductionState& s) {
    for (int a = 1; a <= kRimSize; ++a) {
        const auto x = s.color(a), y = s.color(a + 1), z = s.color(a + 2);
        if (x && y && z && *x != *y && *y != *z && *x != *z) return true;
    }
    return false;
}

// A completed pair directly followed by a completed triple, or the reverse.
bool has_mixed_runs(const DeductionState& s) {
    const auto runs = runs_of(s);
    for (const Run& r : runs) {
        if (!r.completed || (r.length != 2 && r.length != 3)) continue;
        const int next_first = rim_wrap(r.first + r.length);
        for (const Run& q : runs) {
            if (q.first == next_first && q.completed && q.length + r.length == 5) return true;
        }
    }
    return false;
}

class Refuter {
public:
    Refuter(const RefuteConfig& cfg, ProofTree& tree) : cfg_(cfg), tree_(tree) {}

    ProofNode expand(const DeductionState& start, int branch_color) {
        ProofNode node;
        node.branch_color = branch_color;
        ++tree_.node_count;
        node.state = cfg_.run_extend ? run_extend(start, &node.deductions) : propagate(start, &node.deductions);
        node.has_distinct_triple = has_distinct_triple(node.state);
        if (auto c = node.state.contradiction()) {
            node.contradiction = std::move(c);
            return node;
        }
        if (node.state.complete()) {
            tree_.completion = node.state;
            return node;
        }
        for (int step = 0; step < kRimSize; ++step) {
            const int a = rim_wrap(cfg_.start_label + step);
            if (!node.state.held(a).empty()) continue;
            node.branch_label = a;
            break;
        }
        ++tree_.branch_count;
        for (int c : node.state.candidates(node.branch_label).colors()) {
            DeductionState child = node.state;
            child.assign(node.branch_label, c);
            node.children.push_back(expand(child, c));
            if (tree_.completion) break;
        }
        return node;
    }

private:
    const RefuteConfig& cfg_;
    ProofTree& tree_;
};

}  // namespace

std::vector<RunViolation> check_run_bounds(const DeductionState& state) {
    std::vector<RunViolation> out;
    for (const Run& r : runs_of(state)) {
        if (r.length >= 4) out.push_back({RunViolation::Kind::RunTooLong, r.first, r.length});
        if (r.completed && r.length < 4 && state.color(r.first - 1) == state.color(r.first + r.length)) {
            out.push_back({RunViolation::Kind::SameColorBoundary, r.first, r.length});
        }
    }
    return out;
}

ProofTree refute_pattern(std::string_view pattern, const RefuteConfig& cfg) {
    if (pattern.empty() || pattern.size() > 9) throw DomainError("refute_pattern: pattern length must be 1..9");
    DeductionState start = DeductionState::from_word(pattern, cfg.start_label);
    if (cfg.run_extend) {
        establish_no_singleton_lemma();
        start.set_no_singleton_proved(true);
    }
    ProofTree tree;
    tree.pattern = std::string(pattern);
    tree.start_label = rim_wrap(cfg.start_label);
    tree.root = Refuter(cfg, tree).expand(start, 0);
    tree.refuted = !tree.completion;
    return tree;
}

void establish_no_singleton_lemma() {
    for (const char* p : {"123", "121"}) {
        if (!refute_pattern(p).refuted) {
            throw InternalConsistencyError(std::string("no-singleton lemma: pattern ") + p + " extends to a 3-coloring");
        }
    }
}

SetColoring to_set_coloring(const DeductionState& state) {
    SetColoring out;
    for (int a = 1; a <= kRimSize; ++a) {
        ColorSet s;
        for (int c : state.held(a).colors()) s.insert(c - 1);
        out.push_back(s);
    }
    return out;
}

namespace {

void collect_colorings(const DeductionState& start, std::vector<DeductionState>& out) {
    const DeductionState s = run_extend(start);
    if (s.contradiction() || !check_run_bounds(s).empty() || has_mixed_runs(s)) return;
    if (s.complete()) {
        out.push_back(s);
        return;
    }
    int branch = 1;
    while (!s.held(branch).empty()) ++branch;
    for (int c : s.candidates(branch).colors()) {
        DeductionState child = s;
        child.assign(branch, c);
        collect_colorings(child, out);
    }
}

}  // namespace

std::vector<DeductionState> derive_all_3colorings() {
    establish_no_singleton_lemma();
    if (!refute_pattern("331122233", {5, true}).refuted) {
        throw InternalConsistencyError("pairs and triples: pattern 331122233 extends to a 3-coloring");
    }
    DeductionState start;
    start.set_no_singleton_proved(true);
    std::vector<DeductionState> derived;
    collect_colorings(start, derived);

    std::set<SetColoring> from_rules;
    for (const auto& s : derived) from_rules.insert(to_set_coloring(s));
    const auto enumerated = enumerate_colorings(build_rim18(), 3);
    const std::set<SetColoring> from_solver(enumerated.begin(), enumerated.end());
    if (from_rules != from_solver || from_rules.size() != derived.size()) {
        throw InternalConsistencyError("derive_all_3colorings: rule-based derivation found " +
                                       std::to_string(derived.size()) + " colorings, solver enumeration " +
                                       std::to_string(from_solver.size()));
    }
    std::sort(derived.begin(), derived.end(),
              [](const DeductionState& a, const DeductionState& b) { return a.to_string() < b.to_string(); });
    return derived;
}

}  // namespace chroma
